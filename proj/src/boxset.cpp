#include "gabortile/boxset.hpp"

#include <algorithm>
#include <map>

#include "gabortile/error.hpp"

namespace gabortile {

Rat Box::volume() const {
  Rat v = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
  return v;
}

bool Box::contains(const RatVec& x) const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (x[i] < lo[i] || x[i] >= hi[i]) return false;
  return true;
}

Box make_box(RatVec lo, RatVec hi) {
  if (lo.size() != hi.size()) throw Error(ErrorKind::DimMismatch, "box corner dimensions differ");
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (lo[i] >= hi[i])
      throw Error(ErrorKind::Degenerate, "box side " + std::to_string(i) + " is empty");
  return Box{std::move(lo), std::move(hi)};
}

std::optional<Box> intersect(const Box& a, const Box& b) {
  Box out{a.lo, a.hi};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (b.lo[i] > out.lo[i]) out.lo[i] = b.lo[i];
    if (b.hi[i] < out.hi[i]) out.hi[i] = b.hi[i];
    if (out.lo[i] >= out.hi[i]) return std::nullopt;
  }
  return out;
}

std::vector<Box> subtract(const Box& a, const Box& b) {
  if (!intersect(a, b)) return {a};
  std::vector<Box> out;
  Box rest = a;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (rest.lo[i] < b.lo[i]) {
      Box below = rest;
      below.hi[i] = b.lo[i];
      out.push_back(below);
      rest.lo[i] = b.lo[i];
    }
    if (rest.hi[i] > b.hi[i]) {
      Box above = rest;
      above.lo[i] = b.hi[i];
      out.push_back(above);
      rest.hi[i] = b.hi[i];
    }
  }
  return out;
}

BoxSet BoxSet::from_boxes(std::size_t dim, const std::vector<Box>& boxes) {
  return normalize(dim, boxes);
}

BoxSet BoxSet::from_disjoint(std::size_t dim, std::vector<Box> boxes) {
  BoxSet k(dim);
  for (const auto& b : boxes)
    if (b.dim() != dim) throw Error(ErrorKind::DimMismatch, "box dimension differs from set");
  k.boxes_ = std::move(boxes);
  return k;
}

bool BoxSet::contains(const RatVec& x) const {
  if (x.size() != dim_) throw Error(ErrorKind::DimMismatch, "point dimension");
  for (const auto& b : boxes_)
    if (b.contains(x)) return true;
  return false;
}

Rat BoxSet::measure() const {
  Rat m = 0;
  for (const auto& b : boxes_) m += b.volume();
  return m;
}

std::optional<Box> BoxSet::bounding_box() const {
  if (boxes_.empty()) return std::nullopt;
  Box bb = boxes_[0];
  for (const auto& b : boxes_)
    for (std::size_t i = 0; i < dim_; ++i) {
      if (b.lo[i] < bb.lo[i]) bb.lo[i] = b.lo[i];
      if (b.hi[i] > bb.hi[i]) bb.hi[i] = b.hi[i];
    }
  return bb;
}

BoxSet normalize(std::size_t dim, const std::vector<Box>& boxes) {
  std::vector<Box> result;
  for (const auto& box : boxes) {
    if (box.dim() != dim) throw Error(ErrorKind::DimMismatch, "box dimension differs from set");
    bool empty = false;
    for (std::size_t i = 0; i < dim; ++i) empty = empty || box.lo[i] >= box.hi[i];
    if (empty) continue;
    std::vector<Box> pieces{box};
    for (const auto& r : result) {
      std::vector<Box> next;
      for (const auto& p : pieces)
        for (auto& q : subtract(p, r)) next.push_back(std::move(q));
      pieces = std::move(next);
      if (pieces.empty()) break;
    }
    for (auto& p : pieces) result.push_back(std::move(p));
  }
  return BoxSet::from_disjoint(dim, std::move(result));
}

BoxSet translate(const BoxSet& k, const RatVec& v) {
  if (v.size() != k.dim()) throw Error(ErrorKind::DimMismatch, "translation dimension");
  std::vector<Box> boxes;
  boxes.reserve(k.boxes().size());
  for (const auto& b : k.boxes()) boxes.push_back(Box{add(b.lo, v), add(b.hi, v)});
  return BoxSet::from_disjoint(k.dim(), std::move(boxes));
}

BoxSet intersect(const BoxSet& a, const BoxSet& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimMismatch, "intersection dimension");
  std::vector<Box> out;
  for (const auto& x : a.boxes())
    for (const auto& y : b.boxes())
      if (auto z = intersect(x, y)) out.push_back(std::move(*z));
  return BoxSet::from_disjoint(a.dim(), std::move(out));
}

BoxSet difference(const BoxSet& a, const BoxSet& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimMismatch, "difference dimension");
  std::vector<Box> out;
  for (const auto& x : a.boxes()) {
    std::vector<Box> pieces{x};
    for (const auto& y : b.boxes()) {
      std::vector<Box> next;
      for (const auto& p : pieces)
        for (auto& q : subtract(p, y)) next.push_back(std::move(q));
      pieces = std::move(next);
      if (pieces.empty()) break;
    }
    for (auto& p : pieces) out.push_back(std::move(p));
  }
  return BoxSet::from_disjoint(a.dim(), std::move(out));
}

BoxSet unite(const BoxSet& a, const BoxSet& b) {
  BoxSet rest = difference(b, a);
  std::vector<Box> boxes = a.boxes();
  boxes.insert(boxes.end(), rest.boxes().begin(), rest.boxes().end());
  return BoxSet::from_disjoint(a.dim(), std::move(boxes));
}

Rat measure(const BoxSet& k) { return k.measure(); }

bool same_set(const BoxSet& a, const BoxSet& b) {
  return difference(a, b).empty() && difference(b, a).empty();
}

BoxSet linear_image(const BoxSet& k, const RatMatrix& m) {
  if (m.rows() != k.dim() || !m.is_monomial())
    throw Error(ErrorKind::NonBoxImage, "image of a box under " + m.to_string() + " is not a box");
  const std::size_t d = k.dim();
  std::vector<std::size_t> source(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      if (m(r, c) != 0) source[r] = c;
  std::vector<Box> out;
  for (const auto& b : k.boxes()) {
    Box img{RatVec(d), RatVec(d)};
    for (std::size_t r = 0; r < d; ++r) {
      const Rat& s = m(r, source[r]);
      Rat x = s * b.lo[source[r]], y = s * b.hi[source[r]];
      // A negative scale flips [lo, hi) to (y, x], equal up to a null set.
      img.lo[r] = s > 0 ? x : y;
      img.hi[r] = s > 0 ? y : x;
    }
    out.push_back(std::move(img));
  }
  return BoxSet::from_disjoint(d, std::move(out));
}

BoxSet coalesce(const BoxSet& k) {
  const std::size_t d = k.dim();
  std::vector<Box> boxes = k.boxes();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j < d; ++j) {
      auto key_less = [j, d](const Box& a, const Box& b) {
        for (std::size_t i = 0; i < d; ++i) {
          if (i == j) continue;
          if (a.lo[i] != b.lo[i]) return a.lo[i] < b.lo[i];
          if (a.hi[i] != b.hi[i]) return a.hi[i] < b.hi[i];
        }
        return a.lo[j] < b.lo[j];
      };
      std::sort(boxes.begin(), boxes.end(), key_less);
      std::vector<Box> merged;
      for (auto& b : boxes) {
        if (!merged.empty()) {
          Box& last = merged.back();
          bool same_slab = true;
          for (std::size_t i = 0; i < d && same_slab; ++i)
            if (i != j) same_slab = last.lo[i] == b.lo[i] && last.hi[i] == b.hi[i];
          if (same_slab && last.hi[j] == b.lo[j]) {
            last.hi[j] = b.hi[j];
            changed = true;
            continue;
          }
        }
        merged.push_back(std::move(b));
      }
      boxes = std::move(merged);
    }
  }
  std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  });
  return BoxSet::from_disjoint(d, std::move(boxes));
}

Box fundamental_box(const RatMatrix& g) {
  if (!g.square() || !g.is_lower_triangular())
    throw Error(ErrorKind::NotLowerTriangular, "generator " + g.to_string() + " is not lower triangular");
  Box f{RatVec(g.rows(), Rat(0)), RatVec(g.rows())};
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (g(i, i) <= 0)
      throw Error(ErrorKind::NotLowerTriangular, "generator diagonal must be positive");
    f.hi[i] = g(i, i);
  }
  return f;
}

Reduction reduce_mod(const BoxSet& k, const RatMatrix& g) {
  Reduction red;
  red.domain = fundamental_box(g);
  red.generator = g;
  const std::size_t d = k.dim();
  if (g.rows() != d) throw Error(ErrorKind::DimMismatch, "lattice and set dimensions differ");
  for (const auto& box : k.boxes()) {
    std::vector<std::pair<Box, IntVec>> work{{box, IntVec(d, 0)}};
    for (std::size_t i = 0; i < d; ++i) {
      const Rat& gi = g(i, i);
      std::vector<std::pair<Box, IntVec>> next;
      for (const auto& [b, coeffs] : work) {
        const long long first = to_ll(floor_rat(b.lo[i] / gi));
        const long long last = to_ll(ceil_rat(b.hi[i] / gi));
        for (long long j = first; j < last; ++j) {
          Rat cut_lo = gi * to_rat(j), cut_hi = gi * to_rat(j + 1);
          Rat seg_lo = std::max(b.lo[i], cut_lo);
          Rat seg_hi = std::min(b.hi[i], cut_hi);
          if (seg_lo >= seg_hi) continue;
          Box piece = b;
          piece.lo[i] = seg_lo;
          piece.hi[i] = seg_hi;
          if (j != 0) {
            for (std::size_t r = i; r < d; ++r) {
              Rat step = g(r, i) * to_rat(j);
              piece.lo[r] -= step;
              piece.hi[r] -= step;
            }
          }
          IntVec c = coeffs;
          c[i] += j;
          next.emplace_back(std::move(piece), std::move(c));
        }
      }
      work = std::move(next);
    }
    for (auto& [b, coeffs] : work)
      red.pieces.push_back(ReducedPiece{std::move(b), coeffs, mul_int(g, coeffs)});
  }
  return red;
}

Reduction reduce_mod(const BoxSet& k, const RatLattice& lattice) {
  return reduce_mod(k, canonicalize(lattice).generator());
}

std::vector<OverlayCell> overlay(const Reduction& red) {
  const std::size_t d = red.domain.dim();
  std::vector<std::vector<Rat>> breaks(d);
  for (std::size_t i = 0; i < d; ++i) {
    breaks[i] = {red.domain.lo[i], red.domain.hi[i]};
    for (const auto& p : red.pieces) {
      breaks[i].push_back(p.residue.lo[i]);
      breaks[i].push_back(p.residue.hi[i]);
    }
    std::sort(breaks[i].begin(), breaks[i].end());
    breaks[i].erase(std::unique(breaks[i].begin(), breaks[i].end()), breaks[i].end());
  }
  std::vector<std::size_t> extent(d), stride(d);
  std::size_t total = 1;
  for (std::size_t i = d; i-- > 0;) {
    extent[i] = breaks[i].size() - 1;
    stride[i] = total;
    total *= extent[i];
  }
  std::vector<std::vector<std::size_t>> cover(total);
  for (std::size_t p = 0; p < red.pieces.size(); ++p) {
    const Box& b = red.pieces[p].residue;
    std::vector<std::size_t> from(d), to(d);
    for (std::size_t i = 0; i < d; ++i) {
      from[i] = std::lower_bound(breaks[i].begin(), breaks[i].end(), b.lo[i]) - breaks[i].begin();
      to[i] = std::lower_bound(breaks[i].begin(), breaks[i].end(), b.hi[i]) - breaks[i].begin();
    }
    std::vector<std::size_t> idx = from;
    while (true) {
      std::size_t flat = 0;
      for (std::size_t i = 0; i < d; ++i) flat += idx[i] * stride[i];
      cover[flat].push_back(p);
      std::size_t i = d;
      bool done = true;
      while (i-- > 0) {
        if (++idx[i] < to[i]) {
          done = false;
          break;
        }
        idx[i] = from[i];
      }
      if (done) break;
    }
  }
  std::vector<OverlayCell> cells;
  cells.reserve(total);
  for (std::size_t flat = 0; flat < total; ++flat) {
    Box cell{RatVec(d), RatVec(d)};
    std::size_t rem = flat;
    for (std::size_t i = 0; i < d; ++i) {
      std::size_t at = rem / stride[i];
      rem %= stride[i];
      cell.lo[i] = breaks[i][at];
      cell.hi[i] = breaks[i][at + 1];
    }
    cells.push_back(OverlayCell{std::move(cell), std::move(cover[flat])});
  }
  return cells;
}

std::optional<long> multitile_level_direct(const BoxSet& k, const RatLattice& lattice) {
  if (k.empty()) return std::nullopt;
  auto cells = overlay(reduce_mod(k, lattice));
  const std::size_t n = cells.front().pieces.size();
  if (n == 0) return std::nullopt;
  for (const auto& c : cells)
    if (c.pieces.size() != n) return std::nullopt;
  return static_cast<long>(n);
}

bool is_packing(const BoxSet& k, const RatLattice& lattice) {
  if (k.empty()) return true;
  for (const auto& c : overlay(reduce_mod(k, lattice)))
    if (c.pieces.size() > 1) return false;
  return true;
}

std::vector<KSClass> ks_decomposition(const BoxSet& k, const RatLattice& lattice) {
  Reduction red = reduce_mod(k, lattice);
  auto cells = overlay(red);
  if (k.empty()) throw Error(ErrorKind::NotAMultiTile, "empty set");
  const std::size_t n = cells.front().pieces.size();
  std::map<std::vector<RatVec>, std::vector<Box>> classes;
  for (auto& c : cells) {
    if (c.pieces.size() != n || n == 0)
      throw Error(ErrorKind::NotAMultiTile, "covering multiplicity is not constant on " +
                                                to_string(red.domain));
    std::vector<RatVec> s;
    for (std::size_t p : c.pieces) s.push_back(red.pieces[p].shift);
    std::sort(s.begin(), s.end(), [](const RatVec& a, const RatVec& b) { return lex_compare(a, b) < 0; });
    classes[s].push_back(std::move(c.cell));
  }
  std::vector<KSClass> out;
  for (auto& [s, boxes] : classes)
    out.push_back(KSClass{s, coalesce(BoxSet::from_disjoint(k.dim(), std::move(boxes)))});
  std::sort(out.begin(), out.end(), [](const KSClass& a, const KSClass& b) {
    for (std::size_t i = 0; i < a.S.size(); ++i)
      if (int c = lex_compare(a.S[i], b.S[i])) return c < 0;
    return false;
  });
  return out;
}

RatVec packing_shift(const BoxSet& k, const RatLattice& lattice) {
  auto classes = ks_decomposition(k, lattice);
  if (classes.front().S.size() == 1)
    throw Error(ErrorKind::LevelOne, "the set tiles at level 1");
  RatVec best;
  for (const auto& c : classes) {
    RatVec spread = sub(c.S.back(), c.S.front());
    if (best.empty() || lex_compare(spread, best) > 0) best = spread;
  }
  return best;
}

std::vector<BoxSet> fd_decomposition(const BoxSet& k, const RatLattice& lattice) {
  auto classes = ks_decomposition(k, lattice);
  const std::size_t n = classes.front().S.size();
  std::vector<BoxSet> out;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Box> boxes;
    for (const auto& c : classes) {
      BoxSet moved = translate(c.part, c.S[j]);
      boxes.insert(boxes.end(), moved.boxes().begin(), moved.boxes().end());
    }
    out.push_back(coalesce(BoxSet::from_disjoint(k.dim(), std::move(boxes))));
  }
  return out;
}

namespace {

Box nested_interval(long long k) {
  const long long n = k < 0 ? -k : k;
  Rat lo = 0, hi = 1;
  if (n >= 1) {
    Int p1 = 1, p2 = 1;
    mpz_mul_2exp(p1.get_mpz_t(), p1.get_mpz_t(), static_cast<mp_bitcnt_t>(n - 1));
    mpz_mul_2exp(p2.get_mpz_t(), p2.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
    lo = 1 - Rat(1) / Rat(p1);
    hi = 1 - Rat(1) / Rat(p2);
  }
  return Box{{lo + to_rat(k)}, {hi + to_rat(k)}};
}

}  // namespace

BoxSet nested_interval_set(const std::optional<std::pair<Rat, Rat>>& window) {
  if (!window)
    throw Error(ErrorKind::Unbounded, "the nested-interval set is unbounded; give a truncation window");
  const auto& [a, b] = *window;
  if (a >= b) throw Error(ErrorKind::Degenerate, "empty truncation window");
  Box w{{a}, {b}};
  std::vector<Box> boxes;
  for (long long k = to_ll(floor_rat(a)) - 1; k <= to_ll(ceil_rat(b)); ++k)
    if (auto piece = intersect(nested_interval(k), w)) boxes.push_back(*piece);
  return BoxSet::from_disjoint(1, std::move(boxes));
}

std::string to_string(const Box& b) {
  std::string s;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    if (i) s += "x";
    s += "[" + format_rat(b.lo[i]) + "," + format_rat(b.hi[i]) + ")";
  }
  return s;
}

std::string to_string(const BoxSet& k) {
  if (k.empty()) return "{}";
  std::string s;
  for (std::size_t i = 0; i < k.boxes().size(); ++i) {
    if (i) s += " u ";
    s += to_string(k.boxes()[i]);
  }
  return s;
}

}  // namespace gabortile
