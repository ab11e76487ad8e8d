#include "gabortile/polygon.hpp"

#include <algorithm>
#include <numeric>

#include "gabortile/error.hpp"
#include "gabortile/fourier.hpp"

namespace gabortile {

namespace {

Rat cross(const RatVec& o, const RatVec& a, const RatVec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

void sort_unique(std::vector<Rat>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Calls f(t) for every lattice vector t = G k in the closed box [lo, hi]
// (lower-triangular G) or for a superset of them (general G).
template <typename F>
void for_each_in_box(const RatMatrix& g, const RatVec& lo, const RatVec& hi, F&& f) {
  auto span = [](const Rat& a, const Rat& b, const Rat& step) {
    Rat u = a / step, v = b / step;
    if (v < u) std::swap(u, v);
    return std::make_pair(to_ll(ceil_rat(u)), to_ll(floor_rat(v)));
  };
  if (g(0, 1) == 0) {
    auto [i0, i1] = span(lo[0], hi[0], g(0, 0));
    for (long long i = i0; i <= i1; ++i) {
      const Rat ri = to_rat(i);
      const Rat base = g(1, 0) * ri;
      auto [j0, j1] = span(lo[1] - base, hi[1] - base, g(1, 1));
      for (long long j = j0; j <= j1; ++j) f(RatVec{g(0, 0) * ri, base + g(1, 1) * to_rat(j)});
    }
    return;
  }
  const RatMatrix g_inv = g.inverse();
  long long klo[2] = {0, 0}, khi[2] = {0, 0};
  for (int c = 0; c < 4; ++c) {
    RatVec k = g_inv * RatVec{(c & 1) ? hi[0] : lo[0], (c & 2) ? hi[1] : lo[1]};
    for (int i = 0; i < 2; ++i) {
      long long fl = to_ll(floor_rat(k[i])), ce = to_ll(ceil_rat(k[i]));
      if (c == 0 || fl < klo[i]) klo[i] = fl;
      if (c == 0 || ce > khi[i]) khi[i] = ce;
    }
  }
  for (long long i = klo[0]; i <= khi[0]; ++i)
    for (long long j = klo[1]; j <= khi[1]; ++j) f(g * RatVec{to_rat(i), to_rat(j)});
}

void require_plane(const RatLattice& lattice, const RatVec& x) {
  if (lattice.dim() != 2 || x.size() != 2) throw Error(ErrorKind::DimMismatch, "polygons live in the plane");
}

// Segment of a translated edge clipped to the closed fundamental box, x0 <= x1.
struct Segment {
  Rat x0, y0, x1, y1;
};

std::optional<Segment> clip_to_box(const RatVec& a, const RatVec& b, const Rat& w, const Rat& h) {
  Rat s0 = 0, s1 = 1;
  const Rat dx = b[0] - a[0], dy = b[1] - a[1];
  // Constraints p * s <= q for the four sides.
  const Rat ps[4] = {-dx, dx, -dy, dy};
  const Rat qs[4] = {a[0], w - a[0], a[1], h - a[1]};
  for (int i = 0; i < 4; ++i) {
    if (ps[i] == 0) {
      if (qs[i] < 0) return std::nullopt;
      continue;
    }
    Rat t = qs[i] / ps[i];
    if (ps[i] < 0) {
      if (t > s0) s0 = t;
    } else if (t < s1) {
      s1 = t;
    }
  }
  if (s0 >= s1) return std::nullopt;
  Segment s{a[0] + s0 * dx, a[1] + s0 * dy, a[0] + s1 * dx, a[1] + s1 * dy};
  if (s.x1 < s.x0) {
    std::swap(s.x0, s.x1);
    std::swap(s.y0, s.y1);
  }
  return s;
}

struct Line {
  Rat slope, intercept;
  Rat at(const Rat& x) const { return slope * x + intercept; }
};

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<RatVec> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw Error(ErrorKind::Degenerate, "a polygon needs at least 3 vertices");
  for (const auto& v : vertices_)
    if (v.size() != 2) throw Error(ErrorKind::DimMismatch, "polygon vertices must be 2-vectors");
  // Every other vertex strictly left of every edge: strictly convex, CCW, simple.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || j == (i + 1) % n) continue;
      if (cross(vertices_[i], vertices_[(i + 1) % n], vertices_[j]) <= 0)
        throw Error(ErrorKind::Degenerate, "vertices are not strictly convex in counter-clockwise order");
    }
}

int ConvexPolygon::locate(const RatVec& x) const {
  bool boundary = false;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    Rat c = cross(vertex(i), vertex(i + 1), x);
    if (c < 0) return -1;
    if (c == 0) boundary = true;
  }
  return boundary ? 0 : 1;
}

std::pair<RatVec, RatVec> ConvexPolygon::bounds() const {
  RatVec lo = vertices_[0], hi = vertices_[0];
  for (const auto& v : vertices_)
    for (int i = 0; i < 2; ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (v[i] > hi[i]) hi[i] = v[i];
    }
  return {lo, hi};
}

bool same_polygon(const ConvexPolygon& a, const ConvexPolygon& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t shift = 0; shift < a.size(); ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = a.vertex(i) == b.vertex(i + shift);
    if (ok) return true;
  }
  return false;
}

ConvexPolygon octagon() {
  return ConvexPolygon({{2, -1}, {2, 1}, {1, 2}, {-1, 2}, {-2, 1}, {-2, -1}, {-1, -2}, {1, -2}});
}

Rat area(const ConvexPolygon& p) {
  Rat twice = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const RatVec& a = p.vertex(i);
    const RatVec& b = p.vertex(i + 1);
    twice += a[0] * b[1] - a[1] * b[0];
  }
  return twice / 2;
}

ConvexPolygon translate(const ConvexPolygon& p, const RatVec& v) {
  if (v.size() != 2) throw Error(ErrorKind::DimMismatch, "translation must be a 2-vector");
  std::vector<RatVec> out;
  for (const auto& x : p.vertices()) out.push_back(add(x, v));
  return ConvexPolygon(std::move(out));
}

ConvexPolygon linear_image(const ConvexPolygon& p, const RatMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw Error(ErrorKind::DimMismatch, "map must be 2 x 2");
  const Rat det = m.determinant();
  if (det == 0) throw Error(ErrorKind::SingularMatrix, "map is singular");
  std::vector<RatVec> out;
  for (const auto& x : p.vertices()) out.push_back(m * x);
  if (det < 0) std::reverse(out.begin(), out.end());
  return ConvexPolygon(std::move(out));
}

std::optional<ConvexPolygon> intersect_convex(const ConvexPolygon& a, const ConvexPolygon& b) {
  std::vector<RatVec> poly = a.vertices();
  for (std::size_t e = 0; e < b.size() && !poly.empty(); ++e) {
    const RatVec& p = b.vertex(e);
    const RatVec& q = b.vertex(e + 1);
    std::vector<RatVec> next;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const RatVec& s = poly[i];
      const RatVec& t = poly[(i + 1) % poly.size()];
      Rat cs = cross(p, q, s), ct = cross(p, q, t);
      if (cs >= 0) next.push_back(s);
      if ((cs > 0 && ct < 0) || (cs < 0 && ct > 0)) {
        Rat lambda = cs / (cs - ct);
        next.push_back({s[0] + lambda * (t[0] - s[0]), s[1] + lambda * (t[1] - s[1])});
      }
    }
    poly = std::move(next);
  }
  // Drop repeated and collinear vertices left by the clipping.
  bool changed = true;
  while (changed && poly.size() >= 3) {
    changed = false;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const RatVec& prev = poly[(i + poly.size() - 1) % poly.size()];
      const RatVec& next = poly[(i + 1) % poly.size()];
      if (poly[i] == next || cross(prev, poly[i], next) == 0) {
        poly.erase(poly.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  if (poly.size() < 3) return std::nullopt;
  return ConvexPolygon(std::move(poly));
}

long multiplicity_at_point(const ConvexPolygon& p, const RatLattice& lattice, const RatVec& x) {
  require_plane(lattice, x);
  auto [lo, hi] = p.bounds();
  long count = 0;
  for_each_in_box(lattice.generator(), sub(lo, x), sub(hi, x), [&](const RatVec& t) {
    int where = p.locate(add(x, t));
    if (where == 0) throw Error(ErrorKind::OnBoundary, format_vec(x) + " lies on a translated edge");
    if (where > 0) ++count;
  });
  return count;
}

ArrangementResult multitile_verify_arrangement(const ConvexPolygon& p, const RatLattice& lattice,
                                               bool stop_at_mismatch) {
  if (lattice.dim() != 2) throw Error(ErrorKind::DimMismatch, "lattice must be planar");
  if (!lattice.generator().is_lower_triangular())
    throw Error(ErrorKind::NotLowerTriangular, "arrangement verification needs a lower-triangular generator");
  const RatMatrix h = canonical_generator(lattice.generator()).H;
  const RatLattice lat(h);
  const Rat w = h(0, 0), ht = h(1, 1);

  // Translates P + t meeting the closed box [0, w] x [0, ht].
  auto [lo, hi] = p.bounds();
  std::vector<Segment> segments;
  std::vector<Rat> xs{0, w};
  for_each_in_box(h, {-hi[0], -hi[1]}, {w - lo[0], ht - lo[1]}, [&](const RatVec& t) {
    for (std::size_t e = 0; e < p.size(); ++e) {
      auto s = clip_to_box(add(p.vertex(e), t), add(p.vertex(e + 1), t), w, ht);
      if (!s) continue;
      xs.push_back(s->x0);
      xs.push_back(s->x1);
      if (s->x0 != s->x1) segments.push_back(*s);
    }
  });
  sort_unique(xs);

  ArrangementResult out;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    const Rat& a = xs[k];
    const Rat& b = xs[k + 1];
    // Non-vertical segments spanning the slab; none ends strictly inside it.
    std::vector<Line> active;
    for (const auto& s : segments)
      if (s.x0 <= a && s.x1 >= b) {
        Rat slope = (s.y1 - s.y0) / (s.x1 - s.x0);
        active.push_back({slope, s.y0 - slope * s.x0});
      }
    std::vector<Rat> cuts{a, b};
    for (std::size_t i = 0; i < active.size(); ++i)
      for (std::size_t j = i + 1; j < active.size(); ++j) {
        if (active[i].slope == active[j].slope) continue;
        Rat x = (active[j].intercept - active[i].intercept) / (active[i].slope - active[j].slope);
        if (x > a && x < b) cuts.push_back(x);
      }
    sort_unique(cuts);
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      const Rat mid = (cuts[c] + cuts[c + 1]) / 2;
      const Rat width = cuts[c + 1] - cuts[c];
      // Bounding lines ordered by height at the midpoint; lines that agree
      // there coincide on the whole sub-slab.
      std::vector<std::pair<Rat, Line>> bounds{{0, Line{0, 0}}, {ht, Line{0, ht}}};
      for (const auto& l : active) bounds.push_back({l.at(mid), l});
      std::sort(bounds.begin(), bounds.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
      bounds.erase(std::unique(bounds.begin(), bounds.end(),
                               [](const auto& u, const auto& v) { return u.first == v.first; }),
                   bounds.end());
      for (std::size_t y = 0; y + 1 < bounds.size(); ++y) {
        const Line& below = bounds[y].second;
        const Line& above = bounds[y + 1].second;
        // Inside a trapezoid no edge passes through the vertical midpoint, so
        // the sample is off every translated edge.
        ArrangementCell cell{{mid, (bounds[y].first + bounds[y + 1].first) / 2},
                             width * (bounds[y + 1].first - bounds[y].first),
                             0,
                             {{cuts[c], below.at(cuts[c])},
                              {cuts[c + 1], below.at(cuts[c + 1])},
                              {cuts[c + 1], above.at(cuts[c + 1])},
                              {cuts[c], above.at(cuts[c])}}};
        try {
          cell.multiplicity = multiplicity_at_point(p, lat, cell.sample);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::OnBoundary) throw;
          throw Error(ErrorKind::InvariantViolation, std::string("cell sample on an edge: ") + e.what());
        }
        out.covered_area += cell.area;
        if (!out.cells.empty() && !out.witness && cell.multiplicity != out.cells.front().multiplicity) {
          out.witness = std::make_pair(out.cells.front(), cell);
          if (stop_at_mismatch) {
            out.cells.push_back(std::move(cell));
            out.complete = false;
            return out;
          }
        }
        out.cells.push_back(std::move(cell));
      }
    }
  }
  if (!out.witness && !out.cells.empty()) out.level = out.cells.front().multiplicity;
  return out;
}

namespace {

BoxSet unit_square() { return BoxSet::from_disjoint(2, {Box{{0, 0}, {1, 1}}}); }

OctagonCandidate transport(const NormalForm& form, const RatVec& xi, const RatMatrix& q) {
  OctagonCandidate c{form, xi, false, {}, {}, {}, 0, {}, false, std::nullopt};
  const RatMatrix qt = q.transpose();
  c.B = qt.inverse() * form.matrix;
  // chi_P^(xi) = phase * chi_cube^(Q^t xi): the witness for B is Q^{-t} xi,
  // checked on the image coset Q^t xi + Q^t B Z^2.
  const RatVec xi_b = qt.inverse() * xi;
  c.witness_validated = vanishes_on_affine_lattice(unit_square(), qt * xi_b, qt * c.B, false).holds;
  if (form.kind == NormalFormKind::Form1) {
    // B = [[(1 + r q)/q, q], [r, q]]; (1 + r q) u + q^2 v = 1 and
    // U = [[u, -q^2], [v, 1 + r q]] give B U = [[1/q, 0], [r u + v q, q]].
    const Int qq = form.modulus;
    const Int rr = form.shear.get_num();
    const Int s = 1 + rr * qq, t = qq * qq;
    Int g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t());
    if (g != 1) throw Error(ErrorKind::InvariantViolation, "1 + r q and q^2 are not coprime");
    c.U = RatMatrix{{Rat(u), Rat(-t)}, {Rat(v), Rat(s)}};
    c.reduced = c.B * c.U;
    if (c.reduced(0, 1) != 0 || c.reduced(0, 0) != Rat(1) / Rat(qq))
      throw Error(ErrorKind::InvariantViolation, "congruence transport failed");
  } else {
    // The first-coordinate invariant of Q^{-t} N is 1/lcm(s'', p'), not p', so
    // the transported lattice is reduced by its own canonical generator.
    HermiteResult hr = canonical_generator(c.B);
    c.U = hr.P;
    c.reduced = hr.H;
  }
  if (abs(c.U.determinant()) != 1 || !c.U.is_integer())
    throw Error(ErrorKind::InvariantViolation, "transport matrix is not unimodular");
  c.alpha = c.reduced(0, 0);
  return c;
}

}  // namespace

OctagonReport octagon_pipeline(long max_param) {
  if (max_param < 2) throw Error(ErrorKind::InvariantViolation, "max_param must be at least 2");
  const ConvexPolygon o8 = octagon();
  const RatVec shift{3, 2};
  auto par = intersect_convex(o8, translate(o8, shift));
  if (!par) throw Error(ErrorKind::InvariantViolation, "octagon and its shift do not overlap");
  const RatMatrix q{{1, 0}, {-1, 1}};
  const RatVec offset{1, 1};
  const ConvexPolygon image = translate(linear_image(ConvexPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), q), offset);

  OctagonReport rep{o8, area(o8), shift, *par, q, offset, false, max_param, {}, {}, true, 0};
  rep.factorization_verified = same_polygon(*par, image) && abs(q.determinant()) == 1;
  if (!rep.factorization_verified) throw Error(ErrorKind::InvariantViolation, "parallelogram factorization");

  // Normal forms of Q^t B with parameters <= max_param, each classified INCOMPLETE.
  std::vector<RatMatrix> forms;
  for (long qq = 2; qq <= max_param; ++qq)
    for (long r = 0; r < qq; ++r)
      if (std::gcd(r, qq) > 1) forms.push_back(RatMatrix{{frac(1, qq), 0}, {r, qq}});
  for (long pp = 2; pp <= max_param; ++pp)
    for (long s = 1; s <= max_param; ++s)
      for (long r = 0; r * pp < s; ++r) {
        if (std::gcd(r, s) != 1 || std::lcm(s, pp) > max_param) continue;
        forms.push_back(RatMatrix{{pp, 0}, {frac(r, s), frac(1, pp)}});
      }
  for (const auto& n : forms) {
    ExpClassification cls = classify_2x2(n);
    if (cls.status != ExpStatus::Incomplete || !(cls.form->matrix == n))
      throw Error(ErrorKind::InvariantViolation, "normal form not recognised: " + n.to_string());
    OctagonCandidate cand = transport(*cls.form, *cls.xi, q);
    // The reduction to diag(a, 1/a) only runs from M to M_beta, so the lattice
    // the octagon would have to multi-tile, B^{-t} Z^2, is refuted directly too.
    cand.tiling = canonical_generator(cand.B.inverse_transpose()).H;
    ArrangementResult ar = multitile_verify_arrangement(o8, RatLattice(cand.tiling), true);
    cand.tiling_witness = ar.witness;
    cand.tiling_refuted = ar.witness.has_value() || (ar.level && *ar.level != to_ll(rep.octagon_area.get_num()));
    if (!cand.tiling_refuted) ++rep.unrefuted_candidates;
    rep.candidates.push_back(std::move(cand));
  }

  // Both orientations diag(p, 1/p), diag(1/p, p); density 1 forces level 14.
  const Rat level = rep.octagon_area;
  for (long pp = 2; pp <= max_param; ++pp)
    for (Rat alpha : {Rat(pp), frac(1, pp)}) {
      ArrangementResult ar =
          multitile_verify_arrangement(o8, RatLattice(RatMatrix::diagonal({alpha, 1 / alpha})), true);
      OctagonCase c{alpha, to_ll(level.get_num()), false, ar.witness, ar.level};
      c.refuted = ar.witness.has_value() || (ar.level && *ar.level != c.required_level);
      rep.all_refuted = rep.all_refuted && c.refuted;
      rep.cases.push_back(std::move(c));
    }
  return rep;
}

}  // namespace gabortile
