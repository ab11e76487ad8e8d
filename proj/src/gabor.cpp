#include "gabortile/gabor.hpp"

#include <cmath>

#include "gabortile/error.hpp"

namespace gabortile {

namespace {

// Integer points m != 0, lexicographically positive, with |K and K + Am| > 0,
// in lexicographic order.
std::vector<IntVec> overlapping_shifts(const BoxSet& k, const RatMatrix& a) {
  const std::size_t d = k.dim();
  const Box bb = *k.bounding_box();
  const RatMatrix ainv = a.inverse();
  // A m ranges inside the open box (lo - hi, hi - lo); bound m through the
  // images of its corners.
  std::vector<Int> lo(d), hi(d);
  bool first = true;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    RatVec corner(d);
    for (std::size_t j = 0; j < d; ++j) {
      Rat w = bb.hi[j] - bb.lo[j];
      corner[j] = (mask >> j) & 1u ? w : Rat(-w);
    }
    RatVec img = ainv * corner;
    for (std::size_t i = 0; i < d; ++i) {
      Int f = floor_rat(img[i]), c = ceil_rat(img[i]);
      if (first || f < lo[i]) lo[i] = f;
      if (first || c > hi[i]) hi[i] = c;
    }
    first = false;
  }
  std::vector<IntVec> out;
  IntVec m(d);
  for (std::size_t i = 0; i < d; ++i) m[i] = to_ll(lo[i]);
  while (true) {
    std::size_t lead = 0;
    while (lead < d && m[lead] == 0) ++lead;
    if (lead < d && m[lead] > 0) {
      if (intersect(k, translate(k, mul_int(a, m))).measure() > 0) out.push_back(m);
    }
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (++m[i] <= to_ll(hi[i])) break;
      m[i] = to_ll(lo[i]);
      if (i == 0) return out;
    }
  }
}

Witness make_witness(const BoxSet& window, const IntVec& m, const BoxSet& overlap,
                     const VanishingResult& r) {
  Witness w;
  w.m = m;
  w.n = r.v;
  w.frequency = r.xi;
  w.overlap = overlap;
  w.value = *r.value;
  w.float_inner_product = std::abs(w.value.to_complex()) / window.measure().get_d();
  return w;
}

// Basis (as rows) of {y : y M = 0}.
std::vector<RatVec> left_null_space(const RatMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  // Row reduce M^T (cols x rows); its null space is the left null space of M.
  RatMatrix t = m.transpose();
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < rows && pr < cols; ++c) {
    std::size_t piv = pr;
    while (piv < cols && t(piv, c) == 0) ++piv;
    if (piv == cols) continue;
    for (std::size_t cc = 0; cc < rows; ++cc) std::swap(t(piv, cc), t(pr, cc));
    Rat p = t(pr, c);
    for (std::size_t cc = 0; cc < rows; ++cc) t(pr, cc) /= p;
    for (std::size_t r = 0; r < cols; ++r) {
      if (r == pr || t(r, c) == 0) continue;
      Rat f = t(r, c);
      for (std::size_t cc = 0; cc < rows; ++cc) t(r, cc) -= f * t(pr, cc);
    }
    pivots.push_back(c);
    ++pr;
  }
  std::vector<RatVec> basis;
  std::vector<bool> is_pivot(rows, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < rows; ++f) {
    if (is_pivot[f]) continue;
    RatVec y(rows, Rat(0));
    y[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) y[pivots[i]] = -t(i, f);
    basis.push_back(y);
  }
  return basis;
}

// One chosen congruence: coeffs . c in alpha + beta Z.
struct Congruence {
  RatVec coeffs;
  Rat alpha;
  Rat beta;
};

// Rational c satisfying all congruences, or nullopt.
std::optional<RatVec> solve_congruences(const std::vector<Congruence>& sys, std::size_t unknowns) {
  if (sys.empty()) return RatVec(unknowns, Rat(0));
  const std::size_t t = sys.size();
  RatMatrix m(t, unknowns);
  for (std::size_t r = 0; r < t; ++r)
    for (std::size_t c = 0; c < unknowns; ++c) m(r, c) = sys[r].coeffs[c];
  // M c = alpha + diag(beta) z must lie in the column space of M.
  auto null = left_null_space(m);
  IntVec z(t, 0);
  if (!null.empty()) {
    RatMatrix nb(null.size(), t);
    RatVec rhs(null.size(), Rat(0));
    for (std::size_t i = 0; i < null.size(); ++i)
      for (std::size_t r = 0; r < t; ++r) {
        nb(i, r) = null[i][r] * sys[r].beta;
        rhs[i] -= null[i][r] * sys[r].alpha;
      }
    auto sol = solve_integer_system(nb, rhs);
    if (!sol) return std::nullopt;
    z = sol->particular;
  }
  RatVec target(t);
  for (std::size_t r = 0; r < t; ++r) target[r] = sys[r].alpha + sys[r].beta * to_rat(z[r]);
  return solve_rational_system(m, target);
}

}  // namespace

GaborSpec make_gabor_spec(BoxSet window, RatLattice lattice) {
  const std::size_t d = window.dim();
  if (lattice.dim() != 2 * d)
    throw Error(ErrorKind::DimMismatch, "lattice dimension " + std::to_string(lattice.dim()) +
                                            " for a window of dimension " + std::to_string(d));
  if (window.empty()) throw Error(ErrorKind::Degenerate, "window has measure zero");
  return GaborSpec{std::move(window), std::move(lattice), d};
}

TimeFrequencyBlocks split_blocks(const RatMatrix& g, std::size_t d) {
  if (g.rows() != 2 * d || g.cols() != 2 * d)
    throw Error(ErrorKind::DimMismatch, "generator is not 2d x 2d");
  return {g.block(0, 0, d, d), g.block(0, d, d, d), g.block(d, 0, d, d), g.block(d, d, d, d)};
}

TimeFrequencyBlocks lower_block_form(const RatLattice& lattice, std::size_t d) {
  TimeFrequencyBlocks f = split_blocks(lattice.generator(), d);
  if (f.D.is_zero()) return f;
  if (f.C.is_zero()) {
    RatMatrix s = f.A.inverse() * f.D;
    if (s.is_symmetric()) {
      // [[A, D], [O, B]] = diag(A, B) [[I, S], [O, I]] and the unipotent
      // factor generates the same lattice as [[E^-t, O], [X, E]].
      UpperToLower u = ut_to_lt(s);
      return {f.A * u.E.inverse_transpose(), RatMatrix(d, d), f.B * u.X, f.B * u.E};
    }
  }
  return split_blocks(canonicalize(lattice).generator(), d);
}

std::string_view to_string(GaborStatus status) {
  switch (status) {
    case GaborStatus::Orthonormal: return "ORTHONORMAL";
    case GaborStatus::NotOrthogonal: return "NOT_ORTHOGONAL";
    case GaborStatus::NotDensityOne: return "NOT_DENSITY_ONE";
  }
  return "?";
}

GaborSpec reduce_time_block(const GaborSpec& spec) {
  const std::size_t d = spec.block_split;
  TimeFrequencyBlocks f = split_blocks(spec.lattice.generator(), d);
  if (f.A.determinant() == 0) throw Error(ErrorKind::SingularMatrix, "time block A is singular");
  if (!f.A.is_monomial())
    throw Error(ErrorKind::NonBoxImage, "A^{-1}K is not a union of boxes for A = " + f.A.to_string());
  const RatMatrix ainv = f.A.inverse();
  const RatMatrix at = f.A.transpose();
  RatMatrix c = at * f.C, b = at * f.B;
  if (f.D.is_zero() && b.is_integer() && abs(b.determinant()) == 1) {
    // Right multiplication by diag(I, (A^t B)^{-1}) is unimodular here.
    b = RatMatrix::identity(d);
  }
  RatMatrix g = RatMatrix::blocks(RatMatrix::identity(d), ainv * f.D, c, b);
  return GaborSpec{linear_image(spec.window, ainv), RatLattice(g), d};
}

Verdict gabor_check(const GaborSpec& spec) {
  const std::size_t d = spec.block_split;
  if (spec.window.dim() != d || spec.lattice.dim() != 2 * d)
    throw Error(ErrorKind::DimMismatch, "window and lattice dimensions disagree");
  if (spec.window.empty()) throw Error(ErrorKind::Degenerate, "window has measure zero");
  Verdict v;
  v.form = lower_block_form(spec.lattice, d);
  if (!v.form.D.is_zero())
    throw Error(ErrorKind::NotBlockTriangular, "no block-lower generator found");
  if (density(spec.lattice) != 1) {
    v.status = GaborStatus::NotDensityOne;
    return v;
  }
  const BoxSet& k = spec.window;
  const RatVec zero(d, Rat(0));

  auto r0 = vanishes_on_affine_lattice(k, zero, v.form.B, true);
  if (!r0.holds) {
    v.status = GaborStatus::NotOrthogonal;
    v.witness = make_witness(k, IntVec(d, 0), k, r0);
    return v;
  }
  for (const IntVec& m : overlapping_shifts(k, v.form.A)) {
    BoxSet overlap = coalesce(intersect(k, translate(k, mul_int(v.form.A, m))));
    auto r = vanishes_on_affine_lattice(overlap, mul_int(v.form.C, m), v.form.B, false);
    if (!r.holds) {
      v.status = GaborStatus::NotOrthogonal;
      v.witness = make_witness(k, m, overlap, r);
      return v;
    }
  }
  v.status = GaborStatus::Orthonormal;
  return v;
}

StructureReport structure_report(const GaborSpec& spec, const Verdict& verdict) {
  if (verdict.status != GaborStatus::Orthonormal)
    throw Error(ErrorKind::InvariantViolation, "structure report needs an ORTHONORMAL verdict");
  const RatMatrix& a = verdict.form.A;
  const RatMatrix& b = verdict.form.B;
  StructureReport rep;
  rep.time_domains = fd_decomposition(spec.window, RatLattice(a));
  rep.freq_domains = fd_decomposition(spec.window, RatLattice(b.inverse_transpose()));
  if (rep.time_domains.size() != rep.freq_domains.size())
    throw Error(ErrorKind::TheoremViolation,
                "time level " + std::to_string(rep.time_domains.size()) + " differs from frequency level " +
                    std::to_string(rep.freq_domains.size()));
  rep.N = static_cast<long>(rep.time_domains.size());
  if ((a.transpose() * b).is_integer() && rep.N != 1)
    throw Error(ErrorKind::TheoremViolation,
                "A^t B is integer but the window has level " + std::to_string(rep.N));
  rep.tiles_and_spectral = rep.N == 1;
  if (rep.tiles_and_spectral) rep.spectrum = RatLattice(b);
  return rep;
}

ShiftSolution admissible_shift_solver(const BoxSet& k, const RatMatrix& a, const RatMatrix& b) {
  const std::size_t d = k.dim();
  if (a.rows() != d || a.cols() != d || b.rows() != d || b.cols() != d)
    throw Error(ErrorKind::DimMismatch, "blocks must be d x d");
  if (k.empty()) throw Error(ErrorKind::Degenerate, "window has measure zero");
  if (a.determinant() == 0 || b.determinant() == 0)
    throw Error(ErrorKind::SingularMatrix, "A and B must be invertible");
  if (!b.is_diagonal()) throw Error(ErrorKind::NotFactorizable, "B must be diagonal");

  ShiftSolution out;
  for (const IntVec& m : overlapping_shifts(k, a)) {
    BoxSet overlap = coalesce(intersect(k, translate(k, mul_int(a, m))));
    if (overlap.boxes().size() != 1)
      throw Error(ErrorKind::NotFactorizable,
                  "overlap at m = " + format_vec(to_rat_vec(m)) + " is not a single box");
    OverlapConstraint oc{m, overlap.boxes().front(), {}};
    const Box& s = oc.overlap;
    for (std::size_t j = 0; j < d; ++j) {
      // x + b Z inside (1/l) Z minus {0}: b = q / l with q integer, x = r / l
      // with r not divisible by q.
      const Rat l = s.hi[j] - s.lo[j];
      const Rat q = b(j, j) * l;
      if (!is_integer(q)) continue;
      const long long qa = std::abs(to_ll(q.get_num()));
      if (qa <= 1) continue;
      ShiftOption opt{j, {}, Rat(to_rat(qa) / l)};
      for (long long r = 1; r < qa; ++r) opt.residues.push_back(Rat(to_rat(r) / l));
      oc.options.push_back(std::move(opt));
    }
    out.system.push_back(std::move(oc));
  }

  if (abs(a.determinant() * b.determinant()) != 1) {
    out.reason = "|det A det B| != 1";
    return out;
  }
  if (!vanishes_on_affine_lattice(k, RatVec(d, Rat(0)), b, true).holds) {
    out.reason = "transform of chi_K does not vanish on B(Z^d) minus the origin";
    return out;
  }

  // Depth-first search over one (coordinate, residue) choice per overlap.
  std::vector<Congruence> chosen;
  std::optional<RatVec> found;
  const std::size_t unknowns = d * d;
  auto dfs = [&](auto&& self, std::size_t idx) -> bool {
    if (idx == out.system.size()) {
      found = solve_congruences(chosen, unknowns);
      return found.has_value();
    }
    const OverlapConstraint& oc = out.system[idx];
    for (const auto& opt : oc.options)
      for (const Rat& res : opt.residues) {
        RatVec coeffs(unknowns, Rat(0));
        for (std::size_t i = 0; i < d; ++i) coeffs[opt.coord * d + i] = to_rat(oc.m[i]);
        chosen.push_back({coeffs, res, opt.modulus});
        if (solve_congruences(chosen, unknowns) && self(self, idx + 1)) return true;
        chosen.pop_back();
      }
    return false;
  };
  if (!dfs(dfs, 0)) {
    out.reason = "the overlap congruences admit no common solution";
    return out;
  }
  RatMatrix c(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) c(j, i) = (*found)[j * d + i];
  out.status = ShiftStatus::Satisfiable;
  out.C = c;
  return out;
}

}  // namespace gabortile
