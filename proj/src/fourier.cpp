#include "gabortile/fourier.hpp"

#include <algorithm>
#include <cmath>

#include "gabortile/error.hpp"

namespace gabortile {

namespace {

// Numerator of the transform at xi for the branch where exactly the
// coordinates flagged in `zero` vanish (their xi entries are ignored).
CycloNum branch_numerator(const BoxSet& k, const RatVec& xi, const std::vector<bool>& zero) {
  CycloNum total;
  for (const auto& b : k.boxes()) {
    CycloNum term = CycloNum::rational(1);
    Rat lengths = 1;
    for (std::size_t j = 0; j < k.dim(); ++j) {
      if (zero[j]) {
        lengths *= b.hi[j] - b.lo[j];
        continue;
      }
      term = term * (CycloNum::phase(xi[j] * b.lo[j]) - CycloNum::phase(xi[j] * b.hi[j]));
    }
    total += term.scaled(lengths);
  }
  return total;
}

}  // namespace

std::complex<double> FourierValue::to_complex() const {
  std::complex<double> v = numerator.to_complex() * rational_scale.get_d();
  for (std::size_t j = 0; j < xi.size(); ++j) {
    bool is_zero_coord = false;
    for (std::size_t z : zero_coords) is_zero_coord = is_zero_coord || z == j;
    if (!is_zero_coord) v /= std::complex<double>(0.0, 2.0 * M_PI * xi[j].get_d());
  }
  return v;
}

FourierValue ft_boxset(const BoxSet& k, const RatVec& xi) {
  if (xi.size() != k.dim()) throw Error(ErrorKind::DimMismatch, "frequency dimension");
  FourierValue out;
  out.xi = xi;
  std::vector<bool> zero(xi.size());
  for (std::size_t j = 0; j < xi.size(); ++j) {
    zero[j] = xi[j] == 0;
    if (zero[j]) out.zero_coords.push_back(j);
  }
  if (out.zero_coords.size() == xi.size()) {
    out.rational_scale = k.measure();
    out.numerator = CycloNum::rational(out.rational_scale == 0 ? 0 : 1);
    return out;
  }
  out.numerator = branch_numerator(k, xi, zero);
  return out;
}

VanishingResult vanishes_on_affine_lattice(const BoxSet& k, const RatVec& xi0, const RatMatrix& l,
                                           bool exclude_zero) {
  const std::size_t d = k.dim();
  if (xi0.size() != d || l.rows() != d || l.cols() != d)
    throw Error(ErrorKind::DimMismatch, "frequency lattice dimension");
  if (l.determinant() == 0) throw Error(ErrorKind::SingularMatrix, "frequency lattice is singular");
  VanishingResult result;
  if (k.empty()) return result;

  // Per-coordinate periods of the branch numerators.
  std::vector<Int> period(d, Int(1));
  for (const auto& b : k.boxes())
    for (std::size_t j = 0; j < d; ++j) {
      period[j] = lcm(period[j], b.lo[j].get_den());
      period[j] = lcm(period[j], b.hi[j].get_den());
    }

  auto witness = [&](const IntVec& v) {
    result.holds = false;
    result.v = v;
    result.xi = add(xi0, mul_int(l, v));
    result.value = ft_boxset(k, result.xi);
    if (result.value->is_zero())
      throw Error(ErrorKind::InvariantViolation, "vanishing witness evaluates to zero");
    return result;
  };

  // Deeper strata (more vanishing coordinates) first, so witnesses prefer
  // frequencies with many zero coordinates.
  std::vector<unsigned> masks;
  for (unsigned mask = 0; mask < (1u << d); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    return __builtin_popcount(a) > __builtin_popcount(b);
  });
  for (unsigned mask : masks) {
    std::vector<std::size_t> zs, nz;
    std::vector<bool> zero(d);
    for (std::size_t j = 0; j < d; ++j) {
      zero[j] = (mask >> j) & 1u;
      (zero[j] ? zs : nz).push_back(j);
    }
    // Lattice points whose frequency vanishes on the coordinates in zs.
    RatVec rhs;
    for (std::size_t j : zs) rhs.push_back(-xi0[j]);
    auto sol = solve_integer_system(l.select_rows(zs), rhs);
    if (!sol) continue;
    if (nz.empty()) {
      if (exclude_zero) continue;
      return witness(sol->particular);
    }
    const RatMatrix& kernel = sol->kernel;
    const RatMatrix lp = l.select_rows(nz) * kernel;
    RatMatrix scaled = lp;
    for (std::size_t r = 0; r < nz.size(); ++r)
      for (std::size_t c = 0; c < nz.size(); ++c) scaled(r, c) /= Rat(period[nz[r]]);
    // Classes of u on which the branch numerator is constant.
    const RatMatrix e = kernel_lattice(scaled).generator();
    const RatVec base = add(xi0, mul_int(l, sol->particular));
    auto v_of = [&](const IntVec& u) {
      IntVec v = sol->particular;
      RatVec ku = mul_int(kernel, u);
      for (std::size_t i = 0; i < d; ++i) v[i] += to_ll(ku[i].get_num());
      return v;
    };
    for (const auto& u : coset_reps(e)) {
      RatVec xi = add(base, l * mul_int(kernel, u));
      if (branch_numerator(k, xi, zero).is_zero()) continue;
      // Some point of the class has no further vanishing coordinates.
      const std::size_t r = nz.size();
      for (long long radius = 0;; ++radius) {
        IntVec w(r, -radius);
        while (true) {
          IntVec uu = u;
          RatVec ew = mul_int(e, w);
          for (std::size_t i = 0; i < r; ++i) uu[i] += to_ll(ew[i].get_num());
          IntVec v = v_of(uu);
          RatVec pt = add(xi0, mul_int(l, v));
          bool generic = true;
          for (std::size_t j : nz) generic = generic && pt[j] != 0;
          if (generic) return witness(v);
          std::size_t i = 0;
          while (i < r && ++w[i] > radius) w[i++] = -radius;
          if (i == r) break;
        }
      }
    }
  }
  return result;
}

std::optional<long> multitile_level_fourier(const BoxSet& k, const RatLattice& lattice) {
  const std::size_t d = k.dim();
  if (k.empty()) return std::nullopt;
  auto res = vanishes_on_affine_lattice(k, RatVec(d, Rat(0)), dual(lattice).generator(), true);
  if (!res.holds) return std::nullopt;
  Rat ratio = k.measure() / abs(lattice.generator().determinant());
  if (!is_integer(ratio))
    throw Error(ErrorKind::NonIntegerLevel,
                "transform vanishes on the dual lattice but |K|/|det| = " + format_rat(ratio));
  return to_ll(ratio.get_num());
}

}  // namespace gabortile
