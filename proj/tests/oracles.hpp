#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <optional>

#include "gabortile/boxset.hpp"

namespace oracle {

using namespace gabortile;
using cd = std::complex<double>;

/// Closed form of the transform of chi_K in floating point.
inline cd ft_closed_form(const BoxSet& k, const std::vector<double>& xi) {
  cd total = 0;
  for (const auto& b : k.boxes()) {
    cd term = 1;
    for (std::size_t j = 0; j < xi.size(); ++j) {
      double lo = b.lo[j].get_d(), hi = b.hi[j].get_d();
      if (xi[j] == 0) {
        term *= hi - lo;
        continue;
      }
      cd w(0, -2 * M_PI * xi[j]);
      term *= (std::exp(w * hi) - std::exp(w * lo)) / w;
    }
    total += term;
  }
  return total;
}

inline cd ft_closed_form(const BoxSet& k, const RatVec& xi) {
  std::vector<double> x;
  for (const auto& r : xi) x.push_back(r.get_d());
  return ft_closed_form(k, x);
}

namespace detail {

inline cd simpson(const std::function<cd(double)>& f, double a, double b, cd fa, cd fm, cd fb) {
  return (b - a) / 6 * (fa + 4.0 * fm + fb);
}

inline cd adaptive(const std::function<cd(double)>& f, double a, double b, cd fa, cd fm, cd fb,
                   cd whole, double tol, int depth, int min_depth) {
  double m = (a + b) / 2, lm = (a + m) / 2, rm = (m + b) / 2;
  cd flm = f(lm), frm = f(rm);
  cd left = simpson(f, a, m, fa, flm, fm), right = simpson(f, m, b, fm, frm, fb);
  if (depth <= 0 || (min_depth <= 0 && std::abs(left + right - whole) <= 15 * tol))
    return left + right + (left + right - whole) / 15.0;
  return adaptive(f, a, m, fa, flm, fm, left, tol / 2, depth - 1, min_depth - 1) +
         adaptive(f, m, b, fm, frm, fb, right, tol / 2, depth - 1, min_depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b]. A forced minimum depth keeps
/// periodic integrands from fooling the error estimate on coarse grids.
inline cd integrate(const std::function<cd(double)>& f, double a, double b, double tol = 1e-13) {
  cd fa = f(a), fb = f(b), fm = f((a + b) / 2);
  return detail::adaptive(f, a, b, fa, fm, fb, detail::simpson(f, a, b, fa, fm, fb), tol, 40, 6);
}

/// Quadrature of the integral of e^{-2 pi i <xi, x>} over K, factor by factor.
inline cd ft_quadrature(const BoxSet& k, const RatVec& xi) {
  cd total = 0;
  for (const auto& b : k.boxes()) {
    cd term = 1;
    for (std::size_t j = 0; j < xi.size(); ++j) {
      const double x = xi[j].get_d();
      term *= integrate([x](double t) { return std::exp(cd(0, -2 * M_PI * x * t)); }, b.lo[j].get_d(),
                        b.hi[j].get_d());
    }
    total += term;
  }
  return total;
}

/// First v with |v|_inf <= radius (lexicographic scan) where the transform at
/// xi0 + L v is numerically nonzero.
inline std::optional<IntVec> brute_force_witness(const BoxSet& k, const RatVec& xi0, const RatMatrix& l,
                                                 bool exclude_zero, long radius, double tol = 1e-9) {
  const std::size_t d = xi0.size();
  IntVec v(d, -radius);
  while (true) {
    RatVec xi = add(xi0, mul_int(l, v));
    bool origin = true;
    for (const auto& x : xi) origin = origin && x == 0;
    if (!(origin && exclude_zero) && std::abs(ft_closed_form(k, xi)) > tol) return v;
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (++v[i] <= radius) break;
      v[i] = -radius;
      if (i == 0) return std::nullopt;
    }
  }
}

/// Brute-force orthogonality search over |m|_inf <= m_radius and
/// |n|_inf <= n_radius for the system over [[A, O], [C, B]]: the first (m, n)
/// whose inner product is numerically nonzero.
inline std::optional<std::pair<IntVec, IntVec>> brute_force_gabor(const BoxSet& k, const RatMatrix& a,
                                                                  const RatMatrix& c, const RatMatrix& b,
                                                                  long m_radius, long n_radius) {
  const std::size_t d = k.dim();
  IntVec m(d, -m_radius);
  while (true) {
    BoxSet overlap = intersect(k, translate(k, mul_int(a, m)));
    if (!overlap.empty()) {
      bool zero = true;
      for (long x : m) zero = zero && x == 0;
      if (auto n = brute_force_witness(overlap, mul_int(c, m), b, zero, n_radius, 1e-7)) return {{m, *n}};
    }
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (++m[i] <= m_radius) break;
      m[i] = -m_radius;
      if (i == 0) return std::nullopt;
    }
  }
}

// Zeros of the cube transform: some coordinate is a nonzero integer.
inline bool cube_transform_zero(const RatVec& x) {
  for (const auto& v : x)
    if (v != 0 && is_integer(v)) return true;
  return false;
}

// Some xi + Bn with |n|_inf <= radius has a nonzero cube transform; shells
// of growing radius are scanned so typical points exit early.
inline bool some_nonzero(const RatMatrix& b, const RatVec& xi, long radius) {
  const std::size_t d = b.rows();
  for (long r = 0; r <= radius; ++r) {
    IntVec n(d, -r);
    while (true) {
      long long norm = 0;
      for (auto v : n) norm = std::max(norm, std::llabs(v));
      if (norm == r && !cube_transform_zero(add(xi, mul_int(b, n)))) return true;
      std::size_t i = d;
      while (i > 0) {
        --i;
        if (++n[i] <= r) break;
        n[i] = -r;
        if (i == 0) break;
      }
      bool wrapped = true;
      for (auto v : n) wrapped = wrapped && v == -r;
      if (wrapped) break;
    }
  }
  return false;
}

// Oracle for completeness: the first grid xi (denominator <= max_den,
// |xi_i| <= extent) for which no nearby lattice point has a nonzero transform.
inline std::optional<RatVec> grid_counterexample(const RatMatrix& b, long max_den, long extent, long radius) {
  const std::size_t d = b.rows();
  std::vector<Rat> values;
  for (long den = 1; den <= max_den; ++den)
    for (long num = -extent * den; num <= extent * den; ++num)
      if (std::gcd(num, den) == 1) values.push_back(frac(num, den));
  std::vector<std::size_t> idx(d, 0);
  while (true) {
    RatVec xi(d);
    for (std::size_t i = 0; i < d; ++i) xi[i] = values[idx[i]];
    if (!some_nonzero(b, xi, radius)) return xi;
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (++idx[i] < values.size()) break;
      idx[i] = 0;
      if (i == 0) return std::nullopt;
    }
  }
}

}  // namespace oracle
