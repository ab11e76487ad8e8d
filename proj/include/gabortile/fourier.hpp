#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "gabortile/boxset.hpp"
#include "gabortile/cyclo.hpp"

namespace gabortile {

/// Exact value of the transform of chi_K at a rational point:
///   rational_scale * numerator / prod_{j not in zero_coords} (2 pi i xi_j).
/// Zero exactly when the numerator is zero.
struct FourierValue {
  RatVec xi;
  CycloNum numerator;
  Rat rational_scale = 1;
  std::vector<std::size_t> zero_coords;

  bool is_zero() const { return numerator.is_zero(); }
  std::complex<double> to_complex() const;
};

/// Integral of e^{-2 pi i <xi, x>} over K.
FourierValue ft_boxset(const BoxSet& k, const RatVec& xi);

/// Outcome of deciding chi_K^(xi0 + L v) = 0 for all integer v.
struct VanishingResult {
  bool holds = true;
  IntVec v;          // witness coefficients when !holds
  RatVec xi;         // xi0 + L v
  std::optional<FourierValue> value;
};

/// Decides whether the transform of chi_K vanishes on xi0 + L(Z^d), skipping
/// the point xi = 0 when exclude_zero is set. `l` is any invertible rational
/// d x d matrix.
VanishingResult vanishes_on_affine_lattice(const BoxSet& k, const RatVec& xi0, const RatMatrix& l,
                                           bool exclude_zero);

/// Level N of K as a multi-tile of the lattice, decided on the frequency side
/// from the vanishing of chi_K^ on the dual lattice minus the origin.
/// Throws Error(NonIntegerLevel) if vanishing holds but |K| / |det| is not an integer.
std::optional<long> multitile_level_fourier(const BoxSet& k, const RatLattice& lattice);

}  // namespace gabortile
