#pragma once

#include <optional>
#include <vector>

#include "gabortile/matrix.hpp"

namespace gabortile {

/// Full-rank lattice G(Z^d) with a rational invertible generator G.
class RatLattice {
 public:
  /// Throws Error(NotSquare) or Error(SingularMatrix).
  explicit RatLattice(RatMatrix generator);

  std::size_t dim() const { return generator_.rows(); }
  const RatMatrix& generator() const { return generator_; }

  RatVec point(const IntVec& coeffs) const { return mul_int(generator_, coeffs); }
  /// True when x = G k for some integer k.
  bool contains(const RatVec& x) const;

 private:
  RatMatrix generator_;
};

/// Result of column-style Hermite reduction M * P = H.
struct HermiteResult {
  RatMatrix H;
  RatMatrix P;
};

/// Lower-triangular Hermite normal form under unimodular column operations:
/// positive diagonal, entries left of the diagonal reduced into [0, h_ii).
/// Throws NotSquare, NonInteger, SingularMatrix.
HermiteResult hnf_lower(const RatMatrix& m);

/// Column Hermite reduction of an integer m x n matrix of full row rank m:
/// M * U = [H | 0] with U (n x n) unimodular and H (m x m) lower triangular in
/// the normal form of hnf_lower. Throws NonInteger, SingularMatrix (rank < m).
HermiteResult hnf_columns(const RatMatrix& m);

/// Lower-triangular generator with positive diagonal and reduced
/// subdiagonal; G * P = canonical generator for an integer unimodular P.
HermiteResult canonical_generator(const RatMatrix& generator);

RatLattice canonicalize(const RatLattice& lattice);

/// Throws Error(DimMismatch).
bool lattice_equal(const RatLattice& a, const RatLattice& b);

RatLattice dual(const RatLattice& lattice);

/// J^{-1} M^{-t} with J = [[O, -I], [I, O]]. Throws Error(OddDimension).
RatLattice adjoint(const RatLattice& lattice);

Rat density(const RatLattice& lattice);

/// Lattice {k in Z^d : D k in Z^d}, returned in canonical (integer,
/// lower-triangular) form. D may be singular.
RatLattice kernel_lattice(const RatMatrix& d);

/// Complete residue system of Z^d modulo M(Z^d) for integer M, listed
/// lexicographically inside the Hermite box prod [0, h_ii).
std::vector<IntVec> coset_reps(const RatMatrix& m);

/// Representative of v modulo the lattice spanned by the columns of a
/// lower-triangular integer matrix h with positive diagonal; lies in the
/// Hermite box.
IntVec reduce_into_hermite_box(const IntVec& v, const RatMatrix& h);

/// Integer matrices E, X with [[I, D], [O, I]](Z^2d) = [[E^-t, O], [X, E]](Z^2d)
/// for symmetric rational D, plus the unimodular change of basis
/// P = [[Z, -D E], [X, E]].
struct UpperToLower {
  RatMatrix E;
  RatMatrix X;
  RatMatrix Z;
  RatMatrix P;
};

/// Throws Error(NotSymmetric).
UpperToLower ut_to_lt(const RatMatrix& d);

/// All integer solutions of A v = b (A rational, full row rank): a particular
/// solution plus a basis (columns) of the integer kernel. nullopt when no
/// integer solution exists.
struct DiophantineSolution {
  IntVec particular;
  RatMatrix kernel;  // n x (n - rank) integer matrix; zero columns when full rank
};
std::optional<DiophantineSolution> solve_integer_system(const RatMatrix& a, const RatVec& b);

/// Some rational solution of A x = b with free variables set to zero, or
/// nullopt when inconsistent.
std::optional<RatVec> solve_rational_system(const RatMatrix& a, const RatVec& b);

}  // namespace gabortile
