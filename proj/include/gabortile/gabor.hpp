#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gabortile/boxset.hpp"
#include "gabortile/fourier.hpp"

namespace gabortile {

/// Window chi_K (normalized by |K|^{-1/2}) together with a 2d-dimensional
/// time-frequency lattice.
struct GaborSpec {
  BoxSet window;
  RatLattice lattice;
  std::size_t block_split;
};

/// Throws DimMismatch when the lattice is not 2d-dimensional, Degenerate
/// for an empty window.
GaborSpec make_gabor_spec(BoxSet window, RatLattice lattice);

/// d x d blocks of a generator [[A, D], [C, B]].
struct TimeFrequencyBlocks {
  RatMatrix A, D, C, B;

  RatMatrix assemble() const { return RatMatrix::blocks(A, D, C, B); }
};

TimeFrequencyBlocks split_blocks(const RatMatrix& generator, std::size_t d);

/// A generator of the same lattice in block-lower form (D = O). Keeps the
/// given basis when it already has D = O; handles C = O with A^{-1}D
/// symmetric by the upper-to-lower conversion; otherwise canonicalizes.
TimeFrequencyBlocks lower_block_form(const RatLattice& lattice, std::size_t d);

enum class GaborStatus { Orthonormal, NotOrthogonal, NotDensityOne };

std::string_view to_string(GaborStatus status);

/// Indices (m, n) of a pair of system elements whose inner product is nonzero.
/// Indices refer to `Verdict::form`.
struct Witness {
  IntVec m;
  IntVec n;
  RatVec frequency;  // Cm + Bn
  BoxSet overlap;    // K and K + Am intersected
  FourierValue value;
  double float_inner_product = 0;  // |K|^{-1} |value|
};

struct StructureReport {
  long N = 0;
  std::vector<BoxSet> time_domains;  // fundamental domains of A(Z^d)
  std::vector<BoxSet> freq_domains;  // fundamental domains of B^{-t}(Z^d)
  bool tiles_and_spectral = false;
  std::optional<RatLattice> spectrum;
};

struct Verdict {
  GaborStatus status = GaborStatus::NotDensityOne;
  std::optional<Witness> witness;
  std::optional<StructureReport> structure;
  TimeFrequencyBlocks form;
};

/// Equivalent spec with window A^{-1}K and lattice
/// [[I, A^{-1}D], [A^t C, A^t B]]; when D = O and A^t B is unimodular the
/// frequency block is further normalized to I.
/// Throws SingularMatrix, NonBoxImage (A not a scaled permutation).
GaborSpec reduce_time_block(const GaborSpec& spec);

/// Decides whether the normalized window's Gabor system over the lattice is
/// an orthonormal basis.
Verdict gabor_check(const GaborSpec& spec);

/// Decompositions of K into fundamental domains of A(Z^d) and B^{-t}(Z^d).
/// Throws InvariantViolation unless the verdict is ORTHONORMAL, and
/// TheoremViolation if A^t B is integer but the level exceeds one.
StructureReport structure_report(const GaborSpec& spec, const Verdict& verdict);

/// One admissible alternative for an overlap: (Cm)_coord lies in
/// residues + modulus Z.
struct ShiftOption {
  std::size_t coord;
  std::vector<Rat> residues;
  Rat modulus;
};

struct OverlapConstraint {
  IntVec m;
  Box overlap;
  std::vector<ShiftOption> options;  // at least one must hold
};

enum class ShiftStatus { Satisfiable, Empty };

struct ShiftSolution {
  ShiftStatus status = ShiftStatus::Empty;
  std::string reason;  // why Empty
  std::vector<OverlapConstraint> system;
  std::optional<RatMatrix> C;
};

/// Solves for shift blocks C making the system over [[A, O], [C, B]]
/// orthonormal, for windows whose overlaps K and K + Am are single boxes and
/// diagonal B. Throws NotFactorizable otherwise.
ShiftSolution admissible_shift_solver(const BoxSet& k, const RatMatrix& a, const RatMatrix& b);

}  // namespace gabortile
