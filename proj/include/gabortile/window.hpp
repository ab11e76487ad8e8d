#pragma once

#include "gabortile/gabor.hpp"

namespace gabortile {

/// Box window and lower-block lattice equivalent to [[A, D], [O, A^{-t}]].
struct WindowConstruction {
  RatMatrix A, D;
  RatMatrix E, X;               // integer, from the upper-to-lower conversion of A^{-1}D
  RatLattice original;          // [[A, D], [O, A^{-t}]]
  RatLattice equivalent_lattice;  // [[A E^{-t}, O], [A^{-t} X, A^{-t} E]]
  BoxSet window;                // fundamental domain of A E^{-t}(Z^d)
};

/// Throws SingularMatrix, DimMismatch, NotSymmetric (A^{-1}D not symmetric).
WindowConstruction construct_window(const RatMatrix& a, const RatMatrix& d);

struct Certification {
  Verdict equivalent;  // verdict on the constructed lattice, with structure
  Verdict original;    // verdict on the upper-triangular input lattice
};

/// Runs the checker on both lattices; a construction that does not certify
/// as an orthonormal basis with level one raises InvariantViolation.
Certification certify_construction(const WindowConstruction& w);

}  // namespace gabortile
