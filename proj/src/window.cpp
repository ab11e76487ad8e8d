#include "gabortile/window.hpp"

#include "gabortile/error.hpp"

namespace gabortile {

WindowConstruction construct_window(const RatMatrix& a, const RatMatrix& d) {
  if (!a.square() || !d.square() || a.rows() != d.rows())
    throw Error(ErrorKind::DimMismatch, "A and D must be square of equal size");
  const std::size_t n = a.rows();
  if (a.determinant() == 0) throw Error(ErrorKind::SingularMatrix, "A is singular");
  const RatMatrix a_inv_t = a.inverse_transpose();
  const RatMatrix s = a.inverse() * d;
  if (!s.is_symmetric())
    throw Error(ErrorKind::NotSymmetric, "A^{-1}D = " + s.to_string() + " is not symmetric");
  UpperToLower u = ut_to_lt(s);

  WindowConstruction w{a,
                       d,
                       u.E,
                       u.X,
                       RatLattice(RatMatrix::blocks(a, d, RatMatrix(n, n), a_inv_t)),
                       RatLattice(RatMatrix::blocks(a * u.E.inverse_transpose(), RatMatrix(n, n), a_inv_t * u.X,
                                                    a_inv_t * u.E)),
                       BoxSet(n)};
  const RatMatrix time = a * u.E.inverse_transpose();
  Box f{RatVec(n), RatVec(n)};
  if (time.is_diagonal()) {
    for (std::size_t i = 0; i < n; ++i) {
      const Rat& g = time(i, i);
      f.lo[i] = g < 0 ? g : Rat(0);
      f.hi[i] = g < 0 ? Rat(0) : g;
    }
  } else {
    f = fundamental_box(canonicalize(RatLattice(time)).generator());
  }
  w.window = BoxSet::from_disjoint(n, {f});
  return w;
}

Certification certify_construction(const WindowConstruction& w) {
  Certification c;
  const GaborSpec eq = make_gabor_spec(w.window, w.equivalent_lattice);
  c.equivalent = gabor_check(eq);
  c.original = gabor_check(make_gabor_spec(w.window, w.original));
  if (c.equivalent.status != GaborStatus::Orthonormal || c.original.status != GaborStatus::Orthonormal)
    throw Error(ErrorKind::InvariantViolation, "constructed window does not certify as orthonormal");
  c.equivalent.structure = structure_report(eq, c.equivalent);
  if (c.equivalent.structure->N != 1)
    throw Error(ErrorKind::InvariantViolation, "constructed window has level " +
                                                   std::to_string(c.equivalent.structure->N));
  return c;
}

}  // namespace gabortile
