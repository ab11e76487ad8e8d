#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gabortile/expcomplete.hpp"
#include "gabortile/lattice.hpp"

namespace gabortile {

/// Strictly convex polygon, vertices counter-clockwise.
class ConvexPolygon {
 public:
  /// Throws Degenerate unless the vertices are strictly convex and CCW.
  explicit ConvexPolygon(std::vector<RatVec> vertices);

  const std::vector<RatVec>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const RatVec& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  /// +1 strictly inside, 0 on the boundary, -1 outside.
  int locate(const RatVec& x) const;
  /// Lower-left and upper-right corners of the bounding box.
  std::pair<RatVec, RatVec> bounds() const;

 private:
  std::vector<RatVec> vertices_;
};

bool same_polygon(const ConvexPolygon& a, const ConvexPolygon& b);

/// Octagon with vertices (+-1, +-2), (+-2, +-1).
ConvexPolygon octagon();

Rat area(const ConvexPolygon& p);
ConvexPolygon translate(const ConvexPolygon& p, const RatVec& v);
/// Image under an invertible linear map (orientation restored if reversed).
ConvexPolygon linear_image(const ConvexPolygon& p, const RatMatrix& m);

/// Exact half-plane clipping; nullopt when the intersection has empty interior.
std::optional<ConvexPolygon> intersect_convex(const ConvexPolygon& a, const ConvexPolygon& b);

/// Number of lattice vectors t with x + t strictly inside P.
/// Throws OnBoundary if some x + t lies on the boundary, DimMismatch.
long multiplicity_at_point(const ConvexPolygon& p, const RatLattice& lattice, const RatVec& x);

/// One face of the arrangement of translated edges inside the fundamental box.
struct ArrangementCell {
  RatVec sample;
  Rat area;
  long multiplicity;
  std::vector<RatVec> outline;  // trapezoid corners, counter-clockwise
};

struct ArrangementResult {
  std::optional<long> level;  // set iff every cell has the same multiplicity
  std::vector<ArrangementCell> cells;
  std::optional<std::pair<ArrangementCell, ArrangementCell>> witness;  // differing cells
  Rat covered_area = 0;  // sum of cell areas visited
  bool complete = true;  // false when stopped at the first mismatch
};

/// Exact multi-tiling decision for P by a lower-triangular lattice: the
/// multiplicity is constant on each cell of the arrangement of translated
/// edges clipped to the fundamental box, so one sample per cell decides it.
/// Throws NotLowerTriangular.
ArrangementResult multitile_verify_arrangement(const ConvexPolygon& p, const RatLattice& lattice,
                                               bool stop_at_mismatch = false);

/// Candidate frequency block B surviving the exponential-completeness step,
/// transported back from a normal form of Q^t B.
struct OctagonCandidate {
  NormalForm form;          // of Q^t B
  RatVec xi;                // incompleteness witness of the form
  bool witness_validated;   // vanishing on the image coset, exact
  RatMatrix B;              // Q^{-t} form
  RatMatrix U;              // unimodular, B U = reduced
  RatMatrix reduced;        // [[a, 0], [c, 1/a]]
  Rat alpha;                // a; the shear invariance reduces to diag(a, 1/a)
  RatMatrix tiling;         // lower-triangular generator of B^{-t} Z^2
  bool tiling_refuted;      // octagon is not a level-14 multi-tile of B^{-t} Z^2
  std::optional<std::pair<ArrangementCell, ArrangementCell>> tiling_witness;
};

struct OctagonCase {
  Rat alpha;  // lattice diag(alpha, 1/alpha)
  long required_level;
  bool refuted;
  std::optional<std::pair<ArrangementCell, ArrangementCell>> witness;
  std::optional<long> level;
};

struct OctagonReport {
  ConvexPolygon octagon;
  Rat octagon_area;
  RatVec shift;                   // m0 = (3, 2)
  ConvexPolygon parallelogram;    // octagon and its shift intersected
  RatMatrix Q;                    // parallelogram = Q [0,1]^2 + offset
  RatVec offset;
  bool factorization_verified;
  long max_param;
  std::vector<OctagonCandidate> candidates;
  std::vector<OctagonCase> cases;
  bool all_refuted;          // every diagonal case
  long unrefuted_candidates; // candidates whose B^{-t} Z^2 the octagon does multi-tile
};

/// End-to-end refutation for frequency blocks with parameters <= max_param.
/// Throws InvariantViolation if max_param < 2.
OctagonReport octagon_pipeline(long max_param);

}  // namespace gabortile
