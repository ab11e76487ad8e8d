#pragma once

#include <optional>
#include <vector>

#include "gabortile/lattice.hpp"

namespace gabortile {

/// Half-open box prod [lo_i, hi_i).
struct Box {
  RatVec lo;
  RatVec hi;

  std::size_t dim() const { return lo.size(); }
  Rat volume() const;
  bool contains(const RatVec& x) const;
  bool operator==(const Box& o) const { return lo == o.lo && hi == o.hi; }
};

/// Throws Error(DimMismatch) or Error(Degenerate) if some lo_i >= hi_i.
Box make_box(RatVec lo, RatVec hi);

std::optional<Box> intersect(const Box& a, const Box& b);

/// a minus b as at most 2d pairwise disjoint boxes.
std::vector<Box> subtract(const Box& a, const Box& b);

/// Finite union of pairwise disjoint half-open boxes.
class BoxSet {
 public:
  explicit BoxSet(std::size_t dim = 0) : dim_(dim) {}

  /// Accepts possibly overlapping boxes; the result is their union.
  static BoxSet from_boxes(std::size_t dim, const std::vector<Box>& boxes);
  /// Caller guarantees the boxes are pairwise disjoint.
  static BoxSet from_disjoint(std::size_t dim, std::vector<Box> boxes);

  std::size_t dim() const { return dim_; }
  const std::vector<Box>& boxes() const { return boxes_; }
  bool empty() const { return boxes_.empty(); }

  bool contains(const RatVec& x) const;
  Rat measure() const;
  /// Smallest box containing the set; nullopt when empty.
  std::optional<Box> bounding_box() const;

 private:
  std::size_t dim_;
  std::vector<Box> boxes_;
};

/// Union of possibly overlapping boxes as a disjoint BoxSet.
BoxSet normalize(std::size_t dim, const std::vector<Box>& boxes);

BoxSet translate(const BoxSet& k, const RatVec& v);
BoxSet intersect(const BoxSet& a, const BoxSet& b);
BoxSet unite(const BoxSet& a, const BoxSet& b);
BoxSet difference(const BoxSet& a, const BoxSet& b);
Rat measure(const BoxSet& k);
/// Equality of indicator functions.
bool same_set(const BoxSet& a, const BoxSet& b);

/// Image of K under x -> M x for a monomial (scaled permutation) M.
/// Throws Error(NonBoxImage) otherwise.
BoxSet linear_image(const BoxSet& k, const RatMatrix& m);

/// Merges face-adjacent boxes; same set, usually fewer boxes.
BoxSet coalesce(const BoxSet& k);

/// prod [0, g_ii) for a lower-triangular generator with positive diagonal.
Box fundamental_box(const RatMatrix& lower_generator);

/// One part of K moved into the fundamental box F of the lattice:
/// residue lies in F and residue + shift is a subset of K.
struct ReducedPiece {
  Box residue;
  IntVec coeffs;  // shift = generator * coeffs
  RatVec shift;
};

struct Reduction {
  RatMatrix generator;  // lower triangular generator used for the reduction
  Box domain;           // F
  std::vector<ReducedPiece> pieces;
};

/// Throws Error(NotLowerTriangular) unless the generator is lower triangular
/// with positive diagonal.
Reduction reduce_mod(const BoxSet& k, const RatMatrix& lower_generator);
/// Canonicalizes the lattice first.
Reduction reduce_mod(const BoxSet& k, const RatLattice& lattice);

/// Cell of the breakpoint refinement of F with the pieces covering it.
struct OverlayCell {
  Box cell;
  std::vector<std::size_t> pieces;  // indices into Reduction::pieces
};

std::vector<OverlayCell> overlay(const Reduction& reduction);

/// N when almost every point of F is covered exactly N >= 1 times.
std::optional<long> multitile_level_direct(const BoxSet& k, const RatLattice& lattice);

bool is_packing(const BoxSet& k, const RatLattice& lattice);

/// K_S: points x of F with {t in L : x + t in K} = S.
struct KSClass {
  std::vector<RatVec> S;  // lexicographically sorted lattice vectors
  BoxSet part;
};

/// Classes sorted lexicographically by S. Throws Error(NotAMultiTile).
std::vector<KSClass> ks_decomposition(const BoxSet& k, const RatLattice& lattice);

/// m = lexicographic max over classes of (max S - min S).
/// Throws Error(NotAMultiTile), Error(LevelOne).
RatVec packing_shift(const BoxSet& k, const RatLattice& lattice);

/// N fundamental domains of the lattice whose disjoint union is K.
/// Throws Error(NotAMultiTile).
std::vector<BoxSet> fd_decomposition(const BoxSet& k, const RatLattice& lattice);

/// The unbounded union of k + I_|k| over all integers k, with I_0 = [0,1)
/// and I_n = [1 - 2^(1-n), 1 - 2^(-n)), intersected with [a, b).
/// Throws Error(Unbounded) without a window.
BoxSet nested_interval_set(const std::optional<std::pair<Rat, Rat>>& window);

std::string to_string(const Box& b);
std::string to_string(const BoxSet& k);

}  // namespace gabortile
