#pragma once

#include <algorithm>
#include <set>

#include "gabortile/boxset.hpp"
#include "gabortile/gabor.hpp"
#include "test_util.hpp"

namespace testutil {

/// Sorted breakpoints 0 = b_0 < ... < b_n = len with random rational interior points.
inline std::vector<Rat> random_breaks(std::mt19937_64& rng, const Rat& len, int pieces) {
  std::set<Rat> pts{Rat(0), len};
  for (int i = 1; i < pieces; ++i) pts.insert(len * frac(uniform(rng, 1, 11), 12));
  return {pts.begin(), pts.end()};
}

/// Multi-tile of level n: the fundamental box of the canonical generator is cut
/// into grid cells and every cell is placed n times at distinct lattice shifts.
inline BoxSet random_multitile(std::mt19937_64& rng, const RatLattice& lattice, int n,
                              int cuts = 2, long spread = 2) {
  const RatMatrix g = canonicalize(lattice).generator();
  const std::size_t d = g.rows();
  std::vector<std::vector<Rat>> breaks(d);
  for (std::size_t i = 0; i < d; ++i) breaks[i] = random_breaks(rng, g(i, i), cuts);
  std::vector<Box> cells{Box{RatVec{}, RatVec{}}};
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Box> next;
    for (const auto& c : cells)
      for (std::size_t j = 0; j + 1 < breaks[i].size(); ++j) {
        Box b = c;
        b.lo.push_back(breaks[i][j]);
        b.hi.push_back(breaks[i][j + 1]);
        next.push_back(b);
      }
    cells = std::move(next);
  }
  std::vector<Box> boxes;
  for (const auto& c : cells) {
    std::set<IntVec> used;
    while (static_cast<int>(used.size()) < n) {
      IntVec k(d);
      for (auto& x : k) x = uniform(rng, -spread, spread);
      used.insert(k);
    }
    for (const auto& k : used) {
      RatVec t = mul_int(g, k);
      boxes.push_back(Box{add(c.lo, t), add(c.hi, t)});
    }
  }
  return coalesce(BoxSet::from_disjoint(d, boxes));
}

/// Random union of up to `count` boxes with corners on a grid of spacing 1/den.
inline BoxSet random_boxset(std::mt19937_64& rng, std::size_t d, int count, long den, long extent) {
  std::vector<Box> boxes;
  for (int b = 0; b < count; ++b) {
    Box box{RatVec(d), RatVec(d)};
    for (std::size_t i = 0; i < d; ++i) {
      long lo = uniform(rng, 0, extent * den - 1);
      long hi = uniform(rng, lo + 1, std::min(lo + den * 2, extent * den));
      box.lo[i] = frac(lo, den);
      box.hi[i] = frac(hi, den);
    }
    boxes.push_back(box);
  }
  return normalize(d, boxes);
}

inline RatVec random_point(std::mt19937_64& rng, const Box& around, long den) {
  RatVec x(around.dim());
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rat len = around.hi[i] - around.lo[i] + 2;
    x[i] = around.lo[i] - 1 + len * frac(uniform(rng, 0, den - 1), den);
  }
  return x;
}

/// Random density-one block-lower spec [[A, O], [C, B]] whose window is a
/// level-`level` multi-tile of A(Z^d). With integer_atb, A^t B is a random
/// unimodular matrix; otherwise (d >= 2) it is a non-integer matrix of
/// determinant one.
struct GaborInstance {
  GaborSpec spec;
  TimeFrequencyBlocks blocks;
  int level;
};

inline GaborInstance random_gabor_instance(std::mt19937_64& rng, std::size_t d, int level, bool integer_atb,
                                           long c_den = 3) {
  RatMatrix a(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    a(i, i) = frac(uniform(rng, 1, 3), uniform(rng, 1, 2));
    for (std::size_t j = 0; j < i; ++j) a(i, j) = frac(uniform(rng, -1, 1), uniform(rng, 1, 2));
  }
  RatMatrix w = random_unimodular(rng, d, 3);
  if (!integer_atb && d >= 2) {
    RatVec diag(d, Rat(1));
    diag[0] = 2;
    diag[1] = frac(1, 2);
    w = RatMatrix::diagonal(diag) * w;
  }
  RatMatrix b = a.inverse_transpose() * w;
  RatMatrix c(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c(i, j) = frac(uniform(rng, -3, 3), uniform(rng, 1, c_den));
  BoxSet k = random_multitile(rng, RatLattice(a), level, 2, 1);
  TimeFrequencyBlocks blocks{a, RatMatrix(d, d), c, b};
  return {make_gabor_spec(k, RatLattice(blocks.assemble())), blocks, level};
}

}  // namespace testutil
