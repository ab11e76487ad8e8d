#include <gtest/gtest.h>

#include "gabortile/cyclo.hpp"
#include "gabortile/error.hpp"
#include "gabortile/fourier.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace gabortile;

namespace {

BoxSet interval(Rat a, Rat b) { return BoxSet::from_disjoint(1, {Box{{a}, {b}}}); }
BoxSet rect(Rat x0, Rat x1, Rat y0, Rat y1) { return BoxSet::from_disjoint(2, {Box{{x0, y0}, {x1, y1}}}); }

CycloNum sum_of_roots(long long n, std::initializer_list<long long> ks) {
  CycloNum z;
  for (long long k : ks) z = z + CycloNum::root(n, k);
  return z;
}

CycloNum random_cyclo(std::mt19937_64& rng, long long n, int terms) {
  CycloNum z;
  for (int t = 0; t < terms; ++t)
    z = z + CycloNum::root(n, testutil::uniform(rng, 0, n - 1), testutil::random_rat(rng, 5, 4));
  return z;
}

}  // namespace

TEST(Cyclo, VanishingSums) {
  EXPECT_TRUE(cyclo_is_zero(sum_of_roots(3, {0, 1, 2})));
  EXPECT_TRUE(cyclo_is_zero(sum_of_roots(4, {0, 2})));
  EXPECT_FALSE(cyclo_is_zero(sum_of_roots(5, {0, 1})));
  EXPECT_GT(std::abs(sum_of_roots(5, {0, 1}).to_complex()), 1.6);
  EXPECT_TRUE(cyclo_is_zero(CycloNum()));
  EXPECT_FALSE(cyclo_is_zero(CycloNum::rational(frac(1, 3))));
  // 1 + z6^2 + z6^4 = 0 but 1 + z6 + z6^2 = 2 z6 != 0.
  EXPECT_TRUE(cyclo_is_zero(sum_of_roots(6, {0, 2, 4})));
  EXPECT_FALSE(cyclo_is_zero(sum_of_roots(6, {0, 1, 2})));
}

TEST(Cyclo, CyclotomicPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<Int>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), (std::vector<Int>{1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<Int>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<Int>{1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(9), (std::vector<Int>{1, 0, 0, 1, 0, 0, 1}));
  // Phi_105 is the first with a coefficient of absolute value 2.
  auto p105 = cyclotomic_polynomial(105);
  EXPECT_EQ(p105.size(), 49u);
  EXPECT_EQ(p105[7], -2);
}

TEST(Cyclo, ArithmeticMatchesFloats) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 100; ++t) {
    long long n1 = testutil::uniform(rng, 1, 30), n2 = testutil::uniform(rng, 1, 30);
    CycloNum a = random_cyclo(rng, n1, 4), b = random_cyclo(rng, n2, 4);
    EXPECT_LT(std::abs((a + b).to_complex() - (a.to_complex() + b.to_complex())), 1e-9);
    EXPECT_LT(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()), 1e-9);
    EXPECT_LT(std::abs((a - a).to_complex()), 1e-12);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_LT(std::abs(a.reduced().to_complex() - a.to_complex()), 1e-9);
  }
}

TEST(Cyclo, ExactZerosAgreeWithFloats) {
  std::mt19937_64 rng(13);
  int zeros = 0;
  for (int t = 0; t < 300; ++t) {
    long long n = testutil::uniform(rng, 2, 60);
    CycloNum z = random_cyclo(rng, n, 3);
    if (t % 2 == 0) {
      // Multiply by the vanishing sum of all p-th roots for a divisor p > 1.
      long long p = n;
      for (long long q = 2; q <= n; ++q)
        if (n % q == 0) {
          p = q;
          if (testutil::uniform(rng, 0, 1)) break;
        }
      CycloNum s;
      for (long long k = 0; k < p; ++k) s += CycloNum::root(p, k);
      z = z * s;
    }
    bool exact = z.is_zero();
    zeros += exact;
    EXPECT_EQ(exact, std::abs(z.to_complex()) < 1e-9) << z.to_string();
  }
  EXPECT_GT(zeros, 100);
}

TEST(Cyclo, ConductorLimit) {
  EXPECT_THROW(CycloNum::root(2000000, 1), Error);
  try {
    CycloNum::root(999983, 1) * CycloNum::root(999979, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Overflow);
  }
  set_conductor_limit(100);
  EXPECT_THROW(CycloNum::phase(frac(1, 101)), Error);
  set_conductor_limit(1000000);
  EXPECT_NO_THROW(CycloNum::phase(frac(1, 101)));
}

TEST(Cyclo, LargePrimeConductor) {
  // 1 + z + ... + z^{p-1} for p prime near the limit.
  const long long p = 10007;
  CycloNum s;
  for (long long k = 0; k < p; ++k) s += CycloNum::root(p, k);
  EXPECT_TRUE(s.is_zero());
  EXPECT_FALSE((s - CycloNum::root(p, 3)).is_zero());
}

TEST(FtBoxset, UnitIntervalZeros) {
  for (long k : {-3, -1, 1, 2, 7}) EXPECT_TRUE(ft_boxset(interval(0, 1), {frac(k)}).is_zero());
  EXPECT_FALSE(ft_boxset(interval(0, 1), {frac(1, 2)}).is_zero());
}

TEST(FtBoxset, LengthTwoInterval) {
  EXPECT_TRUE(ft_boxset(interval(0, 2), {frac(1, 2)}).is_zero());
  EXPECT_FALSE(ft_boxset(interval(0, 2), {frac(1, 4)}).is_zero());
}

TEST(FtBoxset, Origin) {
  FourierValue v = ft_boxset(rect(0, 1, 0, 1), {0, 0});
  EXPECT_EQ(v.rational_scale, 1);
  EXPECT_FALSE(v.is_zero());
  EXPECT_NEAR(v.to_complex().real(), 1.0, 1e-15);
  EXPECT_EQ(ft_boxset(rect(0, 2, 0, 3), {0, 0}).rational_scale, 6);
}

TEST(FtBoxset, MatchesQuadrature) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 100; ++t) {
    std::size_t d = testutil::uniform(rng, 1, 2);
    BoxSet k = testutil::random_boxset(rng, d, 3, 4, 3);
    RatVec xi(d);
    for (auto& x : xi) x = t % 5 == 0 ? Rat(0) : testutil::random_rat(rng, 12, 6);
    FourierValue v = ft_boxset(k, xi);
    auto quad = oracle::ft_quadrature(k, xi);
    ASSERT_LT(std::abs(v.to_complex() - quad), 1e-9) << to_string(k) << " at " << format_vec(xi);
    ASSERT_EQ(v.is_zero(), std::abs(quad) < 1e-9);
  }
}

TEST(FtBoxset, Periodicity) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 50; ++t) {
    BoxSet k = testutil::random_boxset(rng, 2, 3, 3, 3);
    RatVec xi{testutil::random_rat(rng, 9, 5), testutil::random_rat(rng, 9, 5)};
    if (xi[0] == 0 || xi[1] == 0) continue;
    for (std::size_t j = 0; j < 2; ++j) {
      Int p = 1;
      for (const auto& b : k.boxes()) p = lcm(lcm(p, b.lo[j].get_den()), b.hi[j].get_den());
      RatVec shifted = xi;
      shifted[j] += Rat(p);
      if (shifted[j] == 0) continue;
      CycloNum diff = ft_boxset(k, xi).numerator - ft_boxset(k, shifted).numerator;
      ASSERT_TRUE(diff.is_zero());
    }
  }
}

TEST(Vanishing, OddShiftHolds) {
  auto r = vanishes_on_affine_lattice(rect(0, 1, 0, 1), {0, 1}, RatMatrix::diagonal({frac(1, 2), 2}), false);
  EXPECT_TRUE(r.holds);
}

TEST(Vanishing, EvenShiftFails) {
  RatMatrix l = RatMatrix::diagonal({frac(1, 2), 2});
  BoxSet k = rect(0, 1, 0, 1);
  auto r = vanishes_on_affine_lattice(k, {2, 0}, l, false);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.v, (IntVec{-4, 0}));
  EXPECT_EQ(r.xi, (RatVec{0, 0}));
  EXPECT_NEAR(std::abs(r.value->to_complex()), 1.0, 1e-15);
  auto brute = oracle::brute_force_witness(k, {2, 0}, l, false, 10);
  ASSERT_TRUE(brute);
  EXPECT_FALSE(ft_boxset(k, add(RatVec{2, 0}, mul_int(l, *brute))).is_zero());
}

TEST(Vanishing, IntegerShiftHitsOrigin) {
  auto r = vanishes_on_affine_lattice(rect(0, 1, 0, 1), {1, 0}, RatMatrix::identity(2), false);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.v, (IntVec{-1, 0}));
  EXPECT_EQ(r.xi, (RatVec{0, 0}));
  auto excluded = vanishes_on_affine_lattice(rect(0, 1, 0, 1), {1, 0}, RatMatrix::identity(2), true);
  EXPECT_TRUE(excluded.holds);
}

TEST(Vanishing, Errors) {
  try {
    vanishes_on_affine_lattice(rect(0, 1, 0, 1), {0}, RatMatrix::identity(2), false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimMismatch);
  }
  EXPECT_THROW(vanishes_on_affine_lattice(rect(0, 1, 0, 1), {0, 0}, RatMatrix(2, 2), false), Error);
}

TEST(Vanishing, AgreesWithBruteForce) {
  std::mt19937_64 rng(16);
  int holds = 0;
  for (int t = 0; t < 60; ++t) {
    std::size_t d = testutil::uniform(rng, 1, 2);
    BoxSet k;
    RatMatrix l(d, d);
    if (t % 2 == 0) {
      RatLattice lat(RatMatrix::diagonal(RatVec(d, frac(1, testutil::uniform(rng, 1, 2)))));
      k = testutil::random_multitile(rng, lat, static_cast<int>(testutil::uniform(rng, 1, 2)));
      l = dual(lat).generator();
    } else {
      k = testutil::random_boxset(rng, d, 2, 2, 2);
      l = RatMatrix::diagonal(RatVec(d, frac(testutil::uniform(rng, 1, 4), testutil::uniform(rng, 1, 2))));
    }
    RatVec xi0(d);
    for (auto& x : xi0) x = frac(testutil::uniform(rng, -4, 4), testutil::uniform(rng, 1, 4));
    bool exclude = t % 3 == 0;
    auto r = vanishes_on_affine_lattice(k, xi0, l, exclude);
    auto brute = oracle::brute_force_witness(k, xi0, l, exclude, 12);
    if (r.holds) {
      ++holds;
      ASSERT_FALSE(brute) << to_string(k) << " xi0=" << format_vec(xi0) << " L=" << l.to_string();
    } else {
      ASSERT_FALSE(ft_boxset(k, r.xi).is_zero());
      ASSERT_GT(std::abs(oracle::ft_closed_form(k, r.xi)), 1e-9);
      ASSERT_FALSE(exclude && r.xi == RatVec(d, Rat(0)));
    }
  }
  EXPECT_GT(holds, 5);
}

TEST(MultitileFourier, Examples) {
  RatLattice z2(RatMatrix::identity(2));
  EXPECT_EQ(multitile_level_fourier(rect(0, 2, 0, 1), z2), 2);
  EXPECT_EQ(multitile_level_fourier(rect(0, 1, 0, 1), z2), 1);
  EXPECT_EQ(multitile_level_fourier(BoxSet::from_disjoint(3, {Box{{0, 0, 0}, {1, 1, 1}}}),
                                    RatLattice(RatMatrix::identity(3))),
            1);
  EXPECT_FALSE(multitile_level_fourier(rect(0, frac(3, 2), 0, 1), z2));
  EXPECT_FALSE(ft_boxset(interval(0, frac(3, 2)), {1}).is_zero());
}

TEST(MultitileFourier, AgreesWithDirect) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    RatLattice l(testutil::random_invertible(rng, 2, 3, 2));
    BoxSet k = t % 3 == 0 ? testutil::random_boxset(rng, 2, 3, 2, 3)
                          : testutil::random_multitile(rng, l, static_cast<int>(testutil::uniform(rng, 1, 3)));
    ASSERT_EQ(multitile_level_direct(k, l), multitile_level_fourier(k, l)) << to_string(k);
  }
}
