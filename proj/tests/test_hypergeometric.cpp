#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "leonard_lab/hypergeometric.hpp"
#include "oracles.hpp"

using leonard_lab::binomial;
using leonard_lab::HypergeometricPoleError;
using leonard_lab::hypergeometric_terminating;
using leonard_lab::pochhammer;
using leonard_lab::Rational;

TEST(Pochhammer, Examples) {
  EXPECT_EQ(pochhammer(Rational(7, 3), 0), Rational(1));
  EXPECT_EQ(pochhammer(Rational(2), 3), Rational(24));
  EXPECT_EQ(pochhammer(Rational(-1, 2), 2), Rational(-1, 4));
  EXPECT_EQ(pochhammer(Rational(-3), 4), Rational(0));
  EXPECT_EQ(pochhammer(Rational(-3), 3), Rational(-6));
}

TEST(Pochhammer, NegativeLengthThrows) { EXPECT_THROW(pochhammer(Rational(1), -1), std::invalid_argument); }

TEST(Pochhammer, WorksOnMachineIntegers) { EXPECT_EQ(pochhammer(5L, 3), 210L); }

TEST(Binomial, Examples) {
  EXPECT_EQ(binomial(5, 0), Rational(1));
  EXPECT_EQ(binomial(2, 1), Rational(2));
  EXPECT_EQ(binomial(6, 3), Rational(20));
  EXPECT_EQ(binomial(0, 0), Rational(1));
  EXPECT_THROW(binomial(2, 3), std::invalid_argument);
  EXPECT_THROW(binomial(-1, 0), std::invalid_argument);
}

TEST(Binomial, MatchesFactorialOracle) {
  for (int n = 0; n <= 30; ++n) {
    for (int i = 0; i <= n; ++i) EXPECT_EQ(binomial(n, i), oracle::choose(n, i)) << n << ' ' << i;
  }
}

TEST(Hypergeometric, ZeroNumeratorKeepsOnlyFirstTerm) {
  EXPECT_EQ(hypergeometric_terminating({Rational(0), Rational(5, 2)}, {Rational(1, 3)}, 0), Rational(1));
  EXPECT_EQ(hypergeometric_terminating({Rational(0), Rational(5, 2)}, {Rational(1, 3)}, 4), Rational(1));
}

TEST(Hypergeometric, HandSummedInstances) {
  // u_1(theta_1) at (1, 1/2, -1/2): 1 - 4.
  EXPECT_EQ(hypergeometric_terminating({Rational(-1), Rational(-1), Rational(-2)}, {Rational(-1, 2), Rational(-1)}, 1),
            Rational(-3));
  // u_2(theta_2) at (2, 1/2, -1/2): 1 - 4 + 8. (-2)_3 vanishes on both sides at i = 3.
  EXPECT_EQ(hypergeometric_terminating({Rational(-2), Rational(-2), Rational(-3)}, {Rational(-3, 2), Rational(-2)}, 2),
            Rational(5));
}

TEST(Hypergeometric, NumeratorTruncationBeatsDenominatorPole) {
  // (-1)_2 = 0 and (-1)_2 = 0 at the same index: the series ends at i = 1.
  EXPECT_EQ(hypergeometric_terminating({Rational(-1), Rational(1)}, {Rational(-1)}, 3), Rational(2));
}

TEST(Hypergeometric, DenominatorPoleNamesIndex) {
  // (-1)_2 = 0 while (-3)_2 != 0.
  try {
    (void)hypergeometric_terminating({Rational(-3), Rational(1)}, {Rational(-1)}, 3);
    FAIL() << "expected a pole";
  } catch (const HypergeometricPoleError& e) {
    EXPECT_EQ(e.index(), 2);
  }
}

TEST(Hypergeometric, RequiresTerminatingNumerator) {
  EXPECT_THROW(hypergeometric_terminating({Rational(1, 2)}, {Rational(3)}, 4), std::invalid_argument);
  // -5 would terminate only after the window closes.
  EXPECT_THROW(hypergeometric_terminating({Rational(-5)}, {Rational(3)}, 4), std::invalid_argument);
  EXPECT_THROW(hypergeometric_terminating({Rational(-1)}, {Rational(3)}, -1), std::invalid_argument);
}

TEST(Hypergeometric, ChuVandermonde) {
  // 2F1(-n, b; c; 1) = (c - b)_n / (c)_n.
  oracle::RationalGen gen(21);
  for (int it = 0; it < 200; ++it) {
    const int n = gen.integer(0, 9);
    const Rational b = gen.in_open(-5, 5);
    const Rational c = gen.denominator();
    if (pochhammer(c, n).is_zero()) continue;
    EXPECT_EQ(hypergeometric_terminating({Rational(-n), b}, {c}, n), oracle::poch(c - b, n) / oracle::poch(c, n));
  }
}

TEST(Hypergeometric, PfaffSaalschutz) {
  // 3F2(-n, a, b; c, 1 + a + b - c - n; 1) = (c - a)_n (c - b)_n / ((c)_n (c - a - b)_n).
  oracle::RationalGen gen(22);
  int checked = 0;
  for (int it = 0; it < 300; ++it) {
    const int n = gen.integer(0, 8);
    const Rational a = gen.in_open(-4, 4);
    const Rational b = gen.in_open(-4, 4);
    const Rational c = gen.in_open(-4, 4);
    const Rational e = Rational(1 - n) + a + b - c;
    if (oracle::poch(c, n).is_zero() || oracle::poch(e, n).is_zero() || oracle::poch(c - a - b, n).is_zero()) {
      continue;
    }
    ++checked;
    EXPECT_EQ(hypergeometric_terminating({Rational(-n), a, b}, {c, e}, n),
              oracle::poch(c - a, n) * oracle::poch(c - b, n) / (oracle::poch(c, n) * oracle::poch(c - a - b, n)));
  }
  EXPECT_GT(checked, 200);
}

TEST(HypergeometricProperty, PochhammerRecursion) {
  oracle::RationalGen gen(23);
  for (int it = 0; it < 400; ++it) {
    const Rational x = gen.in_open(-10, 10);
    const int i = gen.integer(0, 15);
    EXPECT_EQ(pochhammer(x, i + 1), pochhammer(x, i) * (x + Rational(i)));
    EXPECT_EQ(pochhammer(x, i), oracle::poch(x, i));
  }
}

TEST(HypergeometricProperty, MatchesDirectSum) {
  oracle::RationalGen gen(24);
  for (int it = 0; it < 200; ++it) {
    const int n = gen.integer(0, 7);
    std::vector<Rational> nums{Rational(-n), gen.in_open(-3, 3), gen.in_open(-3, 3)};
    std::vector<Rational> dens{gen.denominator(), gen.denominator()};
    EXPECT_EQ(hypergeometric_terminating(nums, dens, n), oracle::hyper_direct(nums, dens, n));
  }
}

TEST(HypergeometricProperty, PermutationInvariance) {
  oracle::RationalGen gen(25);
  for (int it = 0; it < 100; ++it) {
    const int n = gen.integer(0, 6);
    std::vector<Rational> nums{Rational(-n), gen.in_open(-3, 3), gen.in_open(-3, 3), gen.in_open(-3, 3)};
    std::vector<Rational> dens{gen.denominator(), gen.denominator(),
                               gen.denominator()};
    const Rational base = hypergeometric_terminating(nums, dens, n);
    std::sort(nums.begin(), nums.end());
    std::sort(dens.begin(), dens.end());
    do {
      EXPECT_EQ(hypergeometric_terminating(nums, dens, n), base);
    } while (std::next_permutation(nums.begin(), nums.end()));
    while (std::next_permutation(dens.begin(), dens.end())) {
      EXPECT_EQ(hypergeometric_terminating(nums, dens, n), base);
    }
  }
}

TEST(HypergeometricProperty, MatchedPairCancels) {
  oracle::RationalGen gen(26);
  for (int it = 0; it < 200; ++it) {
    const int n = gen.integer(0, 7);
    std::vector<Rational> nums{Rational(-n), gen.in_open(-3, 3)};
    std::vector<Rational> dens{gen.denominator()};
    const Rational extra = gen.denominator();
    const Rational base = hypergeometric_terminating(nums, dens, n);
    nums.push_back(extra);
    dens.push_back(extra);
    EXPECT_EQ(hypergeometric_terminating(nums, dens, n), base);
  }
}
