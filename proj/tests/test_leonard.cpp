#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "leonard_lab/errors.hpp"
#include "leonard_lab/leonard.hpp"
#include "leonard_lab/representation.hpp"
#include "oracles.hpp"

using namespace leonard_lab;

namespace {

// [(L* + lambda)^2] in the basis {u*_i}, assembled entry by entry from the
// starred coefficients and squared with the naive product.
RationalMatrix square_oracle(const DualHahnParams& p, const Rational& lambda) {
  const int n = p.d + 1;
  RationalMatrix m = RationalMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = p.a_star(i) + lambda;
    if (i + 1 < n) {
      m(i + 1, i) = p.b_star(i);
      m(i, i + 1) = p.c_star(i + 1);
    }
  }
  return oracle::multiply(m, m);
}

std::vector<int> perm_of(const BasisOrdering& o) { return o.perm; }

std::vector<std::vector<int>> sorted(std::vector<std::vector<int>> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(CandidateOrderings, DiameterThree) {
  const auto c = candidate_orderings(3);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(perm_of(c[0]), (std::vector<int>{0, 2, 3, 1}));
  EXPECT_EQ(perm_of(c[1]), (std::vector<int>{1, 3, 2, 0}));
  EXPECT_EQ(perm_of(c[2]), (std::vector<int>{3, 1, 0, 2}));
  EXPECT_EQ(perm_of(c[3]), (std::vector<int>{2, 0, 1, 3}));
}

TEST(CandidateOrderings, DiameterFour) {
  const auto c = candidate_orderings(4);
  EXPECT_EQ(perm_of(c[0]), (std::vector<int>{0, 2, 4, 3, 1}));
  EXPECT_EQ(perm_of(c[1]), (std::vector<int>{1, 3, 4, 2, 0}));
  EXPECT_EQ(perm_of(c[2]), (std::vector<int>{4, 2, 0, 1, 3}));
  EXPECT_EQ(perm_of(c[3]), (std::vector<int>{3, 1, 0, 2, 4}));
}

TEST(CandidateOrderings, StructureForAllDiameters) {
  for (int d = 1; d <= 20; ++d) {
    const auto c = candidate_orderings(d);
    ASSERT_EQ(c.size(), 4u);
    for (const auto& o : c) EXPECT_TRUE(is_permutation(o));
    EXPECT_EQ(perm_of(c[0]), oracle::evens_up_odds_down(d));
    auto rev = [](std::vector<int> v) {
      std::reverse(v.begin(), v.end());
      return v;
    };
    EXPECT_EQ(perm_of(c[1]), rev(perm_of(c[0])));
    EXPECT_EQ(perm_of(c[2]), rev(perm_of(c[3])));
    // Consecutive entries differ by 1 or 2.
    for (const auto& o : c) {
      for (std::size_t i = 1; i < o.perm.size(); ++i) {
        const int gap = std::abs(o.perm[i] - o.perm[i - 1]);
        EXPECT_TRUE(gap == 1 || gap == 2);
      }
    }
  }
  EXPECT_THROW(candidate_orderings(0), std::invalid_argument);
}

TEST(CandidateOrderings, IsPermutation) {
  EXPECT_TRUE(is_permutation(BasisOrdering{{2, 0, 1}}));
  EXPECT_FALSE(is_permutation(BasisOrdering{{0, 0, 1}}));
  EXPECT_FALSE(is_permutation(BasisOrdering{{0, 3, 1}}));
  EXPECT_TRUE(is_permutation(BasisOrdering{{}}));
}

TEST(ShiftSquare, WorkedInstance) {
  const DualHahnParams p = build_params(2, Rational(1, 2), Rational(-1, 2));
  const Rational lambda(-3, 4);
  const RationalMatrix m = lstar_shift_square(p, lambda);
  EXPECT_EQ(m, square_oracle(p, lambda));
  EXPECT_EQ(m, lstar_shift_square_closed_form(p, lambda));
  for (int j = 0; j <= 2; ++j) EXPECT_EQ(m.col(j).sum(), lambda * lambda);
}

TEST(ShiftSquare, GridClosedFormAndColumnSums) {
  for (int d = 0; d <= 12; ++d) {
    for (const Rational& r : oracle::grid_values()) {
      for (const Rational& s : oracle::grid_values()) {
        const DualHahnParams p = build_params(d, r, s);
        for (const Rational& lambda : {Rational(0), Rational(1, 2), Rational(-1, 2), canonical_lambda(p)}) {
          const RationalMatrix m = lstar_shift_square(p, lambda);
          ASSERT_EQ(m, lstar_shift_square_closed_form(p, lambda)) << d << ' ' << r << ' ' << s << ' ' << lambda;
          ASSERT_EQ(m, square_oracle(p, lambda));
          for (int j = 0; j <= d; ++j) ASSERT_EQ(m.col(j).sum(), lambda * lambda);
          // Pentadiagonal.
          for (int i = 0; i <= d; ++i) {
            for (int j = 0; j <= d; ++j) {
              if (std::abs(i - j) > 2) ASSERT_TRUE(m(i, j).is_zero());
            }
          }
        }
      }
    }
  }
}

TEST(ExhaustiveOrderings, MatchesOracleOnRandomPatterns) {
  oracle::RationalGen gen(51);
  for (int it = 0; it < 200; ++it) {
    const int n = gen.integer(1, 6);
    RationalMatrix m = RationalMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (gen.integer(0, 2) > 0) m(i, j) = Rational(gen.integer(1, 5));
      }
    }
    std::vector<std::vector<int>> got;
    for (const auto& o : exhaustive_tridiagonal_orderings(m)) got.push_back(o.perm);
    EXPECT_EQ(sorted(got), sorted(oracle::tridiagonal_orderings(m)));
  }
}

TEST(ExhaustiveOrderings, PathGraphHasTwoOrderings) {
  // Adjacency of the path 0 - 2 - 1 - 3 plus a diagonal.
  RationalMatrix m = RationalMatrix::Identity(4, 4);
  for (auto [a, b] : {std::pair{0, 2}, std::pair{2, 1}, std::pair{1, 3}}) {
    m(a, b) = Rational(1);
    m(b, a) = Rational(1);
  }
  std::vector<std::vector<int>> got;
  for (const auto& o : exhaustive_tridiagonal_orderings(m)) got.push_back(o.perm);
  EXPECT_EQ(sorted(got), sorted({{0, 2, 1, 3}, {3, 1, 2, 0}}));
  EXPECT_THROW(exhaustive_tridiagonal_orderings(RationalMatrix::Identity(kExhaustiveMaxD + 2, kExhaustiveMaxD + 2)),
               std::invalid_argument);
}

TEST(VerifyLeonardPair, TheoremInstance) {
  const DualHahnParams p = build_params(3, Rational(1, 2), Rational(-1, 2));
  const LeonardPairReport report = verify_leonard_pair_square(p, canonical_lambda(p), true);
  EXPECT_TRUE(report.verdict);
  ASSERT_TRUE(report.witness);
  EXPECT_EQ(report.witness->perm, (std::vector<int>{0, 2, 3, 1}));
  EXPECT_EQ(report.witness_candidate, 1);
  EXPECT_EQ(report.lambda, Rational(-5, 4));
  EXPECT_EQ(report.exhaustive_agrees, std::optional<bool>(true));
  EXPECT_EQ(report.condition("reorder_condition_i"), std::optional<bool>(true));
  EXPECT_EQ(report.condition("reorder_condition_ii"), std::optional<bool>(false));
  EXPECT_EQ(report.condition("reorder_conditions_match_candidates"), std::optional<bool>(true));
  EXPECT_EQ(report.condition("no such condition"), std::nullopt);
  EXPECT_TRUE(oracle::irreducible_tridiagonal(permute_basis(square_oracle(p, report.lambda), report.witness->perm)));
}

TEST(VerifyLeonardPair, ConverseInstance) {
  const DualHahnParams p = build_params(3, Rational(1, 2), Rational(-1, 4));
  const LeonardPairReport report = verify_leonard_pair_square(p, canonical_lambda(p), true);
  EXPECT_FALSE(report.verdict);
  EXPECT_FALSE(report.witness);
  EXPECT_EQ(report.witness_candidate, 0);
  EXPECT_EQ(report.exhaustive_agrees, std::optional<bool>(true));
  EXPECT_TRUE(report.exhaustive_hits.empty());
  // Condition (ii) still holds; only condition (i) fails.
  EXPECT_EQ(report.condition("u_basis_L_irreducible_tridiagonal"), std::optional<bool>(true));
  EXPECT_EQ(report.condition("u_basis_square_diagonal"), std::optional<bool>(true));
  EXPECT_EQ(report.condition("candidate_ordering_found"), std::optional<bool>(false));
}

TEST(VerifyLeonardPair, DiameterOneCorollaryInstance) {
  const DualHahnParams p = build_params(1, Rational(1, 4), Rational(1, 4));
  EXPECT_FALSE(verify_leonard_pair_square(p, Rational(-1, 2)).verdict);
  EXPECT_FALSE(d1_condition(p, Rational(-1, 2)));
  EXPECT_TRUE(verify_leonard_pair_square(p, Rational(0)).verdict);
  EXPECT_TRUE(d1_condition(p, Rational(0)));
}

TEST(VerifyLeonardPair, DiameterTwoRoots) {
  const DualHahnParams p = build_params(2, Rational(1, 2), Rational(-1, 2));
  // -2 lambda equals a*_0 + a*_1 = 3/2 or a*_1 + a*_2 = 9/4.
  for (const Rational& root : {Rational(-3, 4), Rational(-9, 8)}) {
    EXPECT_TRUE(d2_condition(p, root)) << root;
    const LeonardPairReport report = verify_leonard_pair_square(p, root, true);
    EXPECT_TRUE(report.verdict) << root;
    EXPECT_EQ(report.exhaustive_agrees, std::optional<bool>(true));
  }
  EXPECT_EQ(verify_leonard_pair_square(p, Rational(-3, 4)).witness_candidate, 1);
  EXPECT_EQ(verify_leonard_pair_square(p, Rational(-9, 8)).witness_candidate, 3);
  EXPECT_FALSE(d2_condition(p, Rational(-8, 7)));
  EXPECT_FALSE(verify_leonard_pair_square(p, Rational(-8, 7)).verdict);
  // r = s never works at d = 2.
  const DualHahnParams q = build_params(2, Rational(1, 2), Rational(1, 2));
  for (const Rational& lambda : {Rational(-1), Rational(-1, 2), Rational(0), Rational(-3, 4)}) {
    EXPECT_FALSE(d2_condition(q, lambda));
    EXPECT_FALSE(verify_leonard_pair_square(q, lambda).verdict);
  }
}

TEST(VerifyLeonardPair, CorollaryPreconditions) {
  EXPECT_THROW(d1_condition(build_params(2, Rational(0), Rational(0)), Rational(0)), std::invalid_argument);
  EXPECT_THROW(d2_condition(build_params(1, Rational(0), Rational(0)), Rational(0)), std::invalid_argument);
}

TEST(VerifyLeonardPair, DiameterZero) {
  const LeonardPairReport report = verify_leonard_pair_square(build_params(0, Rational(1), Rational(1)), Rational(3));
  EXPECT_TRUE(report.verdict);
  ASSERT_TRUE(report.witness);
  EXPECT_EQ(report.witness->perm, std::vector<int>{0});
}

TEST(VerifyLeonardPair, RepeatedSquareEigenvalueFailsConditionTwo) {
  // (i + lambda)^2 collides for i = 1, 3 when lambda = -2.
  const LeonardPairReport report =
      verify_leonard_pair_square(build_params(4, Rational(1, 2), Rational(-1, 2)), Rational(-2));
  EXPECT_EQ(report.condition("square_eigenvalues_simple"), std::optional<bool>(false));
  EXPECT_FALSE(report.verdict);
}

TEST(Theorem, ForwardAndConverseOnSmallGrid) {
  for (int d = 1; d <= 8; ++d) {
    for (const Rational& r : oracle::theorem_r_values()) {
      const DualHahnParams p = build_params(d, r, -r);
      const Rational lambda = (r - Rational(d)) / 2;
      EXPECT_TRUE(theorem_conditions(p, lambda).all());
      const LeonardPairReport hit = verify_leonard_pair_square(p, lambda);
      EXPECT_TRUE(hit.verdict);
      EXPECT_EQ(hit.witness_candidate, 1);
      EXPECT_TRUE(is_dual_almost_bipartite(p, lambda));
      if (d >= 3) {
        EXPECT_FALSE(verify_leonard_pair_square(build_params(d, r, -r + Rational(1, 2)), lambda).verdict);
        EXPECT_FALSE(verify_leonard_pair_square(p, lambda + 1).verdict);
        EXPECT_FALSE(is_dual_almost_bipartite(p, lambda + 1));
      }
    }
  }
}

TEST(Theorem, ConditionsStruct) {
  const DualHahnParams p = build_params(4, Rational(0), Rational(0));
  const TheoremConditions c = theorem_conditions(p, Rational(-2));
  EXPECT_FALSE(c.r_nonzero);
  EXPECT_TRUE(c.r_plus_s_zero);
  EXPECT_TRUE(c.two_lambda_is_r_minus_d);
  EXPECT_FALSE(c.all());
  EXPECT_EQ(canonical_lambda(p), Rational(-2));
}

TEST(Theorem, RZeroFailsForLargeDiameter) {
  for (int d = 3; d <= 8; ++d) {
    const DualHahnParams p = build_params(d, Rational(0), Rational(0));
    EXPECT_FALSE(verify_leonard_pair_square(p, canonical_lambda(p)).verdict);
  }
}

TEST(DualAlmostBipartite, ShiftedMatrixShape) {
  for (int d = 1; d <= 12; ++d) {
    for (const Rational& r : oracle::theorem_r_values()) {
      const DualHahnParams p = build_params(d, r, -r);
      const Rational lambda = canonical_lambda(p);
      RationalMatrix m = matrix_Lstar_ustar_basis(p);
      for (int i = 0; i <= d; ++i) m(i, i) += lambda;
      for (int i = 0; i < d; ++i) EXPECT_TRUE(m(i, i).is_zero());
      EXPECT_EQ(m(d, d), r * Rational(d + 1) / 2);
      EXPECT_TRUE(oracle::irreducible_tridiagonal(m));
      EXPECT_TRUE(is_dual_almost_bipartite(p, lambda));
    }
  }
  EXPECT_FALSE(is_dual_almost_bipartite(build_params(3, Rational(1, 2), Rational(1, 2)), Rational(-5, 4)));
}

TEST(ScanGrid, SortedDeduplicatedAndPredicted) {
  SearchGrid grid;
  grid.ds = {4, 3, 3};
  grid.rs = {Rational(1, 2), Rational(-1, 4), Rational(1, 2)};
  grid.s_mode = SMode::kNegateR;
  const auto records = scan_grid(grid);
  ASSERT_EQ(records.size(), 4u);
  EXPECT_EQ(records[0].d, 3);
  EXPECT_EQ(records[0].r, Rational(-1, 4));
  EXPECT_EQ(records[3].d, 4);
  EXPECT_EQ(records[3].r, Rational(1, 2));
  for (const auto& rec : records) {
    EXPECT_EQ(rec.s, -rec.r);
    EXPECT_EQ(rec.lambda, (rec.r - Rational(rec.d)) / 2);
    EXPECT_TRUE(rec.predicted_by_theorem);
    EXPECT_TRUE(rec.report.verdict);
  }
}

TEST(ScanGrid, ListModes) {
  SearchGrid grid;
  grid.ds = {3};
  grid.rs = {Rational(1, 2)};
  grid.ss = {Rational(-1, 2), Rational(1, 4)};
  grid.lambda_mode = LambdaMode::kList;
  grid.lambdas = {Rational(-5, 4), Rational(0)};
  grid.exhaustive = true;
  const auto records = scan_grid(grid);
  ASSERT_EQ(records.size(), 4u);
  const auto hits = search_square_preserving(grid);
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].s, Rational(-1, 2));
  EXPECT_EQ(hits[0].lambda, Rational(-5, 4));
  for (const auto& rec : records) EXPECT_EQ(rec.report.exhaustive_agrees, std::optional<bool>(true));
}

TEST(ScanGrid, DomainErrors) {
  SearchGrid grid;
  grid.ds = {2};
  grid.rs = {Rational(1)};
  grid.s_mode = SMode::kNegateR;
  EXPECT_THROW(scan_grid(grid), ParameterDomainError);
  grid.rs = {Rational(-1)};
  EXPECT_THROW(scan_grid(grid), ParameterDomainError);
}

TEST(ScanGrid, DeterministicAcrossThreadCounts) {
  SearchGrid grid;
  for (int d = 1; d <= 6; ++d) grid.ds.push_back(d);
  grid.rs = oracle::grid_values();
  grid.ss = oracle::grid_values();
  setenv("LEONARD_LAB_THREADS", "1", 1);
  const auto serial = scan_grid(grid);
  setenv("LEONARD_LAB_THREADS", "7", 1);
  const auto parallel = scan_grid(grid);
  unsetenv("LEONARD_LAB_THREADS");
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].d, parallel[i].d);
    EXPECT_EQ(serial[i].r, parallel[i].r);
    EXPECT_EQ(serial[i].s, parallel[i].s);
    EXPECT_EQ(serial[i].report.verdict, parallel[i].report.verdict);
  }
}

TEST(LeonardProperty, CandidatesAgreeWithBruteForce) {
  oracle::RationalGen gen(61);
  for (int it = 0; it < 120; ++it) {
    const int d = gen.integer(1, 6);
    const bool negate = gen.integer(0, 2) == 0;
    // s = -r needs |r| < 1 to stay in the domain.
    const Rational r = negate ? gen.in_open(-1, 1, 30) : gen.parameter();
    const Rational s = negate ? -r : gen.parameter();
    const DualHahnParams p = build_params(d, r, s);
    // Mix of special shifts (where some a*-sum vanishes) and random ones.
    Rational lambda = gen.in_open(-5, 5);
    if (gen.integer(0, 1) == 0) {
      const int i = gen.integer(0, d - 1);
      lambda = -(p.a_star(i) + p.a_star(i + 1)) / 2;
    }
    const LeonardPairReport report = verify_leonard_pair_square(p, lambda, true);
    ASSERT_EQ(report.exhaustive_agrees, std::optional<bool>(true));
    ASSERT_EQ(report.condition("reorder_conditions_match_candidates"), std::optional<bool>(true));
    const auto brute = oracle::tridiagonal_orderings(square_oracle(p, lambda));
    ASSERT_EQ(report.witness.has_value(), !brute.empty());
    if (report.witness) {
      ASSERT_NE(std::find(brute.begin(), brute.end(), report.witness->perm), brute.end());
    }
  }
}
