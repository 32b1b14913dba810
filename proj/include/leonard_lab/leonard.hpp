#pragma once

// Leonard-pair checks for L, (L* + lambda)^2.
//
// Condition (i) of a Leonard pair asks for a basis in which L is diagonal and
// (L* + lambda)^2 is irreducible tridiagonal. L has simple eigenvalues, so
// every basis diagonalising L is a rescaled reordering of {u*_i}. Rescaling a
// basis by nonzero scalars conjugates by a diagonal matrix and leaves the
// zero pattern of every entry unchanged, hence condition (i) reduces to a
// search over orderings of {u*_i}. That search is finite, and the four
// candidate orderings below are complete for it; verify_leonard_pair_square
// can confirm completeness against a brute-force scan.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leonard_lab/matrix.hpp"
#include "leonard_lab/params.hpp"

namespace leonard_lab {

/// Reordered basis ubar*_i = u*_{perm[i]}.
struct BasisOrdering {
  std::vector<int> perm;

  friend bool operator==(const BasisOrdering&, const BasisOrdering&) = default;
};

/// True iff perm is a bijection on {0, ..., perm.size()-1}.
bool is_permutation(const BasisOrdering& ordering);

struct ConditionResult {
  std::string name;
  bool holds = false;
};

struct LeonardPairReport {
  bool verdict = false;
  std::optional<BasisOrdering> witness;
  /// 1..4: which candidate ordering is the witness; 0 when there is none.
  int witness_candidate = 0;
  std::vector<ConditionResult> condition_trace;
  Rational lambda;
  /// Set only when the brute-force scan ran.
  std::optional<bool> exhaustive_agrees;
  /// Orderings the brute-force scan found (empty when it did not run).
  std::vector<BasisOrdering> exhaustive_hits;

  /// Value of a named trace entry; std::nullopt if absent.
  [[nodiscard]] std::optional<bool> condition(const std::string& name) const;
};

/// Largest d for which the (d+1)! brute-force scan is attempted.
inline constexpr int kExhaustiveMaxD = 8;

/// ([L*]_{u*} + lambda I)^2 by explicit multiplication.
RationalMatrix lstar_shift_square(const DualHahnParams& p, const Rational& lambda);

/// The same matrix from the five-case entry formula (pentadiagonal).
RationalMatrix lstar_shift_square_closed_form(const DualHahnParams& p, const Rational& lambda);

/// The four orderings of {u*_i}, in this order: evens up then odds down; odds
/// up then evens down; the reversal of the second; the reversal of the first.
/// Throws std::invalid_argument when d < 1.
std::vector<BasisOrdering> candidate_orderings(int d);

/// Every permutation under which `m` becomes irreducible tridiagonal, by
/// scanning all n! orderings. Throws std::invalid_argument above
/// kExhaustiveMaxD + 1 rows.
std::vector<BasisOrdering> exhaustive_tridiagonal_orderings(const RationalMatrix& m);

/// Is L, (L* + lambda)^2 a Leonard pair?
///
/// Condition (ii) is checked in the basis {u_i}: [L] irreducible tridiagonal,
/// [(L* + lambda)^2] diagonal with pairwise distinct entries (i + lambda)^2.
/// Condition (i) is checked over candidate_orderings. With `exhaustive` and
/// d <= kExhaustiveMaxD, the brute-force scan also runs and its hit set must
/// equal the set of passing candidates; the outcome lands in
/// exhaustive_agrees (false there is a bug, not a property of the input).
LeonardPairReport verify_leonard_pair_square(const DualHahnParams& p, const Rational& lambda,
                                             bool exhaustive = false);

/// The three hypotheses of the main theorem.
struct TheoremConditions {
  bool r_nonzero = false;
  bool r_plus_s_zero = false;
  bool two_lambda_is_r_minus_d = false;

  [[nodiscard]] bool all() const { return r_nonzero && r_plus_s_zero && two_lambda_is_r_minus_d; }
};

TheoremConditions theorem_conditions(const DualHahnParams& p, const Rational& lambda);

/// (r - d) / 2.
Rational canonical_lambda(const DualHahnParams& p);

/// d = 1 criterion: 2 lambda != -1. Throws std::invalid_argument unless d == 1.
bool d1_condition(const DualHahnParams& p, const Rational& lambda);

/// d = 2 criterion: r != s and 2(lambda+1) in {(r-s)/(r+s+2), (s-r)/(r+s+4)}.
/// Throws std::invalid_argument unless d == 2.
bool d2_condition(const DualHahnParams& p, const Rational& lambda);

/// [L*]_{u*} + lambda I is irreducible tridiagonal with a zero diagonal except
/// for a nonzero last entry.
bool is_dual_almost_bipartite(const DualHahnParams& p, const Rational& lambda);

enum class LambdaMode { kCanonical, kList };
enum class SMode { kList, kNegateR };

/// Cartesian grid of (d, r, s, lambda). With SMode::kNegateR the s list is
/// ignored and s = -r; with LambdaMode::kCanonical the lambda list is ignored
/// and lambda = (r - d) / 2 per point.
struct SearchGrid {
  std::vector<int> ds;
  std::vector<Rational> rs;
  std::vector<Rational> ss;
  SMode s_mode = SMode::kList;
  LambdaMode lambda_mode = LambdaMode::kCanonical;
  std::vector<Rational> lambdas;
  bool exhaustive = false;
};

struct SearchRecord {
  int d = 0;
  Rational r;
  Rational s;
  Rational lambda;
  LeonardPairReport report;
  TheoremConditions conditions;
  /// All three theorem hypotheses hold (so the theorem predicts a hit).
  bool predicted_by_theorem = false;
};

/// Every grid point with its report, sorted by (d, r, s, lambda) and with
/// duplicates removed. Points are evaluated in parallel (see worker_count).
/// Throws ParameterDomainError if any point has r <= -1 or s <= -1.
std::vector<SearchRecord> scan_grid(const SearchGrid& grid);

/// The subset of scan_grid where the verdict is true.
std::vector<SearchRecord> search_square_preserving(const SearchGrid& grid);

}  // namespace leonard_lab
