#pragma once

// Dual Hahn parameter array built from (d, r, s).

#include "leonard_lab/matrix.hpp"
#include "leonard_lab/rational.hpp"

namespace leonard_lab {

/// All sequences have length d+1 and are indexed 0..d. The boundary entries
/// b[d], c[0], b_star[d] and c_star[0] are stored as zero.
struct DualHahnParams {
  int d = 0;
  Rational r;
  Rational s;

  RationalVector theta;       ///< eigenvalues of L
  RationalVector theta_star;  ///< eigenvalues of L*, theta_star[i] = i
  RationalVector b;
  RationalVector c;
  RationalVector a;
  RationalVector k;
  Rational nu;
  RationalVector b_star;
  RationalVector c_star;
  RationalVector a_star;
  RationalVector k_star;
};

/// Throws ParameterDomainError if d < 0, r <= -1 or s <= -1. Every derived
/// entry is computed from its product form.
DualHahnParams build_params(int d, const Rational& r, const Rational& s);

// Closed forms of the weights, evaluated independently of the product forms
// stored in DualHahnParams.
Rational k_closed_form(const DualHahnParams& p, int i);
Rational k_star_closed_form(const DualHahnParams& p, int i);
Rational nu_closed_form(const DualHahnParams& p);

/// Distinct theta, positive k / k_star / nu, nonzero b, c, b_star, c_star
/// away from the boundary, and a = theta_0 - b - c (likewise starred).
bool satisfies_invariants(const DualHahnParams& p);

/// True iff k, k_star and nu agree with their closed forms for every index.
bool check_closed_forms(const DualHahnParams& p);

/// [a*_0 + a*_1, ..., a*_{d-1} + a*_d] from the two-branch closed form in
/// (d, r, s). Throws std::invalid_argument when d < 1.
RationalVector build_astar_sums(const DualHahnParams& p);

}  // namespace leonard_lab
