#pragma once

// Barred (Racah) parameter array for s = -r, and the checks that identify the
// dual Hahn polynomials u_i with Racah polynomials on the same nodes.

#include <utility>
#include <vector>

#include "leonard_lab/matrix.hpp"
#include "leonard_lab/params.hpp"
#include "leonard_lab/representation.hpp"

namespace leonard_lab {

/// Sequences are indexed 0..d; bar_b[d], bar_c[0], bar_b_star[d] and
/// bar_c_star[0] are zero. bar_varphi is indexed 1..d (entry 0 unused, zero).
/// s is always -r and is not stored.
struct RacahParams {
  int d = 0;
  Rational r;

  RationalVector bar_theta;
  RationalVector bar_theta_star;
  RationalVector bar_b;
  RationalVector bar_c;
  RationalVector bar_a;
  RationalVector bar_k;
  Rational bar_nu;
  RationalVector bar_b_star;
  RationalVector bar_c_star;
  RationalVector bar_a_star;
  RationalVector bar_k_star;
  RationalVector bar_varphi;
};

/// Requires r != 0 and -1 < r < 1, otherwise ParameterDomainError. Also
/// confirms that no denominator Pochhammer of the 4F3 in eval_table_4F3 can
/// vanish within the summation window.
RacahParams build_racah_params(int d, const Rational& r);

/// sigma(j) with bar_theta[j] = theta[sigma(j)]: 2j for j <= floor(d/2),
/// 2(d-j)+1 above. Equal to the first candidate ordering.
std::vector<int> racah_index_map(int d);

/// bar_theta[i] = theta[sigma(i)] and bar_theta_star[i] = (theta*_i + (r-d)/2)^2.
/// Throws std::invalid_argument unless p has the same (d, r) and s = -r.
bool check_index_mapping(const DualHahnParams& p, const RacahParams& q);

/// bar_b = b, bar_c = c, bar_a = a, bar_k = k, bar_nu = nu.
bool check_unbarred_identities(const DualHahnParams& p, const RacahParams& q);

/// bar_b* and bar_c* as products of consecutive b*, c* (with the parity
/// dependent middle entries), and bar_k*_i = k*_{sigma(i)}.
bool check_starred_products(const DualHahnParams& p, const RacahParams& q);

/// bar_varphi_i recomputed as bar_b_{i-1} times the quotient of
/// bar_theta_star differences, entry by entry against the stored closed form.
bool check_varphi_quotient(const RacahParams& q);

/// V(i, j) = u_i(bar_theta_j) = 4F3(-i, i-d+r, -j, j-d-1/2; -d, (r-d)/2, (r-d+1)/2; 1).
ValueTable eval_table_4F3(const RacahParams& q);

/// u_i(bar_theta_j) from the Leonard-system sum over bar_theta*, bar_theta and
/// bar_varphi, independent of both 3F2 and 4F3 code paths.
ValueTable eval_table_varphi_sum(const RacahParams& q);

/// V(i, j) == U(i, sigma(j)).
bool check_4F3_matches_dual_hahn(const ValueTable& v, const ValueTable& u);

/// x u_i(x) = bar_b_i u_{i+1} + bar_a_i u_i + bar_c_i u_{i-1} at every barred node.
bool check_barred_recurrence(const RacahParams& q, const ValueTable& v);

/// sum_h V(i,h) V(j,h) bar_k*_h == delta_ij bar_nu / bar_k_i, and each sum is
/// the dual Hahn orthogonality sum re-indexed by sigma.
bool check_racah_orthogonality(const DualHahnParams& p, const RacahParams& q, const ValueTable& v);

/// In the basis {u_i}: [L] = tridiag(bar_b; bar_a; bar_c) and
/// [(L* + (r-d)/2)^2] = diag(bar_theta*). In the first candidate ordering of
/// {u*_i}: [L] = diag(bar_theta) and [(L* + (r-d)/2)^2] = tridiag(bar_b*; bar_a*; bar_c*).
bool check_barred_matrices(const DualHahnParams& p, const RacahParams& q);

/// Coefficients (scale, offset) of an affine map x -> scale * x + offset.
using AffineMap = std::pair<Rational, Rational>;

struct AffineMaps {
  AffineMap dual_hahn;  ///< x -> x + d(d+r+s+1) with s = -r
  AffineMap racah;      ///< x -> 4x + d(d+1)
};

AffineMaps affine_maps(int d, const Rational& r);

/// x -> x + d(d+r+s+1), for any (r, s).
AffineMap dual_hahn_affine_map(int d, const Rational& r, const Rational& s);

inline Rational apply(const AffineMap& map, const Rational& x) { return map.first * x + map.second; }

/// Textbook Racah lattice lambda(x) = x (x + gamma + delta + 1) for the
/// parameters (N, alpha, beta, gamma, delta) = (d, -d-1, r, (r-d-1)/2, -(r+d)/2 - 1).
Rational standard_racah_node(int d, const Rational& r, const Rational& x);

/// Textbook Racah polynomial R_i(lambda(x); alpha, beta, gamma, delta)
/// = 4F3(-i, i+alpha+beta+1, -x, x+gamma+delta+1; alpha+1, beta+delta+1, gamma+1; 1)
/// with the parameters above.
Rational standard_racah_eval(int d, const Rational& r, int i, const Rational& x);

/// Textbook dual Hahn lattice lambda(x) = x (x + gamma + delta + 1) for
/// (N, gamma, delta) = (d, -s-d-1, -r-d-1).
Rational standard_dual_hahn_node(int d, const Rational& r, const Rational& s, const Rational& x);

}  // namespace leonard_lab
