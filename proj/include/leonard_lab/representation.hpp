#pragma once

// Value tables of the polynomials u_i at the nodes theta_j, and the matrices
// of L and L* in the bases {u_i} and {u*_i}.
//
// A polynomial of degree <= d is carried by its values at theta_0..theta_d;
// no coefficient lists are ever formed.

#include "leonard_lab/matrix.hpp"
#include "leonard_lab/params.hpp"

namespace leonard_lab {

/// values(i, j) = u_i(theta_j), 0 <= i, j <= d.
struct ValueTable {
  RationalMatrix values;

  [[nodiscard]] int d() const { return static_cast<int>(values.rows()) - 1; }
  [[nodiscard]] const Rational& operator()(int i, int j) const { return values(i, j); }
};

/// u_i(theta_j) = 3F2(-i, -j, j-r-s-2d-1; -s-d, -d; 1).
ValueTable eval_table_hypergeometric(const DualHahnParams& p);

/// u_0 = 1, u_{i+1}(theta_j) = ((theta_j - a_i) u_i - c_i u_{i-1}) / b_i.
/// Shares no code with eval_table_hypergeometric.
ValueTable eval_table_recurrence(const DualHahnParams& p);

/// The i = d recurrence row: theta_j u_d = a_d u_d + c_d u_{d-1} for all j.
bool check_top_row(const DualHahnParams& p, const ValueTable& u);

/// sum_h u_i(theta_h) u_j(theta_h) k*_h == delta_ij nu / k_i.
bool check_orthogonality(const DualHahnParams& p, const ValueTable& u);

/// theta*_i u_i(theta_j) == b*_j u_i(theta_{j+1}) + a*_j u_i(theta_j) + c*_j u_i(theta_{j-1}).
bool check_difference_eq(const DualHahnParams& p, const ValueTable& u);

/// Row i has exact degree i: its Newton divided differences over the nodes
/// vanish above order i and not at order i.
bool check_degree_invariant(const DualHahnParams& p, const ValueTable& u);

// Matrices of L and L* in the basis {u_i}: tridiag(b; a; c) and diag(theta*).
RationalMatrix matrix_L_u_basis(const DualHahnParams& p);
RationalMatrix matrix_Lstar_u_basis(const DualHahnParams& p);

// Matrices of L and L* in the basis {u*_i}: diag(theta) and tridiag(b*; a*; c*).
RationalMatrix matrix_L_ustar_basis(const DualHahnParams& p);
RationalMatrix matrix_Lstar_ustar_basis(const DualHahnParams& p);

/// Column i holds the coordinates of u_i in the basis {u*_j}:
/// entry (j, i) = u_i(theta_j) k*_j / nu.
RationalMatrix change_of_basis_u_to_ustar(const DualHahnParams& p, const ValueTable& u);

/// With W = change_of_basis_u_to_ustar: [T]_{u*} W == W [T]_u for T = L, L*.
bool check_intertwining(const DualHahnParams& p, const ValueTable& u);

/// Both representations of L have characteristic polynomial prod (x - theta_i),
/// both representations of L* have prod (x - theta*_i), and traces agree.
bool check_characteristic_polynomials(const DualHahnParams& p);

}  // namespace leonard_lab
