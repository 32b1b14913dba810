#include "leonard_lab/representation.hpp"

#include <array>
#include <string>

#include "leonard_lab/errors.hpp"
#include "leonard_lab/hypergeometric.hpp"

namespace leonard_lab {

ValueTable eval_table_hypergeometric(const DualHahnParams& p) {
  const int d = p.d;
  const Rational top = p.r + p.s + Rational(2 * d + 1);
  const std::array<Rational, 2> denominators{-p.s - Rational(d), Rational(-d)};
  ValueTable out{RationalMatrix(d + 1, d + 1)};
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      const std::array<Rational, 3> numerators{Rational(-i), Rational(-j), Rational(j) - top};
      try {
        out.values(i, j) = hypergeometric_terminating(numerators, denominators, i);
      } catch (const HypergeometricPoleError& e) {
        throw InternalInconsistency("3F2 pole at (i, j) = (" + std::to_string(i) + ", " + std::to_string(j) +
                                    "): " + e.what());
      }
    }
  }
  return out;
}

ValueTable eval_table_recurrence(const DualHahnParams& p) {
  const int d = p.d;
  ValueTable out{RationalMatrix(d + 1, d + 1)};
  for (int j = 0; j <= d; ++j) out.values(0, j) = Rational(1);
  for (int i = 0; i < d; ++i) {
    if (p.b(i).is_zero()) {
      throw ParameterDomainError("eval_table_recurrence: b_" + std::to_string(i) + " = 0");
    }
    for (int j = 0; j <= d; ++j) {
      Rational next = (p.theta(j) - p.a(i)) * out.values(i, j);
      if (i > 0) next -= p.c(i) * out.values(i - 1, j);
      out.values(i + 1, j) = next / p.b(i);
    }
  }
  return out;
}

bool check_top_row(const DualHahnParams& p, const ValueTable& u) {
  const int d = p.d;
  for (int j = 0; j <= d; ++j) {
    Rational rhs = p.a(d) * u(d, j);
    if (d > 0) rhs += p.c(d) * u(d - 1, j);
    if (p.theta(j) * u(d, j) != rhs) return false;
  }
  return true;
}

bool check_orthogonality(const DualHahnParams& p, const ValueTable& u) {
  const int d = p.d;
  for (int i = 0; i <= d; ++i) {
    for (int j = i; j <= d; ++j) {
      Rational sum(0);
      for (int h = 0; h <= d; ++h) sum += u(i, h) * u(j, h) * p.k_star(h);
      const Rational expected = i == j ? p.nu / p.k(i) : Rational(0);
      if (sum != expected) return false;
    }
  }
  return true;
}

bool check_difference_eq(const DualHahnParams& p, const ValueTable& u) {
  const int d = p.d;
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      // c*_0 = b*_d = 0, so the out-of-range neighbours are simply dropped.
      Rational rhs = p.a_star(j) * u(i, j);
      if (j < d) rhs += p.b_star(j) * u(i, j + 1);
      if (j > 0) rhs += p.c_star(j) * u(i, j - 1);
      if (p.theta_star(i) * u(i, j) != rhs) return false;
    }
  }
  return true;
}

bool check_degree_invariant(const DualHahnParams& p, const ValueTable& u) {
  const int d = p.d;
  for (int i = 0; i <= d; ++i) {
    const RationalVector row = u.values.row(i).transpose();
    const auto diffs = newton_divided_differences(p.theta, row);
    for (int order = 0; order <= d; ++order) {
      const bool zero = diffs[static_cast<std::size_t>(order)].is_zero();
      if (order == i && zero) return false;
      if (order > i && !zero) return false;
    }
  }
  return true;
}

RationalMatrix matrix_L_u_basis(const DualHahnParams& p) { return tridiagonal(p.a, p.b, p.c.tail(p.d)); }

RationalMatrix matrix_Lstar_u_basis(const DualHahnParams& p) { return diagonal_matrix(p.theta_star); }

RationalMatrix matrix_L_ustar_basis(const DualHahnParams& p) { return diagonal_matrix(p.theta); }

RationalMatrix matrix_Lstar_ustar_basis(const DualHahnParams& p) {
  return tridiagonal(p.a_star, p.b_star, p.c_star.tail(p.d));
}

RationalMatrix change_of_basis_u_to_ustar(const DualHahnParams& p, const ValueTable& u) {
  const int d = p.d;
  RationalMatrix w(d + 1, d + 1);
  for (int j = 0; j <= d; ++j) {
    const Rational scale = p.k_star(j) / p.nu;
    for (int i = 0; i <= d; ++i) w(j, i) = u(i, j) * scale;
  }
  return w;
}

bool check_intertwining(const DualHahnParams& p, const ValueTable& u) {
  const RationalMatrix w = change_of_basis_u_to_ustar(p, u);
  const RationalMatrix l_lhs = matrix_L_ustar_basis(p) * w;
  const RationalMatrix l_rhs = w * matrix_L_u_basis(p);
  const RationalMatrix ls_lhs = matrix_Lstar_ustar_basis(p) * w;
  const RationalMatrix ls_rhs = w * matrix_Lstar_u_basis(p);
  return exactly_equal(l_lhs, l_rhs) && exactly_equal(ls_lhs, ls_rhs);
}

bool check_characteristic_polynomials(const DualHahnParams& p) {
  const RationalMatrix l_u = matrix_L_u_basis(p);
  const RationalMatrix l_us = matrix_L_ustar_basis(p);
  const RationalMatrix ls_u = matrix_Lstar_u_basis(p);
  const RationalMatrix ls_us = matrix_Lstar_ustar_basis(p);
  if (l_u.trace() != l_us.trace() || ls_u.trace() != ls_us.trace()) return false;
  const auto l_expected = polynomial_from_roots(p.theta);
  const auto ls_expected = polynomial_from_roots(p.theta_star);
  return characteristic_polynomial(l_u) == l_expected && characteristic_polynomial(l_us) == l_expected &&
         characteristic_polynomial(ls_u) == ls_expected && characteristic_polynomial(ls_us) == ls_expected;
}

}  // namespace leonard_lab
