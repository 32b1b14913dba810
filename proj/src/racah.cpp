#include "leonard_lab/racah.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "leonard_lab/errors.hpp"
#include "leonard_lab/hypergeometric.hpp"
#include "leonard_lab/leonard.hpp"

namespace leonard_lab {

namespace {

RationalVector zeros(int d) { return RationalVector::Constant(d + 1, Rational(0)); }

void require_compatible(const DualHahnParams& p, const RacahParams& q, const char* who) {
  if (p.d != q.d || p.r != q.r || p.s != -q.r) {
    throw std::invalid_argument(std::string(who) + ": dual Hahn params must share (d, r) with s = -r");
  }
}

// 4F3 denominators of u_i(bar_theta_j).
std::array<Rational, 3> racah_denominators(int d, const Rational& r) {
  return {Rational(-d), (r - Rational(d)) / 2, (r - Rational(d - 1)) / 2};
}

}  // namespace

RacahParams build_racah_params(int d, const Rational& r) {
  if (d < 0) throw ParameterDomainError("d must be >= 0, got " + std::to_string(d));
  if (r.is_zero()) throw ParameterDomainError("r must be nonzero");
  if (r <= Rational(-1) || r >= Rational(1)) throw ParameterDomainError("r must lie in (-1, 1), got " + r.str());

  for (const Rational& beta : racah_denominators(d, r)) {
    for (int m = 0; m < d; ++m) {
      if ((beta + Rational(m)).is_zero()) {
        throw ParameterDomainError("4F3 denominator (" + beta.str() + ")_i vanishes within i <= d");
      }
    }
  }

  RacahParams q;
  q.d = d;
  q.r = r;
  q.bar_theta = zeros(d);
  q.bar_theta_star = zeros(d);
  q.bar_b = zeros(d);
  q.bar_c = zeros(d);
  q.bar_a = zeros(d);
  q.bar_k = zeros(d);
  q.bar_b_star = zeros(d);
  q.bar_c_star = zeros(d);
  q.bar_a_star = zeros(d);
  q.bar_k_star = zeros(d);
  q.bar_varphi = zeros(d);

  const Rational shift = (r - Rational(d)) / 2;
  for (int i = 0; i <= d; ++i) {
    const Rational e(d - 2 * i);
    q.bar_theta(i) = e * (e + 1);
    q.bar_theta_star(i) = (Rational(i) + shift) * (Rational(i) + shift);
    if (i < d) {
      const Rational di(d - i);
      q.bar_b(i) = di * (di - r);
      q.bar_b_star(i) = di * Rational(2 * (d - i) + 1) * (e - r - 1) * (e - r) /
                        (Rational(2) * Rational(2 * d - 4 * i - 1) * Rational(2 * d - 4 * i + 1));
    }
    if (i > 0) {
      q.bar_c(i) = Rational(i) * (Rational(i) + r);
      q.bar_c_star(i) = Rational(i) * Rational(2 * i - 1) * (e + r + 1) * (e + r + 2) /
                        (Rational(2) * Rational(2 * d - 4 * i + 1) * Rational(2 * d - 4 * i + 3));
      q.bar_varphi(i) = Rational(i) * Rational(i - d - 1) * (e - r + 1) * (e - r + 2);
    }
  }
  for (int i = 0; i <= d; ++i) {
    q.bar_a(i) = q.bar_theta(0) - q.bar_b(i) - q.bar_c(i);
    q.bar_a_star(i) = q.bar_theta_star(0) - q.bar_b_star(i) - q.bar_c_star(i);
  }
  q.bar_k(0) = Rational(1);
  q.bar_k_star(0) = Rational(1);
  for (int i = 1; i <= d; ++i) {
    q.bar_k(i) = q.bar_k(i - 1) * q.bar_b(i - 1) / q.bar_c(i);
    q.bar_k_star(i) = q.bar_k_star(i - 1) * q.bar_b_star(i - 1) / q.bar_c_star(i);
  }
  Rational num(1);
  Rational den(1);
  for (int h = 1; h <= d; ++h) {
    num *= q.bar_theta(0) - q.bar_theta(h);
    den *= q.bar_c(h);
  }
  q.bar_nu = num / den;
  return q;
}

std::vector<int> racah_index_map(int d) {
  std::vector<int> sigma;
  for (int j = 0; j <= d; ++j) sigma.push_back(j <= d / 2 ? 2 * j : 2 * (d - j) + 1);
  return sigma;
}

bool check_index_mapping(const DualHahnParams& p, const RacahParams& q) {
  require_compatible(p, q, "check_index_mapping");
  const auto sigma = racah_index_map(q.d);
  const Rational shift = (q.r - Rational(q.d)) / 2;
  for (int i = 0; i <= q.d; ++i) {
    if (q.bar_theta(i) != p.theta(sigma[static_cast<std::size_t>(i)])) return false;
    const Rational shifted = p.theta_star(i) + shift;
    if (q.bar_theta_star(i) != shifted * shifted) return false;
  }
  return true;
}

bool check_unbarred_identities(const DualHahnParams& p, const RacahParams& q) {
  require_compatible(p, q, "check_unbarred_identities");
  for (int i = 0; i <= q.d; ++i) {
    if (q.bar_b(i) != p.b(i) || q.bar_c(i) != p.c(i) || q.bar_a(i) != p.a(i) || q.bar_k(i) != p.k(i)) {
      return false;
    }
  }
  return q.bar_nu == p.nu;
}

bool check_starred_products(const DualHahnParams& p, const RacahParams& q) {
  require_compatible(p, q, "check_starred_products");
  const int d = q.d;
  const int m = d / 2;
  const bool odd = d % 2 == 1;
  const Rational middle = Rational(d + 1) * q.r / 2;
  const auto& bs = p.b_star;
  const auto& cs = p.c_star;

  for (int i = 0; i <= d - 1; ++i) {
    Rational expected;
    if (i <= m - 1) {
      expected = bs(2 * i) * bs(2 * i + 1);
    } else if (i == m) {
      expected = middle * (odd ? bs(d - 1) : cs(d));
    } else {
      expected = cs(2 * (d - i)) * cs(2 * (d - i) + 1);
    }
    if (q.bar_b_star(i) != expected) return false;
  }
  for (int i = 1; i <= d; ++i) {
    Rational expected;
    if (i <= m) {
      expected = cs(2 * i) * cs(2 * i - 1);
    } else if (i == m + 1) {
      expected = middle * (odd ? cs(d) : bs(d - 1));
    } else {
      expected = bs(2 * (d - i + 1)) * bs(2 * (d - i) + 1);
    }
    if (q.bar_c_star(i) != expected) return false;
  }
  const auto sigma = racah_index_map(d);
  for (int i = 0; i <= d; ++i) {
    if (q.bar_k_star(i) != p.k_star(sigma[static_cast<std::size_t>(i)])) return false;
  }
  return true;
}

bool check_varphi_quotient(const RacahParams& q) {
  const auto& ts = q.bar_theta_star;
  for (int i = 1; i <= q.d; ++i) {
    Rational num(1);
    for (int h = 0; h < i; ++h) num *= ts(i) - ts(h);
    Rational den(1);
    for (int h = 0; h < i - 1; ++h) den *= ts(i - 1) - ts(h);
    if (q.bar_varphi(i) != q.bar_b(i - 1) * num / den) return false;
  }
  return true;
}

ValueTable eval_table_4F3(const RacahParams& q) {
  const int d = q.d;
  const auto denominators = racah_denominators(d, q.r);
  ValueTable out{RationalMatrix(d + 1, d + 1)};
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      const std::array<Rational, 4> numerators{Rational(-i), Rational(i - d) + q.r, Rational(-j),
                                               Rational(j - d) - Rational(1, 2)};
      out.values(i, j) = hypergeometric_terminating(numerators, denominators, i);
    }
  }
  return out;
}

ValueTable eval_table_varphi_sum(const RacahParams& q) {
  const int d = q.d;
  ValueTable out{RationalMatrix(d + 1, d + 1)};
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      Rational sum(1);
      Rational term(1);
      for (int h = 1; h <= i; ++h) {
        term *= (q.bar_theta_star(i) - q.bar_theta_star(h - 1)) * (q.bar_theta(j) - q.bar_theta(h - 1));
        term /= q.bar_varphi(h);
        sum += term;
      }
      out.values(i, j) = sum;
    }
  }
  return out;
}

bool check_4F3_matches_dual_hahn(const ValueTable& v, const ValueTable& u) {
  const int d = v.d();
  if (u.d() != d) return false;
  const auto sigma = racah_index_map(d);
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      if (v(i, j) != u(i, sigma[static_cast<std::size_t>(j)])) return false;
    }
  }
  return true;
}

bool check_barred_recurrence(const RacahParams& q, const ValueTable& v) {
  const int d = q.d;
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      Rational rhs = q.bar_a(i) * v(i, j);
      if (i < d) rhs += q.bar_b(i) * v(i + 1, j);
      if (i > 0) rhs += q.bar_c(i) * v(i - 1, j);
      if (q.bar_theta(j) * v(i, j) != rhs) return false;
    }
  }
  return true;
}

bool check_racah_orthogonality(const DualHahnParams& p, const RacahParams& q, const ValueTable& v) {
  require_compatible(p, q, "check_racah_orthogonality");
  const int d = q.d;
  const auto sigma = racah_index_map(d);
  // The dual Hahn table, recovered from v through sigma (a bijection).
  RationalMatrix u(d + 1, d + 1);
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) u(i, sigma[static_cast<std::size_t>(j)]) = v(i, j);
  }
  for (int i = 0; i <= d; ++i) {
    for (int j = i; j <= d; ++j) {
      Rational barred(0);
      for (int h = 0; h <= d; ++h) barred += v(i, h) * v(j, h) * q.bar_k_star(h);
      Rational plain(0);
      for (int h = 0; h <= d; ++h) plain += u(i, h) * u(j, h) * p.k_star(h);
      const Rational expected = i == j ? q.bar_nu / q.bar_k(i) : Rational(0);
      if (barred != expected || plain != barred) return false;
    }
  }
  return true;
}

bool check_barred_matrices(const DualHahnParams& p, const RacahParams& q) {
  require_compatible(p, q, "check_barred_matrices");
  const int d = q.d;
  const Rational lambda = (q.r - Rational(d)) / 2;

  const RationalMatrix l_u = matrix_L_u_basis(p);
  const RationalMatrix l_u_barred = tridiagonal(q.bar_a, q.bar_b, q.bar_c.tail(d));
  RationalMatrix square_u = matrix_Lstar_u_basis(p);
  for (int i = 0; i <= d; ++i) square_u(i, i) += lambda;
  square_u = square_u * square_u;
  if (!exactly_equal(l_u, l_u_barred) || !exactly_equal(square_u, diagonal_matrix(q.bar_theta_star))) {
    return false;
  }

  const auto sigma = racah_index_map(d);
  const RationalMatrix l_reordered = permute_basis(matrix_L_ustar_basis(p), sigma);
  const RationalMatrix square_reordered = permute_basis(lstar_shift_square(p, lambda), sigma);
  return exactly_equal(l_reordered, diagonal_matrix(q.bar_theta)) &&
         exactly_equal(square_reordered, tridiagonal(q.bar_a_star, q.bar_b_star, q.bar_c_star.tail(d)));
}

AffineMap dual_hahn_affine_map(int d, const Rational& r, const Rational& s) {
  return {Rational(1), Rational(d) * (Rational(d + 1) + r + s)};
}

AffineMaps affine_maps(int d, const Rational& r) {
  return AffineMaps{
      .dual_hahn = dual_hahn_affine_map(d, r, -r),
      .racah = {Rational(4), Rational(d) * Rational(d + 1)},
  };
}

Rational standard_racah_node(int d, const Rational& r, const Rational& x) {
  const Rational gamma = (r - Rational(d + 1)) / 2;
  const Rational delta = -(r + Rational(d)) / 2 - 1;
  return x * (x + gamma + delta + 1);
}

Rational standard_racah_eval(int d, const Rational& r, int i, const Rational& x) {
  const Rational alpha(-d - 1);
  const Rational& beta = r;
  const Rational gamma = (r - Rational(d + 1)) / 2;
  const Rational delta = -(r + Rational(d)) / 2 - 1;
  const std::array<Rational, 4> numerators{Rational(-i), Rational(i) + alpha + beta + 1, -x, x + gamma + delta + 1};
  const std::array<Rational, 3> denominators{alpha + 1, beta + delta + 1, gamma + 1};
  return hypergeometric_terminating(numerators, denominators, i);
}

Rational standard_dual_hahn_node(int d, const Rational& r, const Rational& s, const Rational& x) {
  const Rational gamma = -s - Rational(d + 1);
  const Rational delta = -r - Rational(d + 1);
  return x * (x + gamma + delta + 1);
}

}  // namespace leonard_lab
