#include "leonard_lab/params.hpp"

#include <stdexcept>
#include <string>

#include "leonard_lab/errors.hpp"
#include "leonard_lab/hypergeometric.hpp"

namespace leonard_lab {

namespace {

RationalVector zeros(int d) { return RationalVector::Constant(d + 1, Rational(0)); }

}  // namespace

DualHahnParams build_params(int d, const Rational& r, const Rational& s) {
  if (d < 0) throw ParameterDomainError("d must be >= 0, got " + std::to_string(d));
  if (r <= Rational(-1)) throw ParameterDomainError("r must be > -1, got " + r.str());
  if (s <= Rational(-1)) throw ParameterDomainError("s must be > -1, got " + s.str());

  DualHahnParams p;
  p.d = d;
  p.r = r;
  p.s = s;
  p.theta = zeros(d);
  p.theta_star = zeros(d);
  p.b = zeros(d);
  p.c = zeros(d);
  p.a = zeros(d);
  p.k = zeros(d);
  p.b_star = zeros(d);
  p.c_star = zeros(d);
  p.a_star = zeros(d);
  p.k_star = zeros(d);

  const Rational rs = r + s;
  for (int i = 0; i <= d; ++i) {
    const Rational di(d - i);
    p.theta(i) = di * (di + rs + 1);
    p.theta_star(i) = Rational(i);
    if (i < d) {
      p.b(i) = di * (di + s);
      p.b_star(i) = di * (Rational(i - d) - s) * pochhammer(Rational(2 * (d - i)) + rs + 2, i) /
                    pochhammer(Rational(2 * (d - i)) + rs, i + 1);
    }
    if (i > 0) {
      p.c(i) = Rational(i) * (Rational(i) + r);
      p.c_star(i) = Rational(i) * (Rational(i - d - 1) - r) * pochhammer(di + rs + 1, d - i) /
                    pochhammer(di + rs + 2, d - i + 1);
    }
  }
  for (int i = 0; i <= d; ++i) {
    p.a(i) = p.theta(0) - p.b(i) - p.c(i);
    p.a_star(i) = p.theta_star(0) - p.b_star(i) - p.c_star(i);
  }

  p.k(0) = Rational(1);
  p.k_star(0) = Rational(1);
  for (int i = 1; i <= d; ++i) {
    p.k(i) = p.k(i - 1) * p.b(i - 1) / p.c(i);
    p.k_star(i) = p.k_star(i - 1) * p.b_star(i - 1) / p.c_star(i);
  }

  Rational nu_num(1);
  Rational nu_den(1);
  for (int h = 1; h <= d; ++h) {
    nu_num *= p.theta(0) - p.theta(h);
    nu_den *= p.c(h);
  }
  p.nu = nu_num / nu_den;
  return p;
}

Rational k_closed_form(const DualHahnParams& p, int i) {
  return binomial(p.d, i) * pochhammer(Rational(p.d - i) + p.s + 1, i) / pochhammer(p.r + 1, i);
}

Rational k_star_closed_form(const DualHahnParams& p, int i) {
  const int d = p.d;
  const Rational rs = p.r + p.s;
  const Rational num = binomial(d, i) * pochhammer(Rational(-d) - p.s, i) * pochhammer(Rational(d + 1) + rs, d);
  const Rational den = pochhammer(Rational(-d) - p.r, i) * pochhammer(Rational(2 * (d - i) + 2) + rs, i) *
                       pochhammer(Rational(d - i + 1) + rs, d - i);
  return num / den;
}

Rational nu_closed_form(const DualHahnParams& p) {
  return pochhammer(Rational(p.d + 1) + p.r + p.s, p.d) / pochhammer(p.r + 1, p.d);
}

bool satisfies_invariants(const DualHahnParams& p) {
  const int d = p.d;
  const Rational zero(0);
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j < i; ++j) {
      if (p.theta(i) == p.theta(j)) return false;
    }
    if (p.k(i) <= zero || p.k_star(i) <= zero) return false;
    if (i < d && (p.b(i).is_zero() || p.b_star(i).is_zero())) return false;
    if (i > 0 && (p.c(i).is_zero() || p.c_star(i).is_zero())) return false;
    if (p.a(i) != p.theta(0) - p.b(i) - p.c(i)) return false;
    if (p.a_star(i) != p.theta_star(0) - p.b_star(i) - p.c_star(i)) return false;
  }
  if (!p.b(d).is_zero() || !p.c(0).is_zero() || !p.b_star(d).is_zero() || !p.c_star(0).is_zero()) {
    return false;
  }
  return p.nu > zero;
}

bool check_closed_forms(const DualHahnParams& p) {
  if (p.nu != nu_closed_form(p)) return false;
  for (int i = 0; i <= p.d; ++i) {
    if (p.k(i) != k_closed_form(p, i)) return false;
    if (p.k_star(i) != k_star_closed_form(p, i)) return false;
  }
  return true;
}

RationalVector build_astar_sums(const DualHahnParams& p) {
  if (p.d < 1) throw std::invalid_argument("build_astar_sums: need d >= 1");
  const int d = p.d;
  const Rational diff = p.r - p.s;
  const Rational sum = p.r + p.s;
  RationalVector out(d);
  for (int i = 0; i + 2 <= d; ++i) {
    // Both denominator factors exceed 2 + r + s > 0 on the domain r, s > -1.
    out(i) = Rational(d) - diff / 2 +
             diff * sum * (Rational(2 * d + 2) + sum) /
                 (Rational(2) * (Rational(2 * (d - i) - 2) + sum) * (Rational(2 * (d - i) + 2) + sum));
  }
  out(d - 1) = Rational(d) + Rational(d - 1) * diff / (sum + 4);
  return out;
}

}  // namespace leonard_lab
