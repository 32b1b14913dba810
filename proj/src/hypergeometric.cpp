#include "leonard_lab/hypergeometric.hpp"

#include <algorithm>

namespace leonard_lab {

Rational binomial(int n, int i) {
  if (n < 0 || i < 0 || i > n) {
    throw std::invalid_argument("binomial: need 0 <= i <= n, got n=" + std::to_string(n) +
                                ", i=" + std::to_string(i));
  }
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(i));
  return Rational(mpq_class(out));
}

Rational hypergeometric_terminating(std::span<const Rational> numerators,
                                    std::span<const Rational> denominators, int terms) {
  if (terms < 0) throw std::invalid_argument("hypergeometric_terminating: negative term count");
  const bool terminates = std::any_of(numerators.begin(), numerators.end(), [terms](const Rational& a) {
    return a.is_integer() && a.sign() <= 0 && -a <= Rational(terms);
  });
  if (!terminates) {
    throw std::invalid_argument(
        "hypergeometric_terminating: no numerator parameter -t with 0 <= t <= " + std::to_string(terms));
  }

  Rational sum(1);
  Rational term(1);
  for (int i = 1; i <= terms; ++i) {
    // Term ratio t_i / t_{i-1} = prod(alpha + i - 1) / (prod(beta + i - 1) * i).
    Rational num(1);
    for (const Rational& a : numerators) num *= a + Rational(i - 1);
    if (num.is_zero()) break;
    Rational den(i);
    for (const Rational& b : denominators) den *= b + Rational(i - 1);
    if (den.is_zero()) {
      throw HypergeometricPoleError(
          i, "hypergeometric_terminating: denominator Pochhammer vanishes at index " + std::to_string(i));
    }
    term *= num;
    term /= den;
    sum += term;
  }
  return sum;
}

}  // namespace leonard_lab
