#pragma once

// Pochhammer symbols, binomials and terminating hypergeometric sums at 1.

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>

#include "leonard_lab/errors.hpp"
#include "leonard_lab/rational.hpp"

namespace leonard_lab {

/// Rising factorial (x)_i = x (x+1) ... (x+i-1); (x)_0 = 1.
template <typename Scalar>
Scalar pochhammer(const Scalar& x, int i) {
  if (i < 0) throw std::invalid_argument("pochhammer: negative length");
  Scalar out(1);
  for (int k = 0; k < i; ++k) out *= x + Scalar(k);
  return out;
}

/// n choose i as an exact rational. Throws std::invalid_argument if i > n.
Rational binomial(int n, int i);

/// sum_{i=0}^{terms} prod_k (alpha_k)_i / prod_k (beta_k)_i / i!
///
/// At least one numerator must be a non-positive integer -t with t <= terms,
/// so the sum is the whole (finite) series. Summation stops at the first index
/// where a numerator Pochhammer vanishes; that check runs before the
/// denominator at the same index is looked at. A denominator Pochhammer that
/// vanishes earlier raises HypergeometricPoleError carrying the index.
Rational hypergeometric_terminating(std::span<const Rational> numerators,
                                    std::span<const Rational> denominators, int terms);

/// Convenience overload for braced lists.
inline Rational hypergeometric_terminating(std::initializer_list<Rational> numerators,
                                           std::initializer_list<Rational> denominators, int terms) {
  return hypergeometric_terminating(std::span<const Rational>(numerators.begin(), numerators.size()),
                                    std::span<const Rational>(denominators.begin(), denominators.size()),
                                    terms);
}

}  // namespace leonard_lab
