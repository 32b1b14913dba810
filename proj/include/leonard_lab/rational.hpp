#pragma once

// Exact arbitrary-precision rational scalar.
//
// Rational is a value type wrapping GMP's mpq_class. Every result is kept in
// lowest terms with a positive denominator, so structural equality is
// mathematical equality. The wrapper exists so the type behaves like an
// ordinary scalar inside Eigen expressions (no gmpxx expression templates leak
// into Eigen's kernels).

#include <compare>
#include <concepts>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include <Eigen/Core>

namespace leonard_lab {

/// Thrown by Rational::parse for anything that is not "[+-]p" or "[+-]p/q".
class RationalParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      value_ = mpq_class(static_cast<long>(value));
    } else {
      value_ = mpq_class(static_cast<unsigned long>(value));
    }
  }

  /// numerator/denominator; throws std::domain_error when denominator == 0.
  Rational(long numerator, long denominator);

  explicit Rational(mpq_class value);

  /// Parses "p" or "p/q" with an optional leading sign. Decimals are rejected.
  static Rational parse(std::string_view text);

  [[nodiscard]] const mpq_class& value() const noexcept { return value_; }
  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }

  /// "p/q", with "/q" omitted when q == 1.
  [[nodiscard]] std::string str() const;

  [[nodiscard]] int sign() const noexcept { return sgn(value_); }
  [[nodiscard]] bool is_zero() const noexcept { return sign() == 0; }
  [[nodiscard]] bool is_integer() const noexcept;

  /// Only valid when is_integer() and the value fits in a long.
  [[nodiscard]] long to_long() const;

  /// Lossy; for diagnostics only.
  [[nodiscard]] double to_double() const { return value_.get_d(); }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator-(const Rational& x);
  friend Rational operator+(const Rational& lhs, const Rational& rhs) {
    Rational out(lhs);
    out += rhs;
    return out;
  }
  friend Rational operator-(const Rational& lhs, const Rational& rhs) {
    Rational out(lhs);
    out -= rhs;
    return out;
  }
  friend Rational operator*(const Rational& lhs, const Rational& rhs) {
    Rational out(lhs);
    out *= rhs;
    return out;
  }
  friend Rational operator/(const Rational& lhs, const Rational& rhs) {
    Rational out(lhs);
    out /= rhs;
    return out;
  }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

Rational abs(const Rational& x);

/// x^e for integer e (negative e inverts; 0^negative throws std::domain_error).
Rational pow(const Rational& x, int e);

std::ostream& operator<<(std::ostream& os, const Rational& x);

namespace literals {
/// 3_q == Rational(3)
inline Rational operator""_q(unsigned long long v) { return Rational(v); }
}  // namespace literals

}  // namespace leonard_lab

namespace Eigen {

template <>
struct NumTraits<leonard_lab::Rational> : GenericNumTraits<leonard_lab::Rational> {
  using Real = leonard_lab::Rational;
  using NonInteger = leonard_lab::Rational;
  using Nested = leonard_lab::Rational;
  using Literal = leonard_lab::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };

  // Exact arithmetic: no rounding, so every tolerance is zero.
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
