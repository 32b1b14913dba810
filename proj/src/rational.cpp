#include "leonard_lab/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <utility>

namespace leonard_lab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (std::isdigit(static_cast<unsigned char>(ch)) == 0) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_ = mpq_class(numerator, 1);
  value_ /= denominator;
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw RationalParseError("malformed rational '" + std::string(text) +
                             "' (expected p or p/q with optional sign)");
  }
  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) {
    throw RationalParseError("malformed rational '" + std::string(text) + "' (zero denominator)");
  }
  if (negative) num = -num;
  return Rational(mpq_class(num, den));
}

std::string Rational::str() const {
  // mpq's own get_str already omits "/1" for integers.
  return value_.get_str(10);
}

bool Rational::is_integer() const noexcept { return value_.get_den() == 1; }

long Rational::to_long() const {
  if (!is_integer() || !value_.get_num().fits_slong_p()) {
    throw std::range_error("Rational::to_long: " + str() + " is not a machine integer");
  }
  return value_.get_num().get_si();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational operator-(const Rational& x) {
  Rational out;
  out.value_ = -x.value_;
  return out;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& x, int e) {
  if (e < 0) return Rational(1) / pow(x, -e);
  Rational out(1);
  Rational base(x);
  auto n = static_cast<unsigned>(e);
  while (n != 0) {
    if ((n & 1U) != 0) out *= base;
    n >>= 1U;
    if (n != 0) base *= base;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

}  // namespace leonard_lab
