#pragma once

#include <stdexcept>
#include <string>

namespace leonard_lab {

/// A parameter lies outside the domain an operation is defined on
/// (for example r <= -1). The CLI maps this to exit code 2.
class ParameterDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A denominator Pochhammer symbol of a terminating hypergeometric series
/// vanished before the series terminated.
class HypergeometricPoleError : public std::domain_error {
 public:
  HypergeometricPoleError(int index, const std::string& what)
      : std::domain_error(what), index_(index) {}

  /// Summation index i at which (beta)_i became zero.
  [[nodiscard]] int index() const noexcept { return index_; }

 private:
  int index_;
};

/// Two independent routes disagreed. Always a bug, never a user error.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace leonard_lab
