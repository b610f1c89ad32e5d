#pragma once

#include <stdexcept>
#include <string>

namespace superschur {

/// An element required to be a unit is not invertible under the supplied oracle.
class NotInvertible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation would exceed a configured resource bound.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal consistency certificate failed (indicates a bug, not bad input).
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Resource bounds shared by the expensive constructions.
struct ResourceLimits {
  /// Maximum number of ambient matrix entries N*N for matrix algebras.
  std::size_t max_ambient_entries = 300000;
  /// Maximum number of spanning products (m+n)^(2(r+s)) for bidegree spans.
  std::size_t max_span_products = 1000000;
  /// Maximum (r+s)! for walled Brauer diagram enumeration.
  std::size_t max_diagrams = 40320;
};

}  // namespace superschur
