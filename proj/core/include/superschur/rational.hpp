#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace superschur {

/// Exact rational scalar used throughout the library.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q" in base 10; throws std::invalid_argument on bad input.
Rational parse_rational(std::string_view text);

/// Parity of a sign exponent: (-1)^e.
inline int sign_of(int exponent) { return (exponent & 1) ? -1 : 1; }

}  // namespace superschur
