#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace carnot {

/// Exact arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (gmp canonical form).
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& s);

/// Serializes as "p" or "p/q" (never a float).
std::string rational_to_string(const Rational& r);

}  // namespace carnot
