#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mwgap {

/// Exact arbitrary-precision rational. Everything that feeds an exact claim
/// (weights, lpc, cut costs, distances, potentials) uses this type.
using Rational = mpq_class;

/// num/den in canonical form. gmpxx does not canonicalize two-argument
/// construction, so every literal fraction goes through here.
inline Rational frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Canonical text form "p/q": gcd(p, q) = 1, q > 0, integers written as "p/1".
std::string to_string(const Rational& value);

/// Parses "p/q" or a bare integer "p". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace mwgap
