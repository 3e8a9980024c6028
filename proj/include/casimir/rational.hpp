#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace casimir {

// All arithmetic in the engine is exact. cpp_rational keeps values in
// canonical form: gcd(num, den) = 1, den > 0.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// cpp_rational's two-argument constructor rejects negative denominators
inline Rational rat(long long num, long long den = 1) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// "5", "-3/7": denominator omitted when 1.
std::string rat_str(const Rational& r);

/// Always "p/q", e.g. "5/1"; used by the sparse file format.
std::string rat_frac_str(const Rational& r);

/// Parses both forms accepted above. Throws std::invalid_argument on junk.
Rational parse_rat(const std::string& s);

}  // namespace casimir
