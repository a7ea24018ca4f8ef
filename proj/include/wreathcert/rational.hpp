#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace wreathcert {

using Rational = mpq_class;

inline Rational ratio(std::int64_t num, std::int64_t den) {
  Rational r(mpz_class(std::to_string(num), 10), mpz_class(std::to_string(den), 10));
  r.canonicalize();
  return r;
}

/// Parses "p/q", an integer, or a finite decimal such as "0.48" exactly.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form ("p" when the denominator is 1).
std::string format_rational(const Rational& r);

inline double to_double(const Rational& r) { return r.get_d(); }
inline double to_double(double d) { return d; }

}  // namespace wreathcert
