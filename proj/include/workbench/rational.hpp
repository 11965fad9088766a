#pragma once

#include <gmpxx.h>

#include <string>

namespace workbench {

// Exact rational scalar. mpq_class keeps gcd(num, den) = 1 and den > 0 after
// canonicalization, which is exactly the invariant the rest of the code
// relies on.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rational_of(long n) { return Rational(n); }

inline Rational rational_of(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "p", "-p", or "p/q". Throws std::invalid_argument on junk.
Rational rational_from_string(const std::string& text);

std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace workbench
