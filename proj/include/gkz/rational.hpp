// Exact rational arithmetic (GMP-backed) and small helpers used across gkz.
#pragma once

#include <gmpxx.h>

#include <string>

#include "gkz/errors.hpp"

namespace gkz {

// Canonical arbitrary-precision rational: lowest terms, positive denominator.
// mpq_class maintains both invariants through its arithmetic operators.
using Rational = mpq_class;
using Integer = mpz_class;

inline Integer factorial(long long n) {
  if (n < 0) throw Error(Errc::BadInput, "factorial of negative argument");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline Rational rational_of(long long num, long long den = 1) {
  if (den == 0) throw Error(Errc::BadInput, "zero denominator");
  Rational q(static_cast<long>(num), static_cast<long>(den));
  q.canonicalize();
  return q;
}

// Accepts "p" or "p/q"; q must be nonzero.
Rational parse_rational(const std::string& s);

// "p/q" in lowest terms, "/q" omitted when the denominator is 1.
std::string rational_to_string(const Rational& q);

}  // namespace gkz
