#pragma once

#include <gmpxx.h>

#include <cstdio>
#include <string>

#include "errors.hpp"

namespace derange {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational frac(const Integer& num, const Integer& den) {
  if (den == 0) throw UsageError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational frac(long num, long den) { return frac(Integer(num), Integer(den)); }

inline Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Integer ipow(long base, unsigned long e) { return ipow(Integer(base), e); }

inline Rational rpow(const Rational& base, long e) {
  Rational r = 1;
  Rational b = e >= 0 ? base : Rational(1) / base;
  unsigned long k = e >= 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// mpq_get_d truncates; go through a 256-bit float so the 12-digit rendering is right.
inline double to_double(const Rational& r) {
  mpf_class f(0, 256);
  f = r;
  return f.get_d();
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string float_string(double x, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

}  // namespace derange
