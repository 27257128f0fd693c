#pragma once

#include <string>
#include <vector>

#include "rational.hpp"

namespace derange {

inline int moebius(long n) {
  require(n >= 1, "moebius: n must be positive");
  int r = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    r = -r;
  }
  if (n > 1) r = -r;
  return r;
}

inline std::vector<long> divisors(long n) {
  std::vector<long> d;
  for (long r = 1; r <= n; ++r)
    if (n % r == 0) d.push_back(r);
  return d;
}

// q = p^e, factored once.  f = 2 in odd characteristic, 1 in even.
struct FieldSize {
  long q = 0;
  long p = 0;
  int e = 0;
  int f = 0;
  bool odd() const { return f == 2; }
};

inline FieldSize field_size(long q) {
  if (q < 2) throw UsageError("q = " + std::to_string(q) + " is not a prime power");
  long p = 2;
  while (q % p) ++p;
  long m = q;
  int e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (m != 1) throw UsageError("q = " + std::to_string(q) + " is not a prime power");
  return {q, p, e, p == 2 ? 1 : 2};
}

enum class PolyCountKind { N, NTilde, MTilde, NStar, MStar };

inline std::string to_string(PolyCountKind k) {
  switch (k) {
    case PolyCountKind::N: return "N";
    case PolyCountKind::NTilde: return "Ntilde";
    case PolyCountKind::MTilde: return "Mtilde";
    case PolyCountKind::NStar: return "Nstar";
    case PolyCountKind::MStar: return "Mstar";
  }
  return "?";
}

namespace detail {

inline Integer count_n(long q, long d) {
  if (d == 1) return Integer(q - 1);
  Integer s = 0;
  for (long r : divisors(d)) s += moebius(r) * ipow(q, static_cast<unsigned long>(d / r));
  return s / d;
}

}  // namespace detail

inline Integer count(PolyCountKind kind, const FieldSize& F, long d) {
  require(d >= 1, "polynomial degree must be positive");
  const long q = F.q;
  switch (kind) {
    case PolyCountKind::N:
      return detail::count_n(q, d);
    case PolyCountKind::NTilde: {
      if (d % 2 == 0) return 0;
      Integer s = 0;
      for (long r : divisors(d)) s += moebius(r) * (ipow(q, static_cast<unsigned long>(d / r)) + 1);
      return s / d;
    }
    case PolyCountKind::MTilde: {
      if (d == 1) return Integer((q * q - q - 2) / 2);
      Integer s = 0;
      for (long r : divisors(d)) {
        Integer t = ipow(q, static_cast<unsigned long>(2 * d / r));
        if (d % 2) t -= ipow(q, static_cast<unsigned long>(d / r));
        s += moebius(r) * t;
      }
      return s / (2 * d);
    }
    case PolyCountKind::NStar: {
      if (d == 1) return F.f;
      if (d % 2) return 0;
      Integer s = 0;
      for (long r : divisors(d))
        if (r % 2) s += moebius(r) * (ipow(q, static_cast<unsigned long>(d / (2 * r))) + 1 - F.f);
      return s / d;
    }
    case PolyCountKind::MStar: {
      if (d == 1) return Integer((q - F.f - 1) / 2);
      if (d % 2) return detail::count_n(q, d) / 2;
      return (detail::count_n(q, d) - count(PolyCountKind::NStar, F, d)) / 2;
    }
  }
  throw UsageError("unknown polynomial count kind");
}

inline Integer count(PolyCountKind kind, long q, long d) { return count(kind, field_size(q), d); }

}  // namespace derange
