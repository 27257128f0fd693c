#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"

namespace derange::oracle {

// Coefficients low to high, no trailing zeros; the zero polynomial is empty.
using Poly = std::vector<Elt>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

inline Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(r);
  return r;
}

inline Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

inline Poly poly_scale(const Field& F, const Poly& a, Elt c) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  trim(r);
  return r;
}

// quotient and remainder; b nonzero
inline std::pair<Poly, Poly> poly_divmod(const Field& F, Poly a, const Poly& b) {
  require(!b.empty(), "polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  Poly quo(a.size() - b.size() + 1, 0);
  const Elt lead_inv = F.inv(b.back());
  for (int k = deg(a); k >= deg(b); --k) {
    Elt c = F.mul(a[k], lead_inv);
    if (!c) continue;
    quo[k - deg(b)] = c;
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::size_t idx = k - deg(b) + i;
      a[idx] = F.sub(a[idx], F.mul(c, b[i]));
    }
  }
  trim(a);
  trim(quo);
  return {quo, a};
}

inline Poly poly_monic(const Field& F, const Poly& a) {
  if (a.empty()) return a;
  return poly_scale(F, a, F.inv(a.back()));
}

inline Poly poly_gcd(const Field& F, Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = poly_divmod(F, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(F, a);
}

inline Poly poly_derivative(const Field& F, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) {
    Elt c = 0;
    for (std::size_t k = 0; k < i % static_cast<std::size_t>(F.p()); ++k) c = F.add(c, a[i]);
    r[i - 1] = c;
  }
  trim(r);
  return r;
}

inline Poly linear(const Field& F, Elt root) { return {F.neg(root), 1}; }  // z - root

inline std::string poly_str(const Poly& f) {
  if (f.empty()) return "0";
  std::string s;
  for (int i = deg(f); i >= 0; --i) {
    if (!f[i]) continue;
    if (!s.empty()) s += "+";
    if (f[i] != 1 || i == 0) s += std::to_string(f[i]);
    if (i >= 1) s += "z";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

// Monic polynomials of degree d, constant term ranging over all field elements.
inline std::vector<Poly> monic_polynomials(const Field& F, int d) {
  const int q = F.q();
  long total = 1;
  for (int i = 0; i < d; ++i) total *= q;
  std::vector<Poly> out;
  out.reserve(total);
  for (long code = 0; code < total; ++code) {
    Poly f(d + 1);
    long c = code;
    for (int i = 0; i < d; ++i) {
      f[i] = static_cast<Elt>(c % q);
      c /= q;
    }
    f[d] = 1;
    out.push_back(std::move(f));
  }
  return out;
}

// Monic irreducibles of each degree up to maxdeg, by sieving products.
inline const std::vector<std::vector<Poly>>& irreducibles(const Field& F, int maxdeg) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<std::vector<Poly>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(F.q(), maxdeg);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::vector<Poly>> irr(static_cast<std::size_t>(maxdeg) + 1);
  for (int d = 1; d <= maxdeg; ++d) {
    for (auto& f : monic_polynomials(F, d)) {
      bool reducible = false;
      for (int e = 1; 2 * e <= d && !reducible; ++e)
        for (auto& g : irr[e])
          if (poly_divmod(F, f, g).second.empty()) {
            reducible = true;
            break;
          }
      if (!reducible) irr[d].push_back(f);
    }
  }
  return cache.emplace(key, std::move(irr)).first->second;
}

using Factorization = std::vector<std::pair<Poly, int>>;

// Trial division against irreducibles of degree <= deg/2.
inline Factorization factor(const Field& F, Poly f) {
  require(!f.empty() && f.back() == 1, "factor expects a monic polynomial");
  Factorization out;
  const int n = deg(f);
  const auto& irr = irreducibles(F, std::max(1, n / 2));
  for (int d = 1; 2 * d <= deg(f); ++d) {
    for (auto& g : irr[d]) {
      int m = 0;
      while (deg(f) >= d) {
        auto [quo, rem] = poly_divmod(F, f, g);
        if (!rem.empty()) break;
        f = std::move(quo);
        ++m;
      }
      if (m) out.emplace_back(g, m);
    }
  }
  if (deg(f) >= 1) {
    bool merged = false;
    for (auto& [g, m] : out)
      if (g == f) {
        ++m;
        merged = true;
      }
    if (!merged) out.emplace_back(f, 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Poly expand(const Field& F, const Factorization& fac) {
  Poly r{1};
  for (auto& [g, m] : fac)
    for (int i = 0; i < m; ++i) r = poly_mul(F, r, g);
  return r;
}

}  // namespace derange::oracle
