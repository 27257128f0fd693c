#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "../errors.hpp"
#include "../polycount.hpp"

namespace derange::oracle {

using Elt = std::uint8_t;

// F_{p^e}, e <= 3, as F_p[x]/(m).  Element encodes coefficients base p.
class Field {
 public:
  explicit Field(long q) {
    const FieldSize F = field_size(q);
    require(F.e <= 3 && q <= 64, "oracle fields are limited to p^e with e <= 3 and q <= 64");
    q_ = static_cast<int>(q);
    p_ = static_cast<int>(F.p);
    e_ = F.e;
    modulus_ = find_modulus();
    add_.resize(static_cast<std::size_t>(q_) * q_);
    mul_.resize(static_cast<std::size_t>(q_) * q_);
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b) {
        add_[a * q_ + b] = static_cast<Elt>(raw_add(a, b));
        mul_[a * q_ + b] = static_cast<Elt>(raw_mul(a, b));
      }
    neg_.resize(q_);
    inv_.resize(q_, 0);
    for (int a = 0; a < q_; ++a)
      for (int b = 0; b < q_; ++b) {
        if (add(a, b) == 0) neg_[a] = static_cast<Elt>(b);
        if (mul(a, b) == 1) inv_[a] = static_cast<Elt>(b);
      }
  }

  int q() const { return q_; }
  int p() const { return p_; }
  int degree() const { return e_; }

  Elt add(Elt a, Elt b) const { return add_[a * q_ + b]; }
  Elt sub(Elt a, Elt b) const { return add_[a * q_ + neg_[b]]; }
  Elt mul(Elt a, Elt b) const { return mul_[a * q_ + b]; }
  Elt neg(Elt a) const { return neg_[a]; }
  Elt inv(Elt a) const {
    require(a != 0, "inverse of zero in a finite field");
    return inv_[a];
  }
  Elt div(Elt a, Elt b) const { return mul(a, inv(b)); }
  Elt pow(Elt a, long k) const {
    Elt r = 1;
    for (long i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }
  // x -> x^{sqrt q}; defined when e is even.
  Elt conj(Elt a) const {
    require(e_ % 2 == 0, "hermitian conjugation needs a field of square order");
    long r = 1;
    for (int i = 0; i < e_ / 2; ++i) r *= p_;
    return pow(a, r);
  }
  Elt from_int(long v) const {
    long m = ((v % p_) + p_) % p_;
    return static_cast<Elt>(m);
  }
  bool is_square(Elt a) const {
    for (int b = 0; b < q_; ++b)
      if (mul(b, b) == a) return true;
    return false;
  }
  std::vector<Elt> elements() const {
    std::vector<Elt> v(q_);
    for (int i = 0; i < q_; ++i) v[i] = static_cast<Elt>(i);
    return v;
  }

 private:
  std::vector<int> digits(int a) const {
    std::vector<int> d(e_);
    for (int i = 0; i < e_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  }
  int undigits(const std::vector<int>& d) const {
    int a = 0;
    for (int i = e_ - 1; i >= 0; --i) a = a * p_ + d[i];
    return a;
  }
  int raw_add(int a, int b) const {
    auto x = digits(a), y = digits(b);
    for (int i = 0; i < e_; ++i) x[i] = (x[i] + y[i]) % p_;
    return undigits(x);
  }
  int raw_mul(int a, int b) const {
    auto x = digits(a), y = digits(b);
    std::vector<int> prod(2 * e_, 0);
    for (int i = 0; i < e_; ++i)
      for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    // reduce by monic modulus of degree e
    for (int k = 2 * e_ - 1; k >= e_; --k) {
      int c = prod[k];
      if (!c) continue;
      for (int i = 0; i <= e_; ++i) prod[k - e_ + i] = ((prod[k - e_ + i] - c * modulus_[i]) % p_ + p_) % p_;
    }
    prod.resize(e_);
    return undigits(prod);
  }
  // Monic irreducible of degree e over F_p (degree <= 3: no roots suffices).
  std::vector<int> find_modulus() const {
    if (e_ == 1) return {0, 1};
    std::vector<int> m(e_ + 1, 0);
    m[e_] = 1;
    long total = 1;
    for (int i = 0; i < e_; ++i) total *= p_;
    for (long code = 0; code < total; ++code) {
      long c = code;
      for (int i = 0; i < e_; ++i) {
        m[i] = static_cast<int>(c % p_);
        c /= p_;
      }
      bool root = false;
      for (int x = 0; x < p_ && !root; ++x) {
        long v = 0;
        for (int i = e_; i >= 0; --i) v = (v * x + m[i]) % p_;
        root = v == 0;
      }
      if (!root) return m;
    }
    throw UsageError("no irreducible modulus found");
  }

  int q_ = 0, p_ = 0, e_ = 0;
  std::vector<int> modulus_;
  std::vector<Elt> add_, mul_, neg_, inv_;
};

inline const Field& get_field(long q) {
  static std::mutex mu;
  static std::map<long, std::unique_ptr<Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[q];
  if (!slot) slot = std::make_unique<Field>(q);
  return *slot;
}

}  // namespace derange::oracle
