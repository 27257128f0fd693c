#pragma once

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "polycount.hpp"
#include "rational.hpp"

namespace derange {

inline constexpr int kPartitionGuard = 60;

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      require(parts_[i] > 0, "partition parts must be positive");
      require(i == 0 || parts_[i] <= parts_[i - 1], "partition parts must be weakly decreasing");
      size_ += parts_[i];
    }
  }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  // m_i
  int multiplicity(int i) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), i)); }
  // lambda'_i = number of parts >= i
  int conjugate_part(int i) const {
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [i](int p) { return p >= i; }));
  }
  long sum_conjugate_squares() const {
    long s = 0;
    for (int i = 1; i <= largest(); ++i) {
      long c = conjugate_part(i);
      s += c * c;
    }
    return s;
  }
  // (i, m_i) for each distinct part, increasing i
  std::vector<std::pair<int, int>> multiplicities() const {
    std::vector<std::pair<int, int>> out;
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
      if (!out.empty() && out.back().first == *it)
        ++out.back().second;
      else
        out.emplace_back(*it, 1);
    }
    return out;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
  }

  auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

namespace detail {

template <class F>
void partitions_rec(int rem, int maxpart, std::vector<int>& cur, F& f) {
  if (rem == 0) {
    f(cur);
    return;
  }
  for (int p = std::min(rem, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(rem - p, p, cur, f);
    cur.pop_back();
  }
}

}  // namespace detail

// Visits the parts vectors of all partitions of n in reverse lexicographic order.
template <class F>
void for_each_partition(int n, F&& f) {
  require(n >= 0, "partition size must be non-negative");
  std::vector<int> cur;
  detail::partitions_rec(n, n, cur, f);
}

inline std::vector<Partition> enumerate_partitions(int n) {
  require(n >= 0, "partition size must be non-negative");
  if (n > kPartitionGuard)
    throw ResourceError("partition enumeration guard: n = " + std::to_string(n) + " > " +
                        std::to_string(kPartitionGuard));
  std::vector<Partition> out;
  for_each_partition(n, [&](const std::vector<int>& p) { out.emplace_back(p); });
  return out;
}

inline Integer partition_count(int n) {
  // Euler's recurrence through generalized pentagonal numbers.
  std::vector<Integer> p(static_cast<std::size_t>(n) + 1, Integer(0));
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 1;; ++k) {
      int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      int sgn = (k % 2) ? 1 : -1;
      p[m] += sgn * p[m - g1];
      if (g2 <= m) p[m] += sgn * p[m - g2];
    }
  }
  return p[n];
}

// (1/Q)_j = (1 - 1/Q)(1 - 1/Q^2)...(1 - 1/Q^j); Q may be negative (unitary twist).
inline Rational q_pochhammer(const Rational& Q, int j) {
  require(j >= 0, "q_pochhammer index must be non-negative");
  Rational r = 1, Qi = 1;
  for (int i = 1; i <= j; ++i) {
    Qi *= Q;
    r *= 1 - 1 / Qi;
  }
  return r;
}

inline Rational q_pochhammer(long q, int j) { return q_pochhammer(Rational(q), j); }

// 1 / (Q^{sum lambda'_i^2} prod_i (1/Q)_{m_i})
inline Rational stong_weight(const Partition& lam, const Rational& Q) {
  Rational d = rpow(Q, lam.sum_conjugate_squares());
  for (auto [i, m] : lam.multiplicities()) d *= q_pochhammer(Q, m);
  return 1 / d;
}

struct GLClassEntry {
  int degree = 1;
  Partition lambda;
  auto operator<=>(const GLClassEntry&) const = default;
};

// One entry per irreducible polynomial with nonempty partition; polynomials are
// identified only by degree.
struct GLClassDatum {
  std::vector<GLClassEntry> entries;
  int n() const {
    int s = 0;
    for (auto& e : entries) s += e.degree * e.lambda.size();
    return s;
  }
  std::string str() const {
    std::string s;
    for (auto& e : entries) s += (s.empty() ? "" : " ") + std::string("d") + std::to_string(e.degree) + e.lambda.str();
    return s.empty() ? "-" : s;
  }
};

inline void validate(const GLClassDatum& datum, const FieldSize& F) {
  std::map<int, long> per_degree;
  for (auto& e : datum.entries) {
    require(e.degree >= 1, "class datum degree must be positive");
    require(!e.lambda.empty(), "class datum partitions must be nonempty");
    ++per_degree[e.degree];
  }
  for (auto [d, c] : per_degree)
    if (Integer(c) > count(PolyCountKind::N, F, d))
      throw UsageError("class datum uses " + std::to_string(c) + " polynomials of degree " + std::to_string(d) +
                       " but only " + count(PolyCountKind::N, F, d).get_str() + " exist");
}

inline Integer gl_order(int n, long q) {
  Integer r = 1;
  Integer qn = ipow(q, static_cast<unsigned long>(n));
  for (int i = 0; i < n; ++i) r *= qn - ipow(q, static_cast<unsigned long>(i));
  return r;
}

inline Integer gl_centralizer_size(long q, const GLClassDatum& datum) {
  const FieldSize F = field_size(q);
  validate(datum, F);
  Integer c = 1;
  for (auto& e : datum.entries) {
    const Integer Q = ipow(q, static_cast<unsigned long>(e.degree));
    long exponent = e.lambda.sum_conjugate_squares();
    for (auto [i, m] : e.lambda.multiplicities())
      for (int j = 1; j <= m; ++j) {
        c *= ipow(Q, static_cast<unsigned long>(j)) - 1;
        exponent -= j;
      }
    if (exponent < 0) throw UsageError("internal: negative centralizer exponent");
    c *= ipow(Q, static_cast<unsigned long>(exponent));
  }
  return c;
}

inline std::vector<int> subset_sums(const Partition& p) {
  std::vector<char> reach(static_cast<std::size_t>(p.size()) + 1, 0);
  reach[0] = 1;
  for (int part : p.parts())
    for (int s = p.size(); s >= part; --s)
      if (reach[s - part]) reach[s] = 1;
  std::vector<int> out;
  for (int s = 0; s <= p.size(); ++s)
    if (reach[s]) out.push_back(s);
  return out;
}

// A GL(n,q) class type: datum plus the number of ways to assign distinct
// polynomials of the right degrees.  weight = assignments / centralizer.
struct GLClassType {
  GLClassDatum datum;
  Integer assignments;
  Integer centralizer;
  Rational weight() const { return frac(assignments, centralizer); }
};

inline std::vector<GLClassType> gl_class_types(int n, long q) {
  require(n >= 0, "n must be non-negative");
  if (n > 12) throw ResourceError("GL class-type enumeration guard: n = " + std::to_string(n) + " > 12");
  const FieldSize F = field_size(q);
  std::vector<Integer> Nd(static_cast<std::size_t>(n) + 1);
  for (int d = 1; d <= n; ++d) Nd[d] = count(PolyCountKind::N, F, d);
  std::vector<std::vector<Partition>> by_size(static_cast<std::size_t>(n) + 1);
  for (int s = 1; s <= n; ++s) by_size[s] = enumerate_partitions(s);

  std::vector<GLClassType> out;
  GLClassDatum cur;

  // Degree d, candidate partitions flattened in size order.
  std::function<void(int, int, Integer)> by_degree;
  std::function<void(int, int, std::size_t, const std::vector<const Partition*>&, long, Integer)> pick;

  by_degree = [&](int d, int rem, Integer ways) {
    if (rem == 0) {
      GLClassType t{cur, ways, gl_centralizer_size(q, cur)};
      out.push_back(std::move(t));
      return;
    }
    if (d > rem) return;
    std::vector<const Partition*> cands;
    for (int s = 1; s * d <= rem; ++s)
      for (auto& p : by_size[s]) cands.push_back(&p);
    pick(d, rem, 0, cands, 0, ways);
  };

  // used = polynomials of degree d already assigned
  pick = [&](int d, int rem, std::size_t idx, const std::vector<const Partition*>& cands, long used, Integer ways) {
    if (idx == cands.size()) {
      by_degree(d + 1, rem, ways);
      return;
    }
    const Partition& lam = *cands[idx];
    const int cost = d * lam.size();
    pick(d, rem, idx + 1, cands, used, ways);
    Integer w = ways;
    for (int c = 1; c * cost <= rem; ++c) {
      if (Integer(used + c) > Nd[d]) break;
      w *= Nd[d] - (used + c - 1);
      w /= c;  // multiset of identical partitions: divide by c!
      for (int j = 0; j < c; ++j) cur.entries.push_back({d, lam});
      pick(d, rem - c * cost, idx + 1, cands, used + c, w);
      for (int j = 0; j < c; ++j) cur.entries.pop_back();
    }
  };

  by_degree(1, n, Integer(1));
  return out;
}

}  // namespace derange
