#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "../partitions.hpp"
#include "../rational.hpp"
#include "groups.hpp"

namespace derange::oracle {

enum class RsConvention {
  Splitting,  // z+-1 of multiplicity 2 allowed when its eigenspace is 2-dimensional
  Strict      // additionally rejects +-I filling a 2-dimensional space
};

struct ElementProfile {
  Poly charpoly;
  Factorization factors;
  bool rs = false;
  bool rs_strict = false;
  bool srs = false;
  bool srs_gcd = false;  // squarefree by gcd(f, f') = 1
  bool eigenvalue_free = false;
  long D = 0;
};

inline bool is_plus_minus_one(const Field& F, const Poly& phi) {
  return deg(phi) == 1 && (phi[0] == F.neg(1) || phi[0] == 1);
}

inline ElementProfile profile(const OracleGroup& G, const Mat& m) {
  const Field& F = *G.field;
  const bool orth = is_orthogonal(G.spec.family);
  ElementProfile p;
  p.charpoly = char_poly(F, m);
  p.factors = factor(F, p.charpoly);
  p.srs = true;
  p.rs = true;
  p.eigenvalue_free = true;
  for (auto& [phi, mult] : p.factors) {
    const bool pm = orth && is_plus_minus_one(F, phi);
    if (deg(phi) == 1) p.eigenvalue_free = false;
    if (mult >= 2) p.srs = false;
    if (mult >= 2 || pm) p.D += static_cast<long>(deg(phi)) * mult;
    if (pm) {
      if (mult > 2 || (mult == 2 && kernel_dim(F, phi, m, 1) != 2)) p.rs = false;
    } else if (mult >= 2) {
      p.rs = false;
    }
  }
  p.rs_strict = p.rs;
  if (orth && p.rs && m.n == 2)
    for (auto& [phi, mult] : p.factors)
      if (mult == 2 && is_plus_minus_one(F, phi)) p.rs_strict = false;
  p.srs_gcd = deg(poly_gcd(F, p.charpoly, poly_derivative(F, p.charpoly))) == 0;
  return p;
}

struct OracleStats {
  Integer order;
  Rational rs, rs_strict, srs, eigenvalue_free, mean_D;
  bool srs_routes_agree = true;
};

inline OracleStats element_stats(const OracleGroup& G) {
  OracleStats s;
  s.order = static_cast<long>(G.elements.size());
  long rs = 0, rs_strict = 0, srs = 0, ef = 0, D = 0;
  for (auto& m : G.elements) {
    auto p = profile(G, m);
    rs += p.rs;
    rs_strict += p.rs_strict;
    srs += p.srs;
    ef += p.eigenvalue_free;
    D += p.D;
    if (p.srs != p.srs_gcd) s.srs_routes_agree = false;
  }
  s.rs = frac(rs, 1) / s.order;
  s.rs_strict = frac(rs_strict, 1) / s.order;
  s.srs = frac(srs, 1) / s.order;
  s.eigenvalue_free = frac(ef, 1) / s.order;
  s.mean_D = frac(D, 1) / s.order;
  return s;
}

struct SubspaceCounts {
  long subspaces = 0;
  long derangements = 0;
  long rs_fixing = 0;
  Integer order;
  Rational derangement_proportion() const { return Rational(derangements) / order; }
  Rational rs_and_fixing_proportion() const { return Rational(rs_fixing) / order; }
};

inline SubspaceCounts subspace_counts(const OracleGroup& G, const SubspaceKind& kind) {
  VectorSpace V(*G.field, G.dim());
  auto subs = enumerate_subspaces(V, G.form, kind);
  SubspaceCounts c;
  c.subspaces = static_cast<long>(subs.size());
  c.order = static_cast<long>(G.elements.size());
  for (auto& m : G.elements) {
    bool fixed = false;
    for (auto& S : subs)
      if (fixes(V, m, S)) {
        fixed = true;
        break;
      }
    if (!fixed) ++c.derangements;
    if (fixed && profile(G, m).rs) ++c.rs_fixing;
  }
  return c;
}

inline Rational derangement_proportion(const OracleGroup& G, const SubspaceKind& kind) {
  return subspace_counts(G, kind).derangement_proportion();
}

inline Rational rs_and_fixing_proportion(const OracleGroup& G, const SubspaceKind& kind) {
  return subspace_counts(G, kind).rs_and_fixing_proportion();
}

inline Rational mean_D_bruteforce(const OracleGroup& G) { return element_stats(G).mean_D; }

inline Mat mat_inverse(const Field& F, const Mat& m) {
  const int n = m.n;
  std::vector<std::vector<Elt>> rows(n, std::vector<Elt>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[i][j] = m(i, j);
    rows[i][n + i] = 1;
  }
  require(row_reduce(F, rows) == n, "matrix is singular");
  Mat r;
  r.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = rows[i][n + j];
  return r;
}

struct ConjugacyClasses {
  std::vector<int> class_of;        // per element index
  std::vector<std::size_t> reps;    // element index of each class representative
  std::vector<long> sizes;
};

inline ConjugacyClasses conjugacy_classes(const OracleGroup& G) {
  const Field& F = *G.field;
  const std::size_t N = G.elements.size();
  std::unordered_map<Mat, std::size_t, MatHash> index;
  index.reserve(N * 2);
  for (std::size_t i = 0; i < N; ++i) index.emplace(G.elements[i], i);
  std::vector<Mat> inv(N);
  for (std::size_t i = 0; i < N; ++i) inv[i] = mat_inverse(F, G.elements[i]);
  ConjugacyClasses C;
  C.class_of.assign(N, -1);
  for (std::size_t x = 0; x < N; ++x) {
    if (C.class_of[x] >= 0) continue;
    const int id = static_cast<int>(C.reps.size());
    C.reps.push_back(x);
    long size = 0;
    for (std::size_t g = 0; g < N; ++g) {
      Mat y = mat_mul(F, mat_mul(F, G.elements[g], G.elements[x]), inv[g]);
      auto it = index.find(y);
      if (it == index.end()) throw std::logic_error("conjugate left the enumerated group");
      if (C.class_of[it->second] < 0) {
        C.class_of[it->second] = id;
        ++size;
      }
    }
    C.sizes.push_back(size);
  }
  return C;
}

inline long class_count_rs(const OracleGroup& G) {
  auto C = conjugacy_classes(G);
  long n = 0;
  for (auto r : C.reps) n += profile(G, G.elements[r]).rs;
  return n;
}

// GL class datum of a matrix: per irreducible factor, the partition read off
// from kernel dimensions of phi(m)^j.
struct ExplicitDatum {
  std::vector<std::pair<Poly, Partition>> parts;
  GLClassDatum degree_datum() const {
    GLClassDatum d;
    for (auto& [phi, lam] : parts) d.entries.push_back({deg(phi), lam});
    std::sort(d.entries.begin(), d.entries.end());
    return d;
  }
  std::string key() const {
    std::string s;
    for (auto& [phi, lam] : parts) s += poly_str(phi) + lam.str() + ";";
    return s;
  }
};

inline ExplicitDatum gl_class_datum(const Field& F, const Mat& m) {
  ExplicitDatum d;
  for (auto& [phi, mult] : factor(F, char_poly(F, m))) {
    std::vector<int> conj;
    int prev = 0;
    for (int j = 1; j <= mult; ++j) {
      const int k = kernel_dim(F, phi, m, j);
      if (k == prev) break;
      conj.push_back((k - prev) / deg(phi));
      prev = k;
    }
    std::vector<int> parts;
    for (int i = 1; !conj.empty() && i <= conj.front(); ++i)
      parts.push_back(static_cast<int>(std::count_if(conj.begin(), conj.end(), [i](int c) { return c >= i; })));
    d.parts.emplace_back(phi, Partition(parts));
  }
  return d;
}

struct CentralizerCheck {
  long data = 0;
  long mismatches = 0;
  Rational reciprocal_sum;  // sum over explicit data of 1/centralizer
};

// Element counts per explicit class datum against |GL| / centralizer.
inline CentralizerCheck gl_centralizer_check(const OracleGroup& G) {
  require(G.spec.family == Family::GL, "centralizer check is for GL");
  const Field& F = *G.field;
  std::map<std::string, std::pair<ExplicitDatum, long>> counts;
  for (auto& m : G.elements) {
    auto d = gl_class_datum(F, m);
    auto& slot = counts[d.key()];
    slot.first = d;
    ++slot.second;
  }
  CentralizerCheck c;
  const Integer order = static_cast<long>(G.elements.size());
  for (auto& [key, entry] : counts) {
    ++c.data;
    const Integer cent = gl_centralizer_size(G.spec.q, entry.first.degree_datum());
    c.reciprocal_sum += frac(Integer(1), cent);
    if (Integer(entry.second) * cent != order) ++c.mismatches;
  }
  return c;
}

}  // namespace derange::oracle
