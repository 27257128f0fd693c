#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "../group.hpp"
#include "matrix.hpp"

namespace derange::oracle {

inline constexpr long kOrderGuard = 10'000'000;
inline constexpr long kSubspaceGuard = 1'000'000;

enum class FormKind { None, Symplectic, Hermitian, Quadratic };

inline std::string to_string(FormKind k) {
  switch (k) {
    case FormKind::None: return "none";
    case FormKind::Symplectic: return "symplectic";
    case FormKind::Hermitian: return "hermitian";
    case FormKind::Quadratic: return "quadratic";
  }
  return "?";
}

// Quadratic forms are Q(x) = sum_{i<=j} coef(i,j) x_i x_j; gram holds the
// bilinear, hermitian or polar form.
struct FormSpec {
  FormKind kind = FormKind::None;
  int dim = 0;
  int sign = 0;  // +1/-1 for even-dimensional quadratic forms
  Mat gram;
  Mat coef;
};

// All vectors of F^dim, index = sum_i c_i q^i.
class VectorSpace {
 public:
  VectorSpace(const Field& F, int dim) : F_(&F), dim_(dim) {
    size_ = 1;
    for (int i = 0; i < dim; ++i) size_ *= F.q();
    comps_.resize(static_cast<std::size_t>(size_) * dim);
    for (long v = 0; v < size_; ++v) {
      long c = v;
      for (int i = 0; i < dim; ++i) {
        comps_[v * dim + i] = static_cast<Elt>(c % F.q());
        c /= F.q();
      }
    }
  }
  const Field& field() const { return *F_; }
  int dim() const { return dim_; }
  long size() const { return size_; }
  Elt comp(long v, int i) const { return comps_[v * dim_ + i]; }
  long encode(const Elt* c) const {
    long v = 0;
    for (int i = dim_ - 1; i >= 0; --i) v = v * F_->q() + c[i];
    return v;
  }
  long add(long v, long w) const {
    Elt c[kMaxDim];
    for (int i = 0; i < dim_; ++i) c[i] = F_->add(comp(v, i), comp(w, i));
    return encode(c);
  }
  long scale(long v, Elt a) const {
    Elt c[kMaxDim];
    for (int i = 0; i < dim_; ++i) c[i] = F_->mul(a, comp(v, i));
    return encode(c);
  }
  // m * v
  long apply(const Mat& m, long v) const {
    Elt c[kMaxDim];
    for (int i = 0; i < dim_; ++i) {
      Elt s = 0;
      for (int j = 0; j < dim_; ++j) s = F_->add(s, F_->mul(m(i, j), comp(v, j)));
      c[i] = s;
    }
    return encode(c);
  }
  long basis(int i) const {
    long v = 1;
    for (int j = 0; j < i; ++j) v *= F_->q();
    return v;
  }

 private:
  const Field* F_;
  int dim_;
  long size_ = 1;
  std::vector<Elt> comps_;
};

// Form evaluation helpers; tables are precomputed for speed.
class FormTables {
 public:
  FormTables(const VectorSpace& V, const FormSpec& form) : V_(&V), form_(form) {
    if (form.kind == FormKind::None) return;
    const long n = V.size();
    pair_.resize(static_cast<std::size_t>(n) * n);
    for (long v = 0; v < n; ++v)
      for (long w = 0; w < n; ++w) pair_[v * n + w] = eval_pair(v, w);
    if (form.kind == FormKind::Quadratic) {
      quad_.resize(n);
      for (long v = 0; v < n; ++v) quad_[v] = eval_quad(v);
    }
  }
  const FormSpec& form() const { return form_; }
  Elt pair(long v, long w) const { return pair_[v * V_->size() + w]; }
  Elt quad(long v) const { return quad_[v]; }
  bool singular(long v) const {
    if (form_.kind == FormKind::Quadratic) return quad(v) == 0;
    return pair(v, v) == 0;
  }

 private:
  Elt eval_pair(long v, long w) const {
    const Field& F = V_->field();
    Elt s = 0;
    for (int i = 0; i < V_->dim(); ++i)
      for (int j = 0; j < V_->dim(); ++j) {
        Elt g = form_.gram(i, j);
        if (!g) continue;
        Elt y = V_->comp(w, j);
        if (form_.kind == FormKind::Hermitian) y = F.conj(y);
        s = F.add(s, F.mul(F.mul(V_->comp(v, i), g), y));
      }
    return s;
  }
  Elt eval_quad(long v) const {
    const Field& F = V_->field();
    Elt s = 0;
    for (int i = 0; i < V_->dim(); ++i)
      for (int j = i; j < V_->dim(); ++j)
        if (form_.coef(i, j)) s = F.add(s, F.mul(form_.coef(i, j), F.mul(V_->comp(v, i), V_->comp(v, j))));
    return s;
  }
  const VectorSpace* V_;
  FormSpec form_;
  std::vector<Elt> pair_;
  std::vector<Elt> quad_;
};

// a with t^2 + t + a irreducible over F
inline Elt anisotropic_constant(const Field& F) {
  for (int a = 0; a < F.q(); ++a) {
    bool root = false;
    for (int t = 0; t < F.q() && !root; ++t) root = F.add(F.add(F.mul(t, t), t), a) == 0;
    if (!root) return static_cast<Elt>(a);
  }
  throw UsageError("no anisotropic binary quadratic form found");
}

inline FormSpec symplectic_form(const Field& F, int dim) {
  require(dim % 2 == 0, "symplectic forms need even dimension");
  FormSpec f;
  f.kind = FormKind::Symplectic;
  f.dim = dim;
  f.gram.n = dim;
  for (int i = 0; i < dim; i += 2) {
    f.gram(i, i + 1) = 1;
    f.gram(i + 1, i) = F.neg(1);
  }
  return f;
}

inline FormSpec hermitian_form(int dim) {
  FormSpec f;
  f.kind = FormKind::Hermitian;
  f.dim = dim;
  f.gram = Mat::identity(dim);
  return f;
}

// Hyperbolic pairs, then x^2 + xy + a y^2 (minus type) or x^2 (odd dimension).
inline FormSpec quadratic_form(const Field& F, int dim, int sign) {
  FormSpec f;
  f.kind = FormKind::Quadratic;
  f.dim = dim;
  f.sign = dim % 2 ? 0 : sign;
  f.coef.n = dim;
  const int pairs = dim % 2 ? dim / 2 : (sign > 0 ? dim / 2 : dim / 2 - 1);
  for (int i = 0; i < pairs; ++i) f.coef(2 * i, 2 * i + 1) = 1;
  if (dim % 2) {
    f.coef(dim - 1, dim - 1) = 1;
  } else if (sign < 0) {
    f.coef(dim - 2, dim - 2) = 1;
    f.coef(dim - 2, dim - 1) = 1;
    f.coef(dim - 1, dim - 1) = anisotropic_constant(F);
  }
  f.gram.n = dim;
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      Elt c = f.coef(i, j);
      if (!c) continue;
      if (i == j) {
        f.gram(i, i) = F.add(f.gram(i, i), F.add(c, c));
      } else {
        f.gram(i, j) = F.add(f.gram(i, j), c);
        f.gram(j, i) = F.add(f.gram(j, i), c);
      }
    }
  return f;
}

struct OracleGroup {
  GroupSpec spec;
  const Field* field = nullptr;
  FormSpec form;
  std::vector<Mat> elements;
  int dim() const { return spec.dimension(); }
};

inline long field_order_for(const GroupSpec& g) { return is_unitary(g.family) ? g.q * g.q : g.q; }

inline FormSpec form_for(const GroupSpec& g, const Field& F) {
  const int dim = g.dimension();
  switch (g.family) {
    case Family::GL:
    case Family::SL: {
      FormSpec f;
      f.dim = dim;
      return f;
    }
    case Family::U:
    case Family::SU: return hermitian_form(dim);
    case Family::Sp: return symplectic_form(F, dim);
    case Family::SOOdd: return quadratic_form(F, dim, 0);
    default: return quadratic_form(F, dim, orthogonal_sign(g.family));
  }
}

namespace detail {

struct Search {
  const VectorSpace* V;
  const FormTables* T;
  const FormSpec* form;
  std::vector<long> cols;
  std::vector<char> span;  // membership of span(cols)
  std::vector<long> span_list;
  std::vector<Mat>* out;
  long guard;

  bool compatible(long v, int j) const {
    if (form->kind == FormKind::None) return true;
    const long ej = V->basis(j);
    if (form->kind == FormKind::Quadratic && T->quad(v) != T->quad(ej)) return false;
    if (T->pair(v, v) != T->pair(ej, ej)) return false;
    for (int i = 0; i < j; ++i) {
      const long ei = V->basis(i);
      if (T->pair(cols[i], v) != T->pair(ei, ej)) return false;
      if (T->pair(v, cols[i]) != T->pair(ej, ei)) return false;
    }
    return true;
  }

  void run(int j) {
    const int dim = V->dim();
    if (j == dim) {
      Mat m;
      m.n = dim;
      for (int c = 0; c < dim; ++c)
        for (int r = 0; r < dim; ++r) m(r, c) = V->comp(cols[c], r);
      out->push_back(m);
      if (static_cast<long>(out->size()) > guard) throw ResourceError("group enumeration exceeded the order guard");
      return;
    }
    const Field& F = V->field();
    for (long v = 1; v < V->size(); ++v) {
      if (span[v] || !compatible(v, j)) continue;
      // extend span by multiples of v
      const std::size_t before = span_list.size();
      for (std::size_t s = 0; s < before; ++s)
        for (int a = 1; a < F.q(); ++a) {
          long w = V->add(span_list[s], V->scale(v, static_cast<Elt>(a)));
          span[w] = 1;
          span_list.push_back(w);
        }
      cols.push_back(v);
      run(j + 1);
      cols.pop_back();
      for (std::size_t s = before; s < span_list.size(); ++s) span[span_list[s]] = 0;
      span_list.resize(before);
    }
  }
};

}  // namespace detail

// All matrices whose columns are images of the standard basis preserving the form.
inline std::vector<Mat> enumerate_isometries(const VectorSpace& V, const FormSpec& form, long guard = kOrderGuard) {
  FormTables T(V, form);
  std::vector<Mat> out;
  detail::Search s{&V, &T, &form, {}, std::vector<char>(V.size(), 0), {0}, &out, guard};
  s.span[0] = 1;
  s.run(0);
  return out;
}

inline OracleGroup enumerate_group(const GroupSpec& g) {
  g.validate();
  const bool even_q = g.q % 2 == 0;
  if ((g.family == Family::OmegaPlus || g.family == Family::OmegaMinus) && !even_q)
    throw UsageError("unsupported family: Omega in odd characteristic needs the spinor norm, which the oracle omits");
  require(g.dimension() >= 1 && g.dimension() <= kMaxDim, "oracle dimension must lie in 1..6");
  if (group_order(g) > kOrderGuard)
    throw ResourceError("group order " + group_order(g).get_str() + " exceeds the oracle guard 10^7");
  OracleGroup G;
  G.spec = g;
  G.field = &get_field(field_order_for(g));
  const Field& F = *G.field;
  G.form = form_for(g, F);
  VectorSpace V(F, g.dimension());
  auto all = enumerate_isometries(V, G.form);
  const bool det_one = g.family == Family::SL || g.family == Family::SU || g.family == Family::SOOdd ||
                       g.family == Family::SOPlus || g.family == Family::SOMinus;
  const bool dickson = g.family == Family::OmegaPlus || g.family == Family::OmegaMinus;
  for (auto& m : all) {
    if (det_one && det(F, m) != 1) continue;
    if (dickson) {
      const int fix = kernel_dim(F, linear(F, 1), m, 1);
      if ((g.dimension() - fix) % 2) continue;
    }
    G.elements.push_back(m);
  }
  if (Integer(static_cast<long>(G.elements.size())) != group_order(g))
    throw std::logic_error("oracle enumeration of " + g.str() + " found " + std::to_string(G.elements.size()) +
                           " elements, expected " + group_order(g).get_str());
  return G;
}

enum class SubspaceClass { Any, Nondegenerate, TotallySingular };

inline std::string to_string(SubspaceClass k) {
  switch (k) {
    case SubspaceClass::Any: return "any";
    case SubspaceClass::Nondegenerate: return "nondegenerate";
    case SubspaceClass::TotallySingular: return "totally-singular";
  }
  return "?";
}

struct SubspaceKind {
  SubspaceClass kind = SubspaceClass::Any;
  int k = 1;
  int type = 0;  // +1/-1 restricts even-dimensional nondegenerate orthogonal subspaces
  std::string str() const {
    std::string s = to_string(kind) + "-" + std::to_string(k);
    if (type) s += type > 0 ? "+" : "-";
    return s;
  }
};

struct Subspace {
  std::vector<long> basis;
  std::vector<long> members;  // sorted, includes 0
};

inline Integer gaussian_binomial(long q, int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= ipow(q, static_cast<unsigned long>(n - i)) - 1;
    den *= ipow(q, static_cast<unsigned long>(i + 1)) - 1;
  }
  return num / den;
}

namespace detail {

inline std::vector<long> span_of(const VectorSpace& V, const std::vector<long>& basis) {
  std::vector<long> span{0};
  for (long b : basis) {
    const std::size_t before = span.size();
    for (std::size_t s = 0; s < before; ++s)
      for (int a = 1; a < V.field().q(); ++a) span.push_back(V.add(span[s], V.scale(b, static_cast<Elt>(a))));
  }
  std::sort(span.begin(), span.end());
  return span;
}

// Rank of the k x k Gram matrix of the basis.
inline int gram_rank(const FormTables& T, const Field& F, const std::vector<long>& basis) {
  std::vector<std::vector<Elt>> rows(basis.size(), std::vector<Elt>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) rows[i][j] = T.pair(basis[i], basis[j]);
  return row_reduce(F, rows);
}

inline bool accept(const VectorSpace& V, const FormTables& T, const Subspace& S, const SubspaceKind& kind) {
  const FormSpec& form = T.form();
  const Field& F = V.field();
  const int k = static_cast<int>(S.basis.size());
  if (kind.kind == SubspaceClass::Any) return true;
  if (kind.kind == SubspaceClass::TotallySingular) {
    for (std::size_t i = 0; i < S.basis.size(); ++i) {
      if (form.kind == FormKind::Quadratic && T.quad(S.basis[i])) return false;
      for (std::size_t j = 0; j < S.basis.size(); ++j)
        if (T.pair(S.basis[i], S.basis[j])) return false;
    }
    return true;
  }
  const int r = gram_rank(T, F, S.basis);
  bool nondeg = r == k;
  if (form.kind == FormKind::Quadratic && F.p() == 2 && k % 2 == 1) {
    // polar radical is a line on which Q must not vanish
    nondeg = false;
    if (r == k - 1)
      for (long v : S.members) {
        if (!v) continue;
        bool radical = true;
        for (long b : S.basis)
          if (T.pair(v, b)) {
            radical = false;
            break;
          }
        if (radical) {
          nondeg = T.quad(v) != 0;
          break;
        }
      }
  }
  if (!nondeg) return false;
  if (kind.type && form.kind == FormKind::Quadratic && k % 2 == 0) {
    const int m = k / 2;
    long singular = 0;
    for (long v : S.members)
      if (v && T.quad(v) == 0) ++singular;
    const long qm = static_cast<long>(ipow(F.q(), m).get_si()), qm1 = static_cast<long>(ipow(F.q(), m - 1).get_si());
    const long expect = (qm - kind.type) * (qm1 + kind.type);
    return singular == expect;
  }
  return true;
}

}  // namespace detail

// Each k-subspace once, from reduced echelon bases, filtered by kind.
inline std::vector<Subspace> enumerate_subspaces(const VectorSpace& V, const FormSpec& form, const SubspaceKind& kind) {
  const int n = V.dim(), k = kind.k;
  require(k >= 0 && k <= n, "subspace dimension must lie in 0..n");
  const int q = V.field().q();
  if (gaussian_binomial(q, n, k) > kSubspaceGuard) throw ResourceError("subspace enumeration exceeds the guard 10^6");
  if (kind.kind != SubspaceClass::Any)
    require(form.kind != FormKind::None, "nondegenerate and totally singular subspaces need a form");
  if (kind.type) require(form.kind == FormKind::Quadratic && k % 2 == 0, "subspace type needs an even-dimensional orthogonal subspace");
  FormTables T(V, form);
  std::vector<Subspace> out;
  std::vector<int> pivots;
  // choose pivot columns, then fill free entries
  std::function<void(int)> choose = [&](int start) {
    if (static_cast<int>(pivots.size()) == k) {
      std::vector<std::pair<int, int>> free;
      for (int r = 0; r < k; ++r)
        for (int c = pivots[r] + 1; c < n; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
      long total = 1;
      for (std::size_t i = 0; i < free.size(); ++i) total *= q;
      for (long code = 0; code < total; ++code) {
        std::vector<std::array<Elt, kMaxDim>> rows(k);
        for (int r = 0; r < k; ++r) {
          rows[r].fill(0);
          rows[r][pivots[r]] = 1;
        }
        long c = code;
        for (auto [r, col] : free) {
          rows[r][col] = static_cast<Elt>(c % q);
          c /= q;
        }
        Subspace S;
        for (int r = 0; r < k; ++r) S.basis.push_back(V.encode(rows[r].data()));
        S.members = detail::span_of(V, S.basis);
        if (detail::accept(V, T, S, kind)) out.push_back(std::move(S));
      }
      return;
    }
    for (int c = start; c < n; ++c) {
      pivots.push_back(c);
      choose(c + 1);
      pivots.pop_back();
    }
  };
  choose(0);
  return out;
}

inline bool fixes(const VectorSpace& V, const Mat& g, const Subspace& S) {
  for (long b : S.basis)
    if (!std::binary_search(S.members.begin(), S.members.end(), V.apply(g, b))) return false;
  return true;
}

// Groups small enough to enumerate; the exact-equality suites run over these.
inline std::vector<GroupSpec> feasible_set() {
  std::vector<GroupSpec> out;
  auto add = [&](Family f, long q, int n) { out.push_back({f, q, n}); };
  for (Family f : {Family::GL, Family::SL}) {
    for (int n = 1; n <= 4; ++n) add(f, 2, n);
    for (int n = 1; n <= 3; ++n) add(f, 3, n);
    for (long q : {4L, 5L})
      for (int n = 1; n <= 2; ++n) add(f, q, n);
  }
  for (Family f : {Family::U, Family::SU}) {
    for (int n = 1; n <= 3; ++n) add(f, 2, n);
    for (int n = 1; n <= 2; ++n) add(f, 3, n);
  }
  for (long q : {2L, 3L, 4L, 5L}) add(Family::Sp, q, 1);
  add(Family::Sp, 2, 2);
  add(Family::Sp, 3, 2);
  for (long q : {2L, 3L, 4L, 5L}) {
    add(Family::OPlus, q, 1);
    add(Family::OMinus, q, 1);
    if (q % 2 == 0) {
      add(Family::OmegaPlus, q, 1);
      add(Family::OmegaMinus, q, 1);
    } else {
      add(Family::SOPlus, q, 1);
      add(Family::SOMinus, q, 1);
    }
  }
  for (Family f : {Family::OPlus, Family::OMinus, Family::OmegaPlus, Family::OmegaMinus}) add(f, 2, 2);
  add(Family::SOOdd, 3, 1);
  for (Family f : {Family::OPlus, Family::OMinus, Family::SOPlus, Family::SOMinus}) add(f, 3, 2);
  return out;
}

}  // namespace derange::oracle
