#pragma once

#include <vector>

#include "../group.hpp"
#include "../polycount.hpp"
#include "../series.hpp"

namespace derange {

// prod_{i>=1} (1 - x/Q^i)^{-1}
inline TruncatedSeries atom_plus(const Rational& Q, int order) { return q_dilation_product(geometric(order), Q); }

// prod_{i>=1} (1 + (-1)^i x/Q^i)^{-1}; odd and even i are paired so the
// dilation step is Q^2.
inline TruncatedSeries atom_minus(const Rational& Q, int order) {
  return q_dilation_product(mul(geometric(order, Q), geometric(order, -1)), Q * Q);
}

// x^k coefficient times (-1)^k
inline TruncatedSeries flip(const TruncatedSeries& a) { return scale(a, -1); }

// One class of irreducible polynomials (or conjugate pairs) sharing a degree.
// atom is the cycle-index factor of a single member in x = u^degree.
struct Component {
  int degree = 1;
  Integer count;
  TruncatedSeries atom;
  bool linear = false;  // built from degree-1 polynomials over the natural field
  Rational c1() const { return atom[1]; }
};

inline TruncatedSeries embed(const TruncatedSeries& x_series, int degree, int order) {
  return dilate(with_order(x_series, order), degree);
}

struct FamilyModel {
  int order = 0;
  TruncatedSeries z_rs;     // z+-1 prefactor of the rs series
  TruncatedSeries z_index;  // z+-1 part of the cycle index
  std::vector<Component> comps;
};

namespace detail {

inline void push(std::vector<Component>& out, int degree, Integer count, TruncatedSeries atom, bool linear) {
  if (count == 0) return;
  out.push_back({degree, std::move(count), std::move(atom), linear});
}

inline Rational qpow(long q, long d) { return Rational(ipow(q, static_cast<unsigned long>(d))); }

inline std::vector<Component> gl_components(long q, int N) {
  const FieldSize F = field_size(q);
  std::vector<Component> c;
  for (int d = 1; d <= N; ++d) push(c, d, count(PolyCountKind::N, F, d), atom_plus(qpow(q, d), N / d), d == 1);
  return c;
}

inline std::vector<Component> unitary_components(long q, int N) {
  const FieldSize F = field_size(q);
  std::vector<Component> c;
  for (int d = 1; d <= N; ++d) {
    if (d % 2) push(c, d, count(PolyCountKind::NTilde, F, d), atom_minus(qpow(q, d), N / d), d == 1);
    if (2 * d <= N) push(c, 2 * d, count(PolyCountKind::MTilde, F, d), atom_plus(qpow(q, 2 * d), N / (2 * d)), d == 1);
  }
  return c;
}

// N*(q;2d) atoms, optionally sign-flipped, and M*(q;d) atoms.
inline std::vector<Component> sp_components(long q, int N, bool flipped) {
  const FieldSize F = field_size(q);
  std::vector<Component> c;
  for (int d = 1; d <= N; ++d) {
    auto a = atom_minus(qpow(q, d), N / d);
    push(c, d, count(PolyCountKind::NStar, F, 2 * d), flipped ? flip(a) : a, false);
    push(c, d, count(PolyCountKind::MStar, F, d), atom_plus(qpow(q, d), N / d), d == 1);
  }
  return c;
}

// prod_i (1 - u/q^{2i-1})^{-f}
inline TruncatedSeries sp_unipotent(long q, int N) {
  const FieldSize F = field_size(q);
  auto g = pow_int(geometric(N, Rational(q)), Integer(F.f));
  return q_dilation_product(g, Rational(q * q));
}

// (1 + u/(2(q-1)) +- u/(2(q+1)))^c; c defaults to 1 for even q and 2 for odd q.
inline TruncatedSeries orth_prefactor(long q, int N, int sign, int power = 0) {
  const FieldSize F = field_size(q);
  Rational c = frac(1, 2 * (q - 1)) + sign * frac(1, 2 * (q + 1));
  return pow_int(TruncatedSeries::binomial(N, 1, c), Integer(power ? power : F.f));
}

inline TruncatedSeries atoms_product(const std::vector<Component>& comps, int N) {
  TruncatedSeries r = TruncatedSeries::one(N);
  for (auto& c : comps) r = mul(r, embed(pow_int(c.atom, c.count), c.degree, N));
  return r;
}

}  // namespace detail

inline FamilyModel gl_model(long q, int N) {
  return {N, TruncatedSeries::one(N), TruncatedSeries::one(N), detail::gl_components(q, N)};
}

inline FamilyModel unitary_model(long q, int N) {
  return {N, TruncatedSeries::one(N), TruncatedSeries::one(N), detail::unitary_components(q, N)};
}

inline FamilyModel sp_model(long q, int N) {
  return {N, TruncatedSeries::one(N), detail::sp_unipotent(q, N), detail::sp_components(q, N, false)};
}

// Orthogonal groups in the O-sum normalization: coefficient n of the Sum model
// is x/|O+(2n)| + x/|O-(2n)|, of the Diff model x/|O+(2n)| - x/|O-(2n)|, where
// x counts elements of each group with the statistic.
inline FamilyModel orth_sum_model(long q, int N) {
  FamilyModel m{N, detail::orth_prefactor(q, N, +1), TruncatedSeries::binomial(N, 1, 1), detail::sp_components(q, N, false)};
  m.z_index = mul(m.z_index, detail::sp_unipotent(q, N));
  return m;
}

inline FamilyModel orth_diff_model(long q, int N) {
  FamilyModel m{N, detail::orth_prefactor(q, N, -1), TruncatedSeries::one(N), detail::sp_components(q, N, true)};
  m.z_index = inverse(detail::atoms_product(m.comps, N));
  return m;
}

// z-1 has multiplicity exactly 1, so only the z+1 piece contributes.
inline FamilyModel so_odd_model(long q, int N) {
  return {N, detail::orth_prefactor(q, N, +1, 1), TruncatedSeries::one(N), detail::sp_components(q, N, false)};
}

// Full cycle index at x = 1: coefficient n is the total mass of rank n.
inline TruncatedSeries cycle_index_total(const FamilyModel& m) {
  return mul(m.z_index, detail::atoms_product(m.comps, m.order));
}

inline TruncatedSeries rs_product(const FamilyModel& m, bool with_prefactor) {
  TruncatedSeries r = with_prefactor ? m.z_rs : TruncatedSeries::one(m.order);
  for (auto& c : m.comps) r = mul(r, embed(pow_int(TruncatedSeries::binomial(c.atom.order(), 1, c.c1()), c.count), c.degree, m.order));
  return r;
}

inline TruncatedSeries eigenvalue_free_product(const FamilyModel& m) {
  TruncatedSeries r = TruncatedSeries::one(m.order);
  for (auto& c : m.comps)
    if (!c.linear) r = mul(r, embed(pow_int(c.atom, c.count), c.degree, m.order));
  return r;
}

// F(u,t) at t = 1 with its t-derivative.  A component's factor is
// atom(ut) + c1 u^deg (1 - t^deg): squarefree members carry D = 0.
inline DualSeries mean_d_product(const FamilyModel& m) {
  const int N = m.order;
  DualSeries r = DualSeries::of_ut(m.z_index);
  for (auto& c : m.comps) {
    const int M = c.atom.order();
    TruncatedSeries dx = (theta(c.atom) - TruncatedSeries::monomial(M, 1, c.c1())) * Rational(c.degree);
    DualSeries px = dual_pow(DualSeries(c.atom, dx), Rational(c.count));
    r = dual_mul(r, DualSeries(embed(px.value, c.degree, N), embed(px.derivative, c.degree, N)));
  }
  return r;
}

}  // namespace derange
