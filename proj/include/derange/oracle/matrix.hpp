#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "poly.hpp"

namespace derange::oracle {

inline constexpr int kMaxDim = 6;

// Dense n x n matrix, row major, n <= 6.
struct Mat {
  int n = 0;
  std::array<Elt, kMaxDim * kMaxDim> a{};

  Elt& operator()(int i, int j) { return a[i * kMaxDim + j]; }
  Elt operator()(int i, int j) const { return a[i * kMaxDim + j]; }
  bool operator==(const Mat& o) const { return n == o.n && a == o.a; }

  static Mat identity(int n) {
    Mat m;
    m.n = n;
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < n; ++i) {
      s += i ? ";" : "";
      for (int j = 0; j < n; ++j) s += (j ? " " : "") + std::to_string((*this)(i, j));
    }
    return s + "]";
  }
};

struct MatHash {
  std::size_t operator()(const Mat& m) const {
    std::size_t h = static_cast<std::size_t>(m.n);
    for (int i = 0; i < m.n; ++i)
      for (int j = 0; j < m.n; ++j) h = h * 131 + m(i, j);
    return h;
  }
};

inline Mat mat_mul(const Field& F, const Mat& x, const Mat& y) {
  Mat r;
  r.n = x.n;
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      Elt c = x(i, k);
      if (!c) continue;
      for (int j = 0; j < x.n; ++j) r(i, j) = F.add(r(i, j), F.mul(c, y(k, j)));
    }
  return r;
}

inline Mat mat_add(const Field& F, const Mat& x, const Mat& y) {
  Mat r;
  r.n = x.n;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) r(i, j) = F.add(x(i, j), y(i, j));
  return r;
}

inline Mat mat_scalar(const Field& F, const Mat& x, Elt c) {
  Mat r;
  r.n = x.n;
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) r(i, j) = F.mul(c, x(i, j));
  return r;
}

// Row reduction of an r x c block stored in rows; returns rank.
inline int row_reduce(const Field& F, std::vector<std::vector<Elt>>& rows) {
  if (rows.empty()) return 0;
  const int R = static_cast<int>(rows.size()), C = static_cast<int>(rows[0].size());
  int rank = 0;
  for (int col = 0; col < C && rank < R; ++col) {
    int piv = -1;
    for (int i = rank; i < R; ++i)
      if (rows[i][col]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    Elt inv = F.inv(rows[rank][col]);
    for (auto& v : rows[rank]) v = F.mul(v, inv);
    for (int i = 0; i < R; ++i) {
      if (i == rank || !rows[i][col]) continue;
      Elt f = rows[i][col];
      for (int j = 0; j < C; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[rank][j]));
    }
    ++rank;
  }
  rows.resize(rank);
  return rank;
}

inline int rank(const Field& F, const Mat& m) {
  std::vector<std::vector<Elt>> rows(m.n, std::vector<Elt>(m.n));
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) rows[i][j] = m(i, j);
  return row_reduce(F, rows);
}

inline Elt det(const Field& F, Mat m) {
  Elt d = 1;
  for (int c = 0; c < m.n; ++c) {
    int piv = -1;
    for (int i = c; i < m.n; ++i)
      if (m(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int j = 0; j < m.n; ++j) std::swap(m(c, j), m(piv, j));
      d = F.neg(d);
    }
    d = F.mul(d, m(c, c));
    Elt inv = F.inv(m(c, c));
    for (int i = c + 1; i < m.n; ++i) {
      if (!m(i, c)) continue;
      Elt f = F.mul(m(i, c), inv);
      for (int j = c; j < m.n; ++j) m(i, j) = F.sub(m(i, j), F.mul(f, m(c, j)));
    }
  }
  return d;
}

// Characteristic polynomial det(zI - m) via reduction to upper Hessenberg form.
inline Poly char_poly(const Field& F, Mat h) {
  const int n = h.n;
  for (int c = 0; c + 2 < n; ++c) {
    int piv = -1;
    for (int i = c + 1; i < n; ++i)
      if (h(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != c + 1) {
      for (int j = 0; j < n; ++j) std::swap(h(piv, j), h(c + 1, j));
      for (int i = 0; i < n; ++i) std::swap(h(i, piv), h(i, c + 1));
    }
    Elt inv = F.inv(h(c + 1, c));
    for (int i = c + 2; i < n; ++i) {
      Elt f = F.mul(h(i, c), inv);
      if (!f) continue;
      for (int j = 0; j < n; ++j) h(i, j) = F.sub(h(i, j), F.mul(f, h(c + 1, j)));
      for (int r = 0; r < n; ++r) h(r, c + 1) = F.add(h(r, c + 1), F.mul(f, h(r, i)));
    }
  }
  // p_m = (z - H[m][m]) p_{m-1} - sum_i t_i H[m-i][m] p_{m-i-1}, 1-based.
  std::vector<Poly> p(static_cast<std::size_t>(n) + 1);
  p[0] = {1};
  auto H = [&](int i, int j) { return h(i - 1, j - 1); };
  for (int m = 1; m <= n; ++m) {
    Poly cur = poly_mul(F, linear(F, H(m, m)), p[m - 1]);
    Elt t = 1;
    for (int i = 1; i < m; ++i) {
      t = F.mul(t, H(m - i + 1, m - i));
      Elt c = F.mul(t, H(m - i, m));
      if (c) cur = poly_sub(F, cur, poly_scale(F, p[m - i - 1], c));
    }
    p[m] = cur;
  }
  return p[n];
}

inline Mat poly_at(const Field& F, const Poly& f, const Mat& m) {
  Mat r;
  r.n = m.n;
  for (int i = deg(f); i >= 0; --i) {
    r = mat_mul(F, r, m);
    for (int d = 0; d < m.n; ++d) r(d, d) = F.add(r(d, d), f[i]);
  }
  return r;
}

// Dimension of ker(f(m)^j).
inline int kernel_dim(const Field& F, const Poly& f, const Mat& m, int j) {
  Mat base = poly_at(F, f, m);
  Mat p = Mat::identity(m.n);
  for (int i = 0; i < j; ++i) p = mat_mul(F, p, base);
  return m.n - rank(F, p);
}

}  // namespace derange::oracle
