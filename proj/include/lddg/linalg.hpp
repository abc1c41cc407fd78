#pragma once
// Dense vectors and matrices over GF(q): reduced row echelon form, kernels,
// products. Everything is small (dimension <= 6 in practice).

#include <cstddef>
#include <vector>

#include "lddg/gf.hpp"

namespace lddg {

using Vec = std::vector<Fe>;
using Mat = std::vector<Vec>;

inline bool is_zero_vec(const Vec& v) {
  for (Fe x : v)
    if (x.v != 0) return false;
  return true;
}

// In-place reduced row echelon form. Returns the rank; zero rows are removed.
inline int rref(Mat& a, const GF& gf) {
  if (a.empty()) return 0;
  size_t cols = a[0].size();
  size_t pr = 0;
  for (size_t c = 0; c < cols && pr < a.size(); ++c) {
    size_t piv = pr;
    while (piv < a.size() && a[piv][c].v == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[pr], a[piv]);
    Fe s = gf.inv(a[pr][c]);
    for (size_t j = 0; j < cols; ++j) a[pr][j] = gf.mul(a[pr][j], s);
    for (size_t i = 0; i < a.size(); ++i) {
      if (i == pr || a[i][c].v == 0) continue;
      Fe f = a[i][c];
      for (size_t j = 0; j < cols; ++j) a[i][j] = gf.sub(a[i][j], gf.mul(f, a[pr][j]));
    }
    ++pr;
  }
  a.resize(pr);
  return static_cast<int>(pr);
}

// Basis (RREF rows) of the right kernel {x : a x = 0}; `cols` is the ambient
// width, needed when a has no rows.
inline Mat kernel_basis(const Mat& a, size_t cols, const GF& gf) {
  Mat r = a;
  rref(r, gf);
  std::vector<int> pivot_col(r.size());
  std::vector<bool> is_pivot(cols, false);
  for (size_t i = 0; i < r.size(); ++i) {
    size_t c = 0;
    while (c < cols && r[i][c].v == 0) ++c;
    pivot_col[i] = static_cast<int>(c);
    is_pivot[c] = true;
  }
  Mat basis;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    Vec x(cols, Fe(0));
    x[fc] = Fe(1);
    for (size_t i = 0; i < r.size(); ++i) x[pivot_col[i]] = gf.neg(r[i][fc]);
    basis.push_back(std::move(x));
  }
  rref(basis, gf);
  return basis;
}

inline Mat matmul(const Mat& a, const Mat& b, const GF& gf) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Mat c(n, Vec(m, Fe(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l].v == 0) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] = gf.add(c[i][j], gf.mul(a[i][l], b[l][j]));
    }
  return c;
}

inline Vec matvec(const Mat& a, const Vec& x, const GF& gf) {
  Vec y(a.size(), Fe(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] = gf.add(y[i], gf.mul(a[i][j], x[j]));
  return y;
}

inline int rank_of(Mat a, const GF& gf) { return rref(a, gf); }

inline Vec conj_vec(const Vec& v, const GF& gf) {
  Vec w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = gf.conj(v[i]);
  return w;
}

inline Mat transpose(const Mat& a) {
  if (a.empty()) return {};
  Mat t(a[0].size(), Vec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

}  // namespace lddg
