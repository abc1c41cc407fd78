#pragma once
// The projective space PG(m-1, q): normalized points in a fixed enumeration
// order, subspaces as reduced row echelon bases, span/intersection, and the
// point-count formulas for subspaces, quadrics and Hermitean varieties.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lddg/gf.hpp"
#include "lddg/linalg.hpp"

namespace lddg {

LDDG_DEFINE_ERROR(ambient_mismatch)
LDDG_DEFINE_ERROR(kind_dim_mismatch)
LDDG_DEFINE_ERROR(not_square)

inline long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// (q^n - 1)/(q - 1): number of points of a subspace of vector dimension n.
inline long long point_count(int n, long long q) {
  if (n <= 0) return 0;
  return (ipow(q, n) - 1) / (q - 1);
}

// A point of PG(m-1,q): coordinates normalized so the first nonzero entry is
// 1, plus the lexicographic rank among all normalized vectors.
struct ProjPoint {
  Vec coords;
  long long index = -1;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords == b.coords; }
};

inline Vec normalize_point(Vec v, const GF& gf) {
  for (Fe x : v) {
    if (x.v != 0) {
      if (x.v != 1) {
        Fe s = gf.inv(x);
        for (Fe& y : v) y = gf.mul(y, s);
      }
      return v;
    }
  }
  throw error("cannot normalize the zero vector");
}

// Lexicographic rank of a normalized vector among all normalized vectors of
// length m. Vectors with a later leading position sort first.
inline long long point_rank(const Vec& v, const GF& gf) {
  int m = static_cast<int>(v.size());
  long long q = gf.q();
  int lead = 0;
  while (lead < m && v[lead].v == 0) ++lead;
  long long before = point_count(m - 1 - lead, q);  // points with later lead
  long long suffix = 0;
  for (int i = lead + 1; i < m; ++i) suffix = suffix * q + v[i].v;
  return before + suffix;
}

// All points of PG(m-1,q), in the order given by point_rank.
inline std::vector<ProjPoint> all_points(int m, const GF& gf) {
  if (m < 1) throw error("ambient dimension must be >= 1");
  long long q = gf.q();
  std::vector<ProjPoint> pts;
  pts.reserve(point_count(m, q));
  for (int lead = m - 1; lead >= 0; --lead) {
    long long tail = ipow(q, m - 1 - lead);
    for (long long s = 0; s < tail; ++s) {
      Vec v(m, Fe(0));
      v[lead] = Fe(1);
      long long x = s;
      for (int i = m - 1; i > lead; --i) {
        v[i] = Fe(static_cast<int>(x % q));
        x /= q;
      }
      ProjPoint p{std::move(v), static_cast<long long>(pts.size())};
      pts.push_back(std::move(p));
    }
  }
  return pts;
}

// A projective subspace, stored as the unique RREF basis of the underlying
// vector subspace. The empty basis is the empty subspace (proj_dim -1).
struct Subspace {
  const GF* gf = nullptr;
  int m = 0;
  Mat rows;

  int proj_dim() const { return static_cast<int>(rows.size()) - 1; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.m == b.m && a.rows == b.rows;
  }
};

inline Subspace make_subspace(int m, const GF& gf, Mat rows) {
  for (const Vec& r : rows)
    if (static_cast<int>(r.size()) != m) throw ambient_mismatch("row length != m");
  rref(rows, gf);
  return Subspace{&gf, m, std::move(rows)};
}

inline Subspace empty_subspace(int m, const GF& gf) { return Subspace{&gf, m, {}}; }

inline Subspace whole_space(int m, const GF& gf) {
  Mat id(m, Vec(m, Fe(0)));
  for (int i = 0; i < m; ++i) id[i][i] = Fe(1);
  return Subspace{&gf, m, std::move(id)};
}

inline Subspace point_subspace(const Vec& v, const GF& gf) {
  return make_subspace(static_cast<int>(v.size()), gf, {v});
}

inline void check_same_ambient(const Subspace& a, const Subspace& b) {
  if (a.m != b.m || a.gf != b.gf) throw ambient_mismatch("subspaces from different ambient spaces");
}

// Membership test: the point reduces to zero against the RREF basis.
inline bool subspace_contains(const Subspace& s, const Vec& pt) {
  const GF& gf = *s.gf;
  Vec v = pt;
  for (const Vec& row : s.rows) {
    size_t c = 0;
    while (c < row.size() && row[c].v == 0) ++c;
    if (c == row.size()) continue;
    if (v[c].v != 0) {
      Fe f = v[c];
      for (size_t j = 0; j < v.size(); ++j) v[j] = gf.sub(v[j], gf.mul(f, row[j]));
    }
  }
  return is_zero_vec(v);
}

inline bool subspace_leq(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  for (const Vec& r : a.rows)
    if (!subspace_contains(b, r)) return false;
  return true;
}

inline Subspace span(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  Mat rows = a.rows;
  rows.insert(rows.end(), b.rows.begin(), b.rows.end());
  return make_subspace(a.m, *a.gf, std::move(rows));
}

inline Subspace span_with_point(const Subspace& a, const Vec& pt) {
  Mat rows = a.rows;
  rows.push_back(pt);
  return make_subspace(a.m, *a.gf, std::move(rows));
}

// Orthogonal complement with respect to the standard dot product; a helper
// for computing intersections, not a polarity.
inline Subspace dot_complement(const Subspace& s) {
  Mat k = kernel_basis(s.rows, s.m, *s.gf);
  return Subspace{s.gf, s.m, std::move(k)};
}

inline Subspace intersect(const Subspace& a, const Subspace& b) {
  check_same_ambient(a, b);
  return dot_complement(span(dot_complement(a), dot_complement(b)));
}

// The points of a subspace: all normalized combinations of the RREF basis
// rows. Combinations whose first nonzero coefficient is 1 are automatically
// normalized points.
inline std::vector<ProjPoint> points_of(const Subspace& s) {
  const GF& gf = *s.gf;
  long long q = gf.q();
  int d = static_cast<int>(s.rows.size());
  std::vector<ProjPoint> pts;
  pts.reserve(point_count(d, q));
  for (int lead = d - 1; lead >= 0; --lead) {
    long long tail = ipow(q, d - 1 - lead);
    for (long long sfx = 0; sfx < tail; ++sfx) {
      Vec coef(d, Fe(0));
      coef[lead] = Fe(1);
      long long x = sfx;
      for (int i = d - 1; i > lead; --i) {
        coef[i] = Fe(static_cast<int>(x % q));
        x /= q;
      }
      Vec v(s.m, Fe(0));
      for (int i = 0; i < d; ++i) {
        if (coef[i].v == 0) continue;
        for (int j = 0; j < s.m; ++j) v[j] = gf.add(v[j], gf.mul(coef[i], s.rows[i][j]));
      }
      pts.push_back(ProjPoint{std::move(v), -1});
    }
  }
  for (ProjPoint& p : pts) p.index = point_rank(p.coords, gf);
  std::sort(pts.begin(), pts.end(),
            [](const ProjPoint& a, const ProjPoint& b) { return a.index < b.index; });
  return pts;
}

enum class QuadricKind { parabolic, hyperbolic, elliptic };

// Number of points of a nonsingular quadric of the given kind in
// PG(proj_dim_ambient, q).
inline long long count_quadric(QuadricKind kind, int proj_dim_ambient, long long q) {
  int d = proj_dim_ambient;
  switch (kind) {
    case QuadricKind::parabolic: {
      if (d < 0 || d % 2 != 0) throw kind_dim_mismatch("parabolic quadric needs even projective dimension");
      int n = d / 2;
      return (ipow(q, 2 * n) - 1) / (q - 1);
    }
    case QuadricKind::hyperbolic: {
      if (d < -1 || d % 2 == 0) throw kind_dim_mismatch("hyperbolic quadric needs odd projective dimension");
      if (d == -1) return 0;
      int n = (d + 1) / 2;
      return (ipow(q, 2 * n - 1) - 1) / (q - 1) + ipow(q, n - 1);
    }
    case QuadricKind::elliptic: {
      if (d < 1 || d % 2 == 0) throw kind_dim_mismatch("elliptic quadric needs odd projective dimension >= 1");
      int n = (d + 1) / 2;
      return (ipow(q, 2 * n - 1) - 1) / (q - 1) - ipow(q, n - 1);
    }
  }
  throw kind_dim_mismatch("bad quadric kind");
}

// Number of points of the nonsingular Hermitean variety in
// PG(proj_dim_ambient, q), q = r^2.
inline long long count_hermitean(int proj_dim_ambient, long long q) {
  long long r = 1;
  while (r * r < q) ++r;
  if (r * r != q) throw not_square("q = " + std::to_string(q) + " is not a square");
  int mv = proj_dim_ambient + 1;  // vector dimension
  if (mv <= 0) return 0;
  long long sm = (mv % 2 == 0) ? -1 : 1;   // (-1)^{m+1}
  long long sm1 = (mv % 2 == 0) ? 1 : -1;  // (-1)^m
  return (ipow(r, mv) + sm) * (ipow(r, mv - 1) + sm1) / (q - 1);
}

inline std::string subspace_key(const Subspace& s) {
  std::string k;
  k.reserve(s.rows.size() * s.m);
  for (const Vec& r : s.rows)
    for (Fe x : r) k.push_back(static_cast<char>('0' + x.v));
  return k;
}

}  // namespace lddg
