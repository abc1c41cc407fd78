#pragma once
// The four polarity types of a finite projective space, realized by fixed
// canonical Gram matrices: perp maps, absolute points, totally isotropic
// subspaces.
//
// Canonical Gram matrices (block diagonal, H = [[0,1],[1,0]]):
//   symplectic  m even, blocks [[0,1],[-1,0]]
//   pseudo      q even, identity
//   orthogonal  q odd; m odd: H,...,H,[1]; m even plus: H,...,H;
//               m even minus: H,...,H,[[1,0],[0,-d]] with d the least
//               non-square of GF(q)
//   unitary     q = r^2, identity, with conjugation x -> x^r in the second
//               argument
//
// All polarities of one type are projectively equivalent, so fixing these
// representatives loses no generality.

#include <optional>
#include <string>
#include <vector>

#include "lddg/gf.hpp"
#include "lddg/linalg.hpp"
#include "lddg/projgeom.hpp"

namespace lddg {

LDDG_DEFINE_ERROR(kind_constraint)

enum class PolarityKind { symplectic, pseudo, orthogonal, unitary };
enum class FormVariant { none, plus, minus };

inline std::string to_string(PolarityKind k) {
  switch (k) {
    case PolarityKind::symplectic: return "symplectic";
    case PolarityKind::pseudo: return "pseudo";
    case PolarityKind::orthogonal: return "orthogonal";
    case PolarityKind::unitary: return "unitary";
  }
  return "?";
}

struct Polarity {
  const GF* gf = nullptr;
  int m = 0;
  Mat gram;
  PolarityKind kind = PolarityKind::symplectic;
  bool uses_conjugation = false;
};

// b(u, w) = u^T G sigma(w), with sigma the conjugation for unitary polarities
// and the identity otherwise.
inline Fe form_eval(const Polarity& z, const Vec& u, const Vec& w) {
  const GF& gf = *z.gf;
  Fe acc(0);
  for (int i = 0; i < z.m; ++i) {
    if (u[i].v == 0) continue;
    Fe row(0);
    for (int j = 0; j < z.m; ++j) {
      if (w[j].v == 0) continue;
      Fe wj = z.uses_conjugation ? gf.conj(w[j]) : w[j];
      row = gf.add(row, gf.mul(z.gram[i][j], wj));
    }
    acc = gf.add(acc, gf.mul(u[i], row));
  }
  return acc;
}

inline bool is_absolute(const Polarity& z, const Vec& pt) { return form_eval(z, pt, pt).v == 0; }

inline void validate_polarity(const Polarity& z) {
  const GF& gf = *z.gf;
  int m = z.m;
  if (rank_of(z.gram, gf) != m) throw kind_constraint("degenerate Gram matrix");
  switch (z.kind) {
    case PolarityKind::symplectic: {
      if (m % 2 != 0) throw kind_constraint("symplectic polarity needs even m");
      for (int i = 0; i < m; ++i) {
        if (z.gram[i][i].v != 0) throw kind_constraint("symplectic Gram must have zero diagonal");
        for (int j = 0; j < m; ++j)
          if (z.gram[i][j] != gf.neg(z.gram[j][i])) throw kind_constraint("symplectic Gram must be antisymmetric");
      }
      break;
    }
    case PolarityKind::pseudo: {
      if (gf.q() % 2 != 0) throw kind_constraint("pseudo-polarity needs even q");
      bool nonalternating = false;
      for (int i = 0; i < m; ++i) {
        if (z.gram[i][i].v != 0) nonalternating = true;
        for (int j = 0; j < m; ++j)
          if (z.gram[i][j] != z.gram[j][i]) throw kind_constraint("pseudo Gram must be symmetric");
      }
      if (!nonalternating) throw kind_constraint("pseudo Gram must not be alternating");
      break;
    }
    case PolarityKind::orthogonal: {
      if (gf.q() % 2 == 0) throw kind_constraint("orthogonal polarity needs odd q");
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          if (z.gram[i][j] != z.gram[j][i]) throw kind_constraint("orthogonal Gram must be symmetric");
      break;
    }
    case PolarityKind::unitary: {
      if (!gf.has_conjugation()) throw kind_constraint("unitary polarity needs a square q");
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          if (z.gram[j][i] != gf.conj(z.gram[i][j])) throw kind_constraint("unitary Gram must be conjugate-symmetric");
      break;
    }
  }
}

inline Fe least_nonsquare(const GF& gf) {
  int q = gf.q();
  std::vector<bool> sq(q, false);
  for (int a = 0; a < q; ++a) sq[gf.mul(Fe(a), Fe(a)).v] = true;
  for (int a = 2; a < q; ++a)
    if (!sq[a]) return Fe(a);
  throw error("no non-square (q even?)");
}

inline Polarity standard_polarity(PolarityKind kind, int m, const GF& gf,
                                  FormVariant variant = FormVariant::none) {
  Mat g(m, Vec(m, Fe(0)));
  switch (kind) {
    case PolarityKind::symplectic: {
      if (m % 2 != 0) throw kind_constraint("symplectic polarity needs even m");
      for (int i = 0; i + 1 < m; i += 2) {
        g[i][i + 1] = Fe(1);
        g[i + 1][i] = gf.neg(Fe(1));
      }
      break;
    }
    case PolarityKind::pseudo: {
      for (int i = 0; i < m; ++i) g[i][i] = Fe(1);
      break;
    }
    case PolarityKind::orthogonal: {
      if (m % 2 == 1) {
        if (variant != FormVariant::none) throw kind_constraint("parabolic case takes no variant");
        for (int i = 0; i + 1 < m - 1; i += 2) g[i][i + 1] = g[i + 1][i] = Fe(1);
        g[m - 1][m - 1] = Fe(1);
      } else if (variant == FormVariant::plus) {
        for (int i = 0; i + 1 < m; i += 2) g[i][i + 1] = g[i + 1][i] = Fe(1);
      } else if (variant == FormVariant::minus) {
        for (int i = 0; i + 1 < m - 2; i += 2) g[i][i + 1] = g[i + 1][i] = Fe(1);
        g[m - 2][m - 2] = Fe(1);
        g[m - 1][m - 1] = gf.neg(least_nonsquare(gf));
      } else {
        throw kind_constraint("orthogonal polarity with even m needs variant plus or minus");
      }
      break;
    }
    case PolarityKind::unitary: {
      for (int i = 0; i < m; ++i) g[i][i] = Fe(1);
      break;
    }
  }
  Polarity z{&gf, m, std::move(g), kind, kind == PolarityKind::unitary};
  validate_polarity(z);
  return z;
}

// perp of a subspace: solve rows(s) * G * sigma(x) = 0 and undo sigma.
inline Subspace perp(const Subspace& s, const Polarity& z) {
  if (s.m != z.m || s.gf != z.gf) throw ambient_mismatch("subspace and polarity ambient differ");
  const GF& gf = *z.gf;
  Mat bg = matmul(s.rows, z.gram, gf);
  Mat k = kernel_basis(bg, z.m, gf);
  if (z.uses_conjugation)
    for (Vec& row : k) row = conj_vec(row, gf);
  return make_subspace(z.m, gf, std::move(k));
}

inline Subspace perp_point(const Vec& pt, const Polarity& z) {
  return perp(point_subspace(pt, *z.gf), z);
}

inline std::vector<ProjPoint> absolute_points(const Polarity& z) {
  std::vector<ProjPoint> out;
  for (ProjPoint& p : all_points(z.m, *z.gf))
    if (is_absolute(z, p.coords)) out.push_back(std::move(p));
  return out;
}

// pi subseteq pi^zeta, i.e. the form vanishes identically on pi.
inline bool is_totally_isotropic(const Subspace& s, const Polarity& z) {
  if (s.m != z.m || s.gf != z.gf) throw ambient_mismatch("subspace and polarity ambient differ");
  for (const Vec& u : s.rows)
    for (const Vec& w : s.rows)
      if (form_eval(z, u, w).v != 0) return false;
  return true;
}

namespace detail {

// Depth-first extension over points in increasing rank order. A totally
// isotropic subspace extended by an absolute point of its perp stays totally
// isotropic, so candidates need only pass those two checks.
inline bool ti_extend(const Polarity& z, const std::vector<ProjPoint>& pts, Subspace& cur,
                      size_t next_rank, int target_dim, const Vec* must_avoid) {
  if (cur.proj_dim() == target_dim) return true;
  for (size_t i = next_rank; i < pts.size(); ++i) {
    const Vec& x = pts[i].coords;
    if (!is_absolute(z, x)) continue;
    bool in_perp = true;
    for (const Vec& r : cur.rows) {
      if (form_eval(z, r, x).v != 0) {
        in_perp = false;
        break;
      }
    }
    if (!in_perp || subspace_contains(cur, x)) continue;
    Subspace ext = span_with_point(cur, x);
    if (must_avoid && subspace_contains(ext, *must_avoid)) continue;
    Subspace saved = cur;
    cur = ext;
    if (ti_extend(z, pts, cur, i + 1, target_dim, must_avoid)) return true;
    cur = saved;
  }
  return false;
}

}  // namespace detail

struct TiConstraint {
  std::optional<Vec> through;  // subspace must contain this (absolute) point
  std::optional<Vec> avoiding; // subspace must not contain this point
};

// First totally isotropic subspace of the requested projective dimension in
// the deterministic point order, or nullopt when none exists (the target
// exceeds the Witt index).
inline std::optional<Subspace> find_totally_isotropic(const Polarity& z, int target_proj_dim,
                                                      const TiConstraint& c = {}) {
  if (target_proj_dim < 0) throw error("target dimension must be >= 0");
  std::vector<ProjPoint> pts = all_points(z.m, *z.gf);
  Subspace cur = empty_subspace(z.m, *z.gf);
  if (c.through) {
    if (!is_absolute(z, *c.through)) return std::nullopt;
    cur = point_subspace(*c.through, *z.gf);
    if (c.avoiding && subspace_contains(cur, *c.avoiding)) return std::nullopt;
    if (cur.proj_dim() == target_proj_dim) return cur;
  }
  const Vec* avoid = c.avoiding ? &*c.avoiding : nullptr;
  if (detail::ti_extend(z, pts, cur, 0, target_proj_dim, avoid)) return cur;
  return std::nullopt;
}

inline int witt_index(const Polarity& z) {
  int w = 0;
  while (find_totally_isotropic(z, w)) ++w;
  return w;
}

// For a pseudo-polarity: the absolute points form a hyperplane H*, whose pole
// (H*)^zeta is a point. The pole lies on H* exactly when the ambient
// projective dimension m-1 is odd; this parity rule is checked rather than
// assumed.
struct PseudoHyperplane {
  Subspace hyperplane;
  Vec pole;
  bool pole_on_hyperplane;
};

inline PseudoHyperplane pseudo_absolute_hyperplane(const Polarity& z) {
  if (z.kind != PolarityKind::pseudo) throw kind_constraint("not a pseudo-polarity");
  Mat rows;
  for (const ProjPoint& p : absolute_points(z)) rows.push_back(p.coords);
  Subspace h = make_subspace(z.m, *z.gf, std::move(rows));
  if (h.proj_dim() != z.m - 2) throw error("pseudo-polarity absolute set is not a hyperplane");
  Subspace pole = perp(h, z);
  if (pole.proj_dim() != 0) throw error("pole of the absolute hyperplane is not a point");
  Vec x = normalize_point(pole.rows[0], *z.gf);
  bool on = subspace_contains(h, x);
  if (on != (z.m % 2 == 0))
    throw error("pseudo-polarity pole/hyperplane parity rule violated");
  return PseudoHyperplane{std::move(h), std::move(x), on};
}

}  // namespace lddg
