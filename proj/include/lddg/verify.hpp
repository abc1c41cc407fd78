#pragma once
// Verification of the divisible-design property for graphs with selfloops:
// parameter extraction by brute force, canonical-partition recovery, the
// closed-form spectrum, the quotient-matrix identity, and dual Seidel
// switching.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lddg/gf.hpp"
#include "lddg/graph.hpp"

namespace lddg {

LDDG_DEFINE_ERROR(unequal_class_sizes)
LDDG_DEFINE_ERROR(not_regular)
LDDG_DEFINE_ERROR(not_automorphism)
LDDG_DEFINE_ERROR(not_involution)
LDDG_DEFINE_ERROR(inconsistent_trace)
LDDG_DEFINE_ERROR(negative_parameter)
LDDG_DEFINE_ERROR(not_applicable)
LDDG_DEFINE_ERROR(component_class_straddle)

// Parameter tuple (v, k, lambda1, lambda2, m, n) together with the loop count
// L and the within-class ordered adjacency count N*.
struct Params {
  long long v = 0, k = 0, lambda1 = 0, lambda2 = 0, m = 0, n = 0;
  bool proper = false;
  long long loops = 0;
  long long n_star = 0;

  friend bool operator==(const Params& a, const Params& b) {
    return a.v == b.v && a.k == b.k && a.lambda1 == b.lambda1 && a.lambda2 == b.lambda2 &&
           a.m == b.m && a.n == b.n;
  }
  std::string tuple_str() const {
    return "(" + std::to_string(v) + "," + std::to_string(k) + "," + std::to_string(lambda1) +
           "," + std::to_string(lambda2) + "," + std::to_string(m) + "," + std::to_string(n) + ")";
  }
};

struct Refutation {
  std::string reason;
  long long x = -1, y = -1;
  long long expected = -1, actual = -1;
};

using VerifyResult = std::variant<Params, Refutation>;

inline bool verified(const VerifyResult& r) { return std::holds_alternative<Params>(r); }
inline const Params& params_of(const VerifyResult& r) { return std::get<Params>(r); }

// Brute-force check: regularity, a constant common-neighbour count over
// distinct within-class pairs, and a constant count over cross-class pairs.
// The first violated pair (in lexicographic order) is reported.
inline VerifyResult verify_lddg(const LoopedGraph& g, const Partition& p) {
  std::vector<long long> cls = p.class_of(g.v());
  if (!p.equal_class_sizes()) throw unequal_class_sizes("partition classes differ in size");
  long long m = static_cast<long long>(p.classes.size());
  long long n = m ? static_cast<long long>(p.classes[0].size()) : 0;
  if (n < 2) return Refutation{"class size below 2: no within-class pairs", -1, -1};
  if (m < 2) return Refutation{"single class: no cross-class pairs", -1, -1};

  long long k = g.degree(0);
  for (long long x = 1; x < g.v(); ++x)
    if (g.degree(x) != k) return Refutation{"not regular", x, -1, k, g.degree(x)};

  long long l1 = -1, l2 = -1;
  for (long long x = 0; x < g.v(); ++x) {
    for (long long y = x + 1; y < g.v(); ++y) {
      long long c = g.common_neighbours(x, y);
      if (cls[x] == cls[y]) {
        if (l1 < 0) l1 = c;
        if (c != l1) return Refutation{"lambda1 not constant", x, y, l1, c};
      } else {
        if (l2 < 0) l2 = c;
        if (c != l2) return Refutation{"lambda2 not constant", x, y, l2, c};
      }
    }
  }
  Params out;
  out.v = g.v();
  out.k = k;
  out.lambda1 = l1;
  out.lambda2 = l2;
  out.m = m;
  out.n = n;
  out.proper = (m >= 2 && n >= 2 && l1 != l2);
  out.loops = g.loop_count();
  out.n_star = n_star(g, p);
  return out;
}

// ---------------------------------------------------------------------------
// Spectrum

inline bool is_perfect_square(long long x, long long* root = nullptr) {
  if (x < 0) return false;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  if (root) *root = r;
  return r * r == x;
}

// Exact eigenvalue: either an integer or sign*sqrt(radicand) with a
// non-square radicand. Equality is structural.
struct Eigenvalue {
  bool rational = true;
  long long value = 0;     // when rational
  long long radicand = 0;  // when irrational, > 0 and not a perfect square
  int sign = 1;

  static Eigenvalue integer(long long x) { return Eigenvalue{true, x, 0, x < 0 ? -1 : 1}; }
  static Eigenvalue root(long long rad, int sign) {
    long long r = 0;
    if (rad < 0) throw error("negative radicand");
    if (is_perfect_square(rad, &r)) return integer(sign * r);
    return Eigenvalue{false, 0, rad, sign};
  }
  double approx() const { return rational ? double(value) : sign * std::sqrt(double(radicand)); }
  std::string str() const {
    if (rational) return std::to_string(value);
    return (sign < 0 ? "-sqrt(" : "sqrt(") + std::to_string(radicand) + ")";
  }
  friend bool operator==(const Eigenvalue& a, const Eigenvalue& b) {
    if (a.rational != b.rational) return false;
    if (a.rational) return a.value == b.value;
    return a.radicand == b.radicand && a.sign == b.sign;
  }
};

using EigenMultiset = std::vector<std::pair<Eigenvalue, long long>>;

inline EigenMultiset canonical_multiset(EigenMultiset in) {
  EigenMultiset out;
  std::sort(in.begin(), in.end(),
            [](const auto& a, const auto& b) { return a.first.approx() > b.first.approx(); });
  for (auto& e : in) {
    if (e.second == 0) continue;
    if (!out.empty() && out.back().first == e.first)
      out.back().second += e.second;
    else
      out.push_back(e);
  }
  return out;
}

inline std::string multiset_str(const EigenMultiset& ms) {
  std::string s;
  for (const auto& [ev, f] : ms) {
    if (!s.empty()) s += ' ';
    s += ev.str() + "^" + std::to_string(f);
  }
  return s;
}

// Eigenvalues mu0=k, +-sqrt(k-lambda1), +-sqrt(k^2-lambda2*v) with
// multiplicities 1, f1, f2, f3, f4. When a pair collapses to the eigenvalue 0
// only the sum of its two multiplicities is determined, and the pair is
// stored merged.
struct Spectrum {
  long long k = 0;
  Eigenvalue mu1 = Eigenvalue::integer(0), mu3 = Eigenvalue::integer(0);  // positive reps
  bool split12 = true, split34 = true;
  long long f1 = 0, f2 = 0;  // when !split12, f1 holds the merged sum and f2 = 0
  long long f3 = 0, f4 = 0;

  EigenMultiset multiset() const {
    EigenMultiset ms;
    ms.push_back({Eigenvalue::integer(k), 1});
    auto neg = [](Eigenvalue e) {
      if (e.rational) e.value = -e.value;
      e.sign = -e.sign;
      return e;
    };
    ms.push_back({mu1, f1});
    ms.push_back({split12 ? neg(mu1) : mu1, split12 ? f2 : 0});
    ms.push_back({mu3, f3});
    ms.push_back({split34 ? neg(mu3) : mu3, split34 ? f4 : 0});
    return canonical_multiset(std::move(ms));
  }
  std::string str() const { return multiset_str(multiset()); }
};

// Closed-form spectrum from the parameters plus the two trace quantities L
// and N*. Throws inconsistent_trace if no integral multiplicities fit, which
// means no LDDG with these parameters can have this (L, N*) pair.
inline Spectrum spectrum_from_params(const Params& p) {
  long long d1 = p.k - p.lambda1;
  long long d3 = p.k * p.k - p.lambda2 * p.v;
  if (d1 < 0 || d3 < 0) throw inconsistent_trace("negative eigenvalue square");
  if (p.n <= 0 || p.n_star % p.n != 0)
    throw inconsistent_trace("N* is not divisible by the class size");
  long long tR = p.n_star / p.n;  // trace of the quotient matrix R
  long long f12 = p.v - p.m;
  long long f34 = p.m - 1;

  Spectrum s;
  s.k = p.k;

  long long root3 = 0;
  if (d3 == 0) {
    s.split34 = false;
    s.mu3 = Eigenvalue::integer(0);
    s.f3 = f34;
    s.f4 = 0;
    if (tR != p.k) throw inconsistent_trace("N*/n must equal k when k^2 = lambda2 v");
  } else if (is_perfect_square(d3, &root3)) {
    s.mu3 = Eigenvalue::integer(root3);
    long long num = tR - p.k;
    if (num % root3 != 0) throw inconsistent_trace("quotient trace does not split");
    long long diff = num / root3;
    if ((f34 + diff) % 2 != 0 || f34 + diff < 0 || diff > f34)
      throw inconsistent_trace("non-integral f3/f4");
    s.f3 = (f34 + diff) / 2;
    s.f4 = f34 - s.f3;
  } else {
    s.mu3 = Eigenvalue::root(d3, 1);
    if (f34 % 2 != 0) throw inconsistent_trace("irrational case needs odd m");
    s.f3 = s.f4 = f34 / 2;
    if (tR != p.k) throw inconsistent_trace("N* must equal k n in the irrational case");
  }

  long long root1 = 0;
  if (d1 == 0) {
    s.split12 = false;
    s.mu1 = Eigenvalue::integer(0);
    s.f1 = f12;
    s.f2 = 0;
    if (p.loops != tR) throw inconsistent_trace("L must equal N*/n when k = lambda1");
  } else if (is_perfect_square(d1, &root1)) {
    s.mu1 = Eigenvalue::integer(root1);
    long long num = p.loops - tR;
    if (num % root1 != 0) throw inconsistent_trace("loop trace does not split");
    long long diff = num / root1;
    if ((f12 + diff) % 2 != 0 || f12 + diff < 0 || diff > f12)
      throw inconsistent_trace("non-integral f1/f2");
    s.f1 = (f12 + diff) / 2;
    s.f2 = f12 - s.f1;
  } else {
    s.mu1 = Eigenvalue::root(d1, 1);
    if (f12 % 2 != 0) throw inconsistent_trace("irrational case needs even (m-1)n");
    s.f1 = s.f2 = f12 / 2;
    if (p.n_star != p.n * p.loops)
      throw inconsistent_trace("N* must equal n L in the irrational case");
  }
  return s;
}

// (v, v-k, v-2k+lambda1, v-2k+lambda2, m, n); an involution on parameter
// tuples. L and N* transform as v-L and m n^2 - N*.
inline Params complement_params(const Params& p) {
  Params c = p;
  c.k = p.v - p.k;
  c.lambda1 = p.v - 2 * p.k + p.lambda1;
  c.lambda2 = p.v - 2 * p.k + p.lambda2;
  c.loops = p.v - p.loops;
  c.n_star = p.m * p.n * p.n - p.n_star;
  if (c.k < 0 || c.lambda1 < 0 || c.lambda2 < 0)
    throw negative_parameter("complement tuple has a negative entry");
  return c;
}

// Proper-parameter feasibility conditions; violations are reported by name.
inline std::vector<std::string> parameter_violations(const Params& p) {
  std::vector<std::string> bad;
  if (p.v != p.m * p.n) bad.push_back("v = m n");
  if (p.k * (p.k - 1) != (p.n - 1) * p.lambda1 + (p.m - 1) * p.n * p.lambda2)
    bad.push_back("k(k-1) = (n-1)l1 + (m-1)n l2");
  if (p.proper) {
    if (p.m < 2 || p.n < 2) bad.push_back("m, n >= 2");
    if (p.lambda1 == p.lambda2) bad.push_back("l1 != l2");
    if (p.k < 2 || p.k > p.v - 2) bad.push_back("2 <= k <= v-2");
    if (p.lambda1 < 0 || p.lambda1 > p.k) bad.push_back("0 <= l1 <= k");
    if (p.lambda2 < 0 || p.lambda2 > p.k - 1) bad.push_back("0 <= l2 <= k-1");
    if (p.lambda2 > (p.k * p.k) / p.v) bad.push_back("l2 <= floor(k^2/v)");
  }
  return bad;
}

// ---------------------------------------------------------------------------
// Matrix identities

// A^2 = (k-l1) I + l2 J + (l1-l2) K, checked entrywise with popcounts.
inline bool verify_a_squared_identity(const LoopedGraph& g, const Partition& p,
                                      const Params& pr) {
  std::vector<long long> cls = p.class_of(g.v());
  for (long long x = 0; x < g.v(); ++x) {
    if (g.degree(x) != pr.k) return false;  // diagonal entry of A^2 is deg(x)
    for (long long y = x + 1; y < g.v(); ++y) {
      long long want = pr.lambda2 + (cls[x] == cls[y] ? pr.lambda1 - pr.lambda2 : 0);
      if (g.common_neighbours(x, y) != want) return false;
    }
  }
  return true;
}

// Class totals N_ij = |{(u,w) in X_i x X_j : u ~ w}|.
inline std::vector<std::vector<long long>> class_totals(const LoopedGraph& g, const Partition& p) {
  size_t m = p.classes.size();
  std::vector<std::vector<long long>> nm(m, std::vector<long long>(m, 0));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i; j < m; ++j) {
      long long t = 0;
      for (long long u : p.classes[i])
        for (long long w : p.classes[j]) t += g.at(u, w);
      nm[i][j] = t;
      nm[j][i] = t;
    }
  return nm;
}

// R^2 = (k^2 - l2 v) I + l2 n J for R = N/n, checked exactly over the
// rationals by clearing denominators: N^2 = n^2 ((k^2-l2 v) I + l2 n J).
inline bool verify_quotient_identity(const LoopedGraph& g, const Partition& p, const Params& pr) {
  auto nm = class_totals(g, p);
  long long m = static_cast<long long>(nm.size());
  long long n = pr.n;
  long long diag = pr.k * pr.k - pr.lambda2 * pr.v;
  long long off = pr.lambda2 * n;
  for (long long i = 0; i < m; ++i)
    for (long long j = 0; j < m; ++j) {
      long long acc = 0;
      for (long long l = 0; l < m; ++l) acc += nm[i][l] * nm[l][j];
      long long want = n * n * (off * n + (i == j ? diag : 0));
      if (acc != want) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Dual Seidel switching

inline void require_involutory_automorphism(const LoopedGraph& g,
                                            const std::vector<long long>& theta) {
  if (!is_permutation(theta, g.v())) throw not_automorphism("theta is not a vertex permutation");
  for (long long x = 0; x < g.v(); ++x)
    if (theta[theta[x]] != x) throw not_involution("theta squared is not the identity");
  if (!is_automorphism(g, theta)) throw not_automorphism("theta does not preserve adjacency");
}

// Adjacency of the switched graph: x ~ y iff theta(x) ~ y in g. For an
// involutory automorphism theta the result is symmetric.
inline LoopedGraph dual_seidel_switch(const LoopedGraph& g, const std::vector<long long>& theta) {
  require_involutory_automorphism(g, theta);
  LoopedGraph out(g.v());
  for (long long x = 0; x < g.v(); ++x)
    for (long long y = 0; y < g.v(); ++y)
      if (g.at(theta[x], y) && x <= y) out.set_edge(x, y);
  for (long long x = 0; x < g.v(); ++x)
    for (long long y = x; y < g.v(); ++y)
      if (out.at(x, y) != g.at(theta[x], y)) throw error("switched matrix is not symmetric");
  return out;
}

// N = loops of g; A1 = vertices without loops moved onto a neighbour;
// A2 = vertices with loops moved off their neighbourhood. The switched graph
// has N + A1 - A2 loops.
struct SwitchCounts {
  long long N = 0, A1 = 0, A2 = 0;
  long long switched_loops() const { return N + A1 - A2; }
};

inline SwitchCounts switch_counts(const LoopedGraph& g, const std::vector<long long>& theta) {
  SwitchCounts c;
  c.N = g.loop_count();
  for (long long x = 0; x < g.v(); ++x) {
    bool adj = g.at(theta[x], x);
    if (!g.has_loop(x) && adj) ++c.A1;
    if (g.has_loop(x) && !adj) ++c.A2;
  }
  return c;
}

// Partition carried along a vertex permutation.
inline Partition image_partition(const Partition& p, const std::vector<long long>& theta) {
  Partition out;
  for (const auto& cls : p.classes) {
    std::vector<long long> c;
    c.reserve(cls.size());
    for (long long x : cls) c.push_back(theta[x]);
    std::sort(c.begin(), c.end());
    out.classes.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Canonical partition

struct CanonicalPartition {
  enum class Status { found, improper, not_lddg };
  Status status = Status::not_lddg;
  Partition partition;
  Params params;
};

// Recover the canonical partition of a proper LDDG from the two-valued
// distribution of common-neighbour counts. Both assignments of the two
// values to (lambda1, lambda2) are tried; the verification pass rejects the
// wrong one.
inline CanonicalPartition find_canonical_partition(const LoopedGraph& g) {
  long long v = g.v();
  if (v == 0) throw error("empty graph");
  long long k = g.degree(0);
  for (long long x = 1; x < v; ++x)
    if (g.degree(x) != k) throw not_regular("vertex degrees differ");

  std::vector<long long> values;
  for (long long x = 0; x < v && values.size() <= 2; ++x)
    for (long long y = x + 1; y < v && values.size() <= 2; ++y) {
      long long c = g.common_neighbours(x, y);
      if (std::find(values.begin(), values.end(), c) == values.end()) values.push_back(c);
    }
  if (values.size() <= 1) return CanonicalPartition{CanonicalPartition::Status::improper, {}, {}};
  if (values.size() > 2) return CanonicalPartition{CanonicalPartition::Status::not_lddg, {}, {}};

  for (long long same : values) {
    Partition p;
    std::vector<long long> cls(v, -1);
    bool ok = true;
    for (long long x = 0; x < v && ok; ++x) {
      if (cls[x] != -1) continue;
      std::vector<long long> c{x};
      cls[x] = static_cast<long long>(p.classes.size());
      for (long long y = x + 1; y < v; ++y) {
        if (g.common_neighbours(x, y) != same) continue;
        if (cls[y] != -1) {
          ok = false;
          break;
        }
        cls[y] = cls[x];
        c.push_back(y);
      }
      p.classes.push_back(std::move(c));
    }
    if (!ok || !p.equal_class_sizes() || p.classes.size() < 2 || p.classes[0].size() < 2) continue;
    VerifyResult r = verify_lddg(g, p);
    if (verified(r) && params_of(r).proper)
      return CanonicalPartition{CanonicalPartition::Status::found, std::move(p), params_of(r)};
  }
  return CanonicalPartition{CanonicalPartition::Status::not_lddg, {}, {}};
}

// ---------------------------------------------------------------------------
// lambda1 = k recognizer

struct SymmetricDesignStructure {
  long long m = 0, l1 = 0, l2 = 0;
  std::vector<std::vector<int>> incidence;  // m x m, symmetric
  long long fixed = 0;                      // diagonal ones
};

struct TrivialUnionStructure {
  long long m1 = 0, m2 = 0, n = 0;
};

using Lambda1Recognition = std::variant<SymmetricDesignStructure, TrivialUnionStructure>;

// With lambda1 = k all vertices of a class share one neighbourhood, which is
// a union of classes; the class-level incidence structure is a symmetric
// design (l2 > 0) or a matching of classes (l2 = 0, a disjoint union of
// loop-completed cliques and complete bipartite graphs).
inline Lambda1Recognition recognize_lambda1_equals_k(const LoopedGraph& g, const Partition& p,
                                                     const Params& pr) {
  if (pr.lambda1 != pr.k) throw not_applicable("lambda1 != k");
  std::vector<long long> cls = p.class_of(g.v());
  long long m = pr.m, n = pr.n;
  if (pr.k % n != 0) throw error("valency is not a multiple of the class size");
  long long l1 = pr.k / n;
  if (pr.lambda2 % n != 0) throw error("lambda2 is not a multiple of the class size");
  long long l2 = pr.lambda2 / n;

  std::vector<std::vector<int>> inc(m, std::vector<int>(m, 0));
  for (long long i = 0; i < m; ++i) {
    long long u0 = p.classes[i][0];
    for (long long u : p.classes[i])
      for (long long x = 0; x < g.v(); ++x)
        if (g.at(u, x) != g.at(u0, x)) throw error("class members have different neighbourhoods");
    for (long long j = 0; j < m; ++j) {
      bool all = true, any = false;
      for (long long w : p.classes[j]) {
        any = any || g.at(u0, w);
        all = all && g.at(u0, w);
      }
      if (any != all) throw error("neighbourhood is not a union of classes");
      inc[i][j] = all ? 1 : 0;
    }
  }
  for (long long i = 0; i < m; ++i) {
    long long row = 0;
    for (long long j = 0; j < m; ++j) {
      row += inc[i][j];
      if (inc[i][j] != inc[j][i]) throw error("incidence is not symmetric");
    }
    if (row != l1) throw error("block sizes differ");
  }
  for (long long i = 0; i < m; ++i)
    for (long long j = i + 1; j < m; ++j) {
      long long meet = 0;
      for (long long l = 0; l < m; ++l) meet += inc[i][l] & inc[j][l];
      if (meet != l2) throw error("block intersections differ");
    }

  if (l2 > 0) {
    SymmetricDesignStructure d;
    d.m = m;
    d.l1 = l1;
    d.l2 = l2;
    d.incidence = std::move(inc);
    for (long long i = 0; i < m; ++i) d.fixed += d.incidence[i][i];
    return d;
  }
  if (l1 != 1) throw error("disjoint blocks of size > 1");
  TrivialUnionStructure t;
  t.n = n;
  for (long long i = 0; i < m; ++i)
    if (inc[i][i]) ++t.m1;
  t.m2 = (m - t.m1) / 2;
  return t;
}

// ---------------------------------------------------------------------------
// Disconnected decomposition

struct ComponentLabel {
  bool single_class = false;  // one-class component (improper piece)
  std::vector<long long> vertices;
  long long class_count = 0;
};

struct Decomposition {
  long long lambda = 0, k = 0, n = 0;
  std::vector<ComponentLabel> components;
};

// A disconnected proper LDDG has lambda2 = 0 and splits into components that
// are either a single class or a proper LDDG with lambda2 = 0 on several
// classes.
inline Decomposition decompose_disconnected(const LoopedGraph& g, const Partition& p,
                                            const Params& pr) {
  auto comps = connected_components(g);
  if (comps.size() < 2) throw error("graph is connected");
  if (!pr.proper) throw error("decomposition needs a proper LDDG");
  if (pr.lambda2 != 0) throw error("disconnected proper LDDG must have lambda2 = 0");

  std::vector<long long> cls = p.class_of(g.v());
  std::vector<long long> comp_of(g.v());
  for (size_t c = 0; c < comps.size(); ++c)
    for (long long x : comps[c]) comp_of[x] = static_cast<long long>(c);
  for (const auto& klass : p.classes)
    for (long long x : klass)
      if (comp_of[x] != comp_of[klass[0]])
        throw component_class_straddle("a class meets two components");

  Decomposition d;
  d.lambda = pr.lambda1;
  d.k = pr.k;
  d.n = pr.n;
  for (auto& comp : comps) {
    std::vector<bool> seen(p.classes.size(), false);
    long long classes_here = 0;
    for (long long x : comp)
      if (!seen[cls[x]]) {
        seen[cls[x]] = true;
        ++classes_here;
      }
    d.components.push_back(ComponentLabel{classes_here == 1, comp, classes_here});
  }
  return d;
}

}  // namespace lddg
