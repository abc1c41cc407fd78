#pragma once
// Classification of regular looped graphs with few distinct eigenvalues.
// The count of distinct eigenvalues is the degree of the exact minimal
// polynomial of the adjacency matrix (symmetric, hence squarefree minimal
// polynomial), computed by Krylov iteration over arbitrary-precision
// integers. The shapes themselves are recognized structurally.
//
// The two-eigenvalue shapes in which isolated vertices accompany components
// of diameter one are not regular; they are admitted here anyway since they
// complete the two-eigenvalue classification.

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <string>
#include <vector>

#include "lddg/graph.hpp"
#include "lddg/verify.hpp"

namespace lddg {

struct SrgParams {
  long long v = 0, k = 0, lambda = 0, mu = 0;
};

struct Classification {
  enum class Shape {
    one_edgeless,              // one eigenvalue: no edges, no loops
    one_all_loops,             // one eigenvalue: a loop everywhere, nothing else
    two_loops_and_bare,        // loops on some vertices, none elsewhere, no edges
    two_loop_cliques_and_bare, // copies of one loop-completed clique + bare vertices
    two_edges_and_loops,       // copies of K_2 + isolated looped vertices
    two_cliques,               // copies of one K_l
    two_loop_cliques,          // copies of one loop-completed K_l
    three_srg,                 // connected strongly regular graph
    three_modified_srg,        // connected SRG with a loop at every vertex
    three_multipartite,        // complete multipartite K_{n,...,n}
    three_multipartite_loops,  // K_{n,...,n} with a loop at every vertex
    three_union_knn,           // disjoint K_{n,n}'s (>= 1) and loop-completed K_n's
    three_union_srg,           // >= 2 (modified) SRGs with lambda = mu
    unclassified
  };
  Shape shape = Shape::unclassified;
  long long eigenvalue_count = 0;
  long long l = 0;      // clique/class size where applicable
  long long parts = 0;  // multipartite part count / component counts
  long long parts2 = 0;
  SrgParams srg{};      // underlying SRG parameters where applicable
};

namespace detail {

enum class CompKind { bare, loop_vertex, complete, complete_loops, bipartite_equal, other };

struct CompShape {
  CompKind kind = CompKind::other;
  long long size = 0;
  long long half = 0;  // part size for bipartite_equal
};

inline CompShape component_shape(const LoopedGraph& g, const std::vector<long long>& comp) {
  CompShape s;
  s.size = static_cast<long long>(comp.size());
  if (s.size == 1) {
    s.kind = g.has_loop(comp[0]) ? CompKind::loop_vertex : CompKind::bare;
    return s;
  }
  bool all_pairs = true, no_loops = true, all_loops = true;
  for (long long x : comp) {
    if (g.has_loop(x))
      no_loops = false;
    else
      all_loops = false;
  }
  for (size_t i = 0; i < comp.size() && all_pairs; ++i)
    for (size_t j = i + 1; j < comp.size(); ++j)
      if (!g.at(comp[i], comp[j])) {
        all_pairs = false;
        break;
      }
  if (all_pairs && no_loops) {
    s.kind = CompKind::complete;
    return s;
  }
  if (all_pairs && all_loops) {
    s.kind = CompKind::complete_loops;
    return s;
  }
  if (no_loops && s.size % 2 == 0) {
    std::vector<long long> a, b;
    for (long long y : comp)
      (g.at(comp[0], y) ? b : a).push_back(y);
    bool bip = a.size() == b.size();
    for (size_t i = 0; i < a.size() && bip; ++i)
      for (size_t j = 0; j < a.size() && bip; ++j) {
        if (i != j && (g.at(a[i], a[j]) || g.at(b[i], b[j]))) bip = false;
        if (!g.at(a[i], b[j])) bip = false;
      }
    if (bip) {
      s.kind = CompKind::bipartite_equal;
      s.half = static_cast<long long>(a.size());
      return s;
    }
  }
  s.kind = CompKind::other;
  return s;
}

// Degree of the exact minimal polynomial of the adjacency matrix, i.e. the
// number of distinct eigenvalues. Fraction-free elimination over cpp_int;
// meant for small graphs.
inline long long min_poly_degree(const LoopedGraph& g) {
  using boost::multiprecision::cpp_int;
  size_t v = static_cast<size_t>(g.v());
  size_t dim = v * v;

  std::vector<std::vector<cpp_int>> basis;  // reduced Krylov vectors
  std::vector<size_t> pivots;

  std::vector<cpp_int> power(dim, 0);  // A^0
  for (size_t i = 0; i < v; ++i) power[i * v + i] = 1;

  for (size_t d = 0;; ++d) {
    std::vector<cpp_int> w = power;
    for (size_t b = 0; b < basis.size(); ++b) {
      if (w[pivots[b]] == 0) continue;
      cpp_int lead = basis[b][pivots[b]];
      cpp_int f = w[pivots[b]];
      for (size_t i = 0; i < dim; ++i) w[i] = w[i] * lead - basis[b][i] * f;
    }
    size_t piv = dim;
    cpp_int content = 0;
    for (size_t i = 0; i < dim; ++i) {
      if (w[i] != 0) {
        if (piv == dim) piv = i;
        content = boost::multiprecision::gcd(content, abs(w[i]));
      }
    }
    if (piv == dim) return static_cast<long long>(d);  // A^d is dependent
    if (content > 1)
      for (size_t i = 0; i < dim; ++i) w[i] /= content;
    basis.push_back(std::move(w));
    pivots.push_back(piv);

    // next power: power <- A * power
    std::vector<cpp_int> nxt(dim, 0);
    for (size_t i = 0; i < v; ++i) {
      const std::uint64_t* row = g.row(i);
      for (size_t w2 = 0; w2 < g.words(); ++w2) {
        std::uint64_t bits = row[w2];
        while (bits) {
          size_t l = w2 * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          for (size_t j = 0; j < v; ++j) nxt[i * v + j] += power[l * v + j];
        }
      }
    }
    power = std::move(nxt);
  }
}

}  // namespace detail

inline Classification classify_small_spectrum(const LoopedGraph& g) {
  using Shape = Classification::Shape;
  Classification out;
  long long v = g.v();
  if (v == 0) throw error("empty graph");

  bool any_edge = false, any_loop = false, all_loops = true;
  for (long long x = 0; x < v; ++x) {
    if (g.has_loop(x))
      any_loop = true;
    else
      all_loops = false;
    for (long long y = x + 1; y < v && !any_edge; ++y)
      if (g.at(x, y)) any_edge = true;
  }
  if (!any_edge) {
    if (!any_loop) {
      out.shape = Shape::one_edgeless;
      out.eigenvalue_count = 1;
    } else if (all_loops) {
      out.shape = Shape::one_all_loops;
      out.eigenvalue_count = 1;
    } else {
      out.shape = Shape::two_loops_and_bare;
      out.eigenvalue_count = 2;
    }
    return out;
  }

  auto comps = connected_components(g);
  std::vector<detail::CompShape> shapes;
  shapes.reserve(comps.size());
  for (const auto& c : comps) shapes.push_back(detail::component_shape(g, c));

  auto all_of_kind = [&](detail::CompKind k, long long size) {
    for (const auto& s : shapes)
      if (s.kind != k || s.size != size) return false;
    return true;
  };

  {  // mixed shapes that need not be regular
    long long lc = 0, bare = 0, k2 = 0, loopv = 0, other = 0, lsize = -1;
    bool same = true;
    for (const auto& s : shapes) {
      if (s.kind == detail::CompKind::complete_loops) {
        ++lc;
        if (lsize < 0) lsize = s.size;
        same = same && s.size == lsize;
      } else if (s.kind == detail::CompKind::bare)
        ++bare;
      else if (s.kind == detail::CompKind::complete && s.size == 2)
        ++k2;
      else if (s.kind == detail::CompKind::loop_vertex)
        ++loopv;
      else
        ++other;
    }
    if (other == 0 && lc > 0 && bare > 0 && k2 == 0 && loopv == 0 && same) {
      out.shape = Shape::two_loop_cliques_and_bare;
      out.eigenvalue_count = 2;
      out.l = lsize;
      return out;
    }
    if (other == 0 && lc == 0 && bare == 0 && k2 > 0 && loopv > 0) {
      out.shape = Shape::two_edges_and_loops;
      out.eigenvalue_count = 2;
      out.l = 2;
      return out;
    }
  }

  long long k = g.degree(0);
  for (long long x = 1; x < v; ++x)
    if (g.degree(x) != k) throw not_regular("vertex degrees differ");

  if (shapes[0].kind == detail::CompKind::complete && all_of_kind(detail::CompKind::complete, shapes[0].size)) {
    out.shape = Shape::two_cliques;
    out.eigenvalue_count = 2;
    out.l = shapes[0].size;
    out.parts = static_cast<long long>(comps.size());
    return out;
  }
  if (shapes[0].kind == detail::CompKind::complete_loops &&
      all_of_kind(detail::CompKind::complete_loops, shapes[0].size)) {
    out.shape = Shape::two_loop_cliques;
    out.eigenvalue_count = 2;
    out.l = shapes[0].size;
    out.parts = static_cast<long long>(comps.size());
    return out;
  }

  long long s = detail::min_poly_degree(g);
  out.eigenvalue_count = s;
  if (s != 3) return out;  // s <= 2 handled above; s >= 4 unclassified

  if (comps.size() == 1) {
    bool loops_all = true, loops_none = true;
    for (long long x = 0; x < v; ++x)
      (g.has_loop(x) ? loops_none : loops_all) = false;
    if (!loops_all && !loops_none) return out;
    long long lam = -1, mu = -1;
    for (long long x = 0; x < v; ++x)
      for (long long y = x + 1; y < v; ++y) {
        long long c = g.common_neighbours(x, y);
        long long& slot = g.at(x, y) ? lam : mu;
        if (slot < 0) slot = c;
        if (slot != c) return out;
      }
    // complete multipartite iff the complement is a union of equal cliques
    LoopedGraph cg = g.complement();
    auto ccomps = connected_components(cg);
    bool multi = ccomps.size() >= 2;
    long long nsize = multi ? static_cast<long long>(ccomps[0].size()) : 0;
    for (const auto& c : ccomps) {
      auto cs = detail::component_shape(cg, c);
      bool want_loops = loops_none;  // complement of loopless multipartite has loop cliques
      if (cs.size != nsize ||
          cs.kind != (want_loops ? detail::CompKind::complete_loops : detail::CompKind::complete)) {
        if (!(cs.size == 1 && nsize == 1)) multi = false;
      }
    }
    if (multi) {
      out.shape = loops_none ? Shape::three_multipartite : Shape::three_multipartite_loops;
      out.l = nsize;
      out.parts = static_cast<long long>(ccomps.size());
      return out;
    }
    if (loops_none) {
      out.shape = Shape::three_srg;
      out.srg = SrgParams{v, k, lam, mu};
    } else {
      out.shape = Shape::three_modified_srg;
      out.srg = SrgParams{v, k - 1, lam - 2, mu};  // underlying simple graph
    }
    return out;
  }

  {  // disjoint K_{n,n}'s plus loop-completed K_n's
    long long n = -1, knn = 0, kt = 0;
    bool ok = true;
    for (const auto& sh : shapes) {
      if (sh.kind == detail::CompKind::bipartite_equal) {
        ++knn;
        if (n < 0) n = sh.half;
        ok = ok && sh.half == n;
      } else if (sh.kind == detail::CompKind::complete_loops) {
        ++kt;
        if (n < 0) n = sh.size;
        ok = ok && sh.size == n;
      } else
        ok = false;
    }
    if (ok && knn >= 1) {
      out.shape = Shape::three_union_knn;
      out.l = n;
      out.parts = knn;
      out.parts2 = kt;
      return out;
    }
  }

  {  // >= 2 components, each an SRG or modified SRG with lambda = mu
    long long l = -1;
    bool ok = comps.size() >= 2;
    for (const auto& comp : comps) {
      bool loops_all = true, loops_none = true;
      for (long long x : comp) (g.has_loop(x) ? loops_none : loops_all) = false;
      if (!loops_all && !loops_none) ok = false;
      for (size_t i = 0; i < comp.size() && ok; ++i)
        for (size_t j = i + 1; j < comp.size(); ++j) {
          long long c = g.common_neighbours(comp[i], comp[j]);
          if (l < 0) l = c;
          if (c != l) {
            ok = false;
            break;
          }
        }
    }
    if (ok) {
      out.shape = Shape::three_union_srg;
      out.l = l;
      out.parts = static_cast<long long>(comps.size());
      out.srg = SrgParams{static_cast<long long>(comps[0].size()), k, l, l};
      return out;
    }
  }
  return out;
}

}  // namespace lddg
