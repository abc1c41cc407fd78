#pragma once
// Exact, floating-point-free verification that a graph's eigenvalue multiset
// equals a predicted multiset.
//
// Small graphs: the characteristic polynomial of the integer adjacency matrix
// is compared against the expansion of the predicted multiset modulo enough
// 62-bit primes that the product exceeds twice a bound on either side's
// coefficients; equality modulo that product is equality over the integers.
//
// Any size: a certified trace computation. Once A^2 = (k-l1)I + l2 J +
// (l1-l2)K has been checked entrywise, the eigenvalue squares of A and their
// multiplicities are those of the right-hand side: k^2 once, k^2 - l2 v with
// multiplicity m-1, k - l1 with multiplicity v-m (witnessed by the explicit
// eigenbasis of I/J/K). The +-sqrt splits are pinned down by the exact
// integer traces of A and A^3 = A * (A^2), and tr(A)=L, tr(AJ)=vk, tr(AK)=N*.

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "lddg/graph.hpp"
#include "lddg/verify.hpp"

namespace lddg {
namespace detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

inline u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

inline const std::vector<u64>& primes_62(size_t count) {
  static std::vector<u64> cache;
  u64 next = cache.empty() ? (u64(1) << 61) + 1 : cache.back() + 2;
  while (cache.size() < count) {
    while (!is_prime_u64(next)) next += 2;
    cache.push_back(next);
    next += 2;
  }
  return cache;
}

// Characteristic polynomial det(xI - A) mod p: similarity reduction to upper
// Hessenberg form, then the last-column expansion recurrence.
inline std::vector<u64> charpoly_mod(const LoopedGraph& g, u64 p) {
  size_t n = static_cast<size_t>(g.v());
  std::vector<std::vector<u64>> h(n, std::vector<u64>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) h[i][j] = g.at(i, j) ? 1 : 0;

  for (size_t c = 0; c + 2 < n; ++c) {
    size_t piv = c + 1;
    while (piv < n && h[piv][c] == 0) ++piv;
    if (piv == n) continue;
    if (piv != c + 1) {
      std::swap(h[piv], h[c + 1]);
      for (size_t i = 0; i < n; ++i) std::swap(h[i][piv], h[i][c + 1]);
    }
    u64 inv = powmod(h[c + 1][c], p - 2, p);
    for (size_t r = c + 2; r < n; ++r) {
      if (h[r][c] == 0) continue;
      u64 f = mulmod(h[r][c], inv, p);
      for (size_t j = 0; j < n; ++j) h[r][j] = (h[r][j] + p - mulmod(f, h[c + 1][j], p)) % p;
      for (size_t i = 0; i < n; ++i) h[i][c + 1] = (h[i][c + 1] + mulmod(f, h[i][r], p)) % p;
    }
  }

  std::vector<std::vector<u64>> cp(n + 1);
  cp[0] = {1};
  for (size_t k = 1; k <= n; ++k) {
    std::vector<u64> poly(k + 1, 0);
    // (x - h[k-1][k-1]) * cp[k-1]
    for (size_t j = 0; j < k; ++j) {
      poly[j + 1] = (poly[j + 1] + cp[k - 1][j]) % p;
      poly[j] = (poly[j] + p - mulmod(h[k - 1][k - 1] % p, cp[k - 1][j], p)) % p;
    }
    u64 sub = 1;  // product of subdiagonal entries h[j][j-1], j = i..k-1
    for (size_t i = k - 1; i >= 1; --i) {
      sub = mulmod(sub, h[i][i - 1], p);
      if (sub == 0) break;
      u64 coef = mulmod(h[i - 1][k - 1] % p, sub, p);
      if (coef == 0) continue;
      for (size_t j = 0; j < i; ++j) poly[j] = (poly[j] + p - mulmod(coef, cp[i - 1][j], p)) % p;
    }
    cp[k] = std::move(poly);
  }
  return cp[n];
}

// Expansion of prod (x - mu)^f mod p. Irrational eigenvalues must occur in
// +-pairs of equal multiplicity, contributing (x^2 - radicand)^f.
inline std::vector<u64> expand_multiset_mod(const EigenMultiset& ms, u64 p, bool* ok) {
  *ok = true;
  std::vector<u64> poly{1};
  auto mul_linear = [&](u64 root_mod) {  // multiply by (x - root_mod)
    std::vector<u64> out(poly.size() + 1, 0);
    for (size_t j = 0; j < poly.size(); ++j) {
      out[j + 1] = (out[j + 1] + poly[j]) % p;
      out[j] = (out[j] + p - mulmod(root_mod, poly[j], p)) % p;
    }
    poly = std::move(out);
  };
  auto mul_quadratic = [&](u64 rad_mod) {  // multiply by (x^2 - rad_mod)
    std::vector<u64> out(poly.size() + 2, 0);
    for (size_t j = 0; j < poly.size(); ++j) {
      out[j + 2] = (out[j + 2] + poly[j]) % p;
      out[j] = (out[j] + p - mulmod(rad_mod, poly[j], p)) % p;
    }
    poly = std::move(out);
  };

  std::map<long long, std::pair<long long, long long>> irr;  // radicand -> (plus, minus)
  for (const auto& [ev, f] : ms) {
    if (ev.rational) {
      long long t = ev.value % static_cast<long long>(p);
      u64 tm = t >= 0 ? static_cast<u64>(t) : p - static_cast<u64>(-t);
      for (long long i = 0; i < f; ++i) mul_linear(tm);
    } else {
      if (ev.sign > 0)
        irr[ev.radicand].first += f;
      else
        irr[ev.radicand].second += f;
    }
  }
  for (const auto& [rad, pm] : irr) {
    if (pm.first != pm.second) {
      *ok = false;  // not an integer polynomial
      return poly;
    }
    u64 rm = static_cast<u64>(rad % static_cast<long long>(p));
    for (long long i = 0; i < pm.first; ++i) mul_quadratic(rm);
  }
  return poly;
}

}  // namespace detail

// Literal characteristic-polynomial comparison. Exact: both sides are
// compared modulo primes whose product exceeds twice the coefficient bound
// prod_i (1 + |mu_i|)^{f_i}. Intended for graphs of modest size; cost grows
// as v^3 times the number of primes.
inline bool charpoly_equals_multiset(const LoopedGraph& g, const EigenMultiset& ms) {
  long long total = 0;
  double log2_bound = 2.0;
  for (const auto& [ev, f] : ms) {
    total += f;
    log2_bound += f * std::log2(1.0 + std::abs(ev.approx()) + 1e-9);
  }
  if (total != g.v()) return false;
  size_t count = static_cast<size_t>(log2_bound / 61.0) + 2;
  const auto& ps = detail::primes_62(count);
  for (size_t i = 0; i < count; ++i) {
    bool ok = true;
    std::vector<detail::u64> want = detail::expand_multiset_mod(ms, ps[i], &ok);
    if (!ok) return false;
    std::vector<detail::u64> have = detail::charpoly_mod(g, ps[i]);
    if (want != have) return false;
  }
  return true;
}

// Certified eigenvalue multiset of a verified LDDG. Relies only on exact
// integer computations on the graph: the entrywise A^2 identity, regularity,
// and the traces of A and A^3. Throws inconsistent_trace when the splits do
// not resolve integrally (impossible for a genuine LDDG).
inline EigenMultiset exact_eigenvalue_multiset(const LoopedGraph& g, const Partition& p,
                                               const Params& pr) {
  if (!verify_a_squared_identity(g, p, pr))
    throw inconsistent_trace("A^2 identity fails; spectrum not certifiable");

  long long d1 = pr.k - pr.lambda1;
  long long d3 = pr.k * pr.k - pr.lambda2 * pr.v;
  std::map<long long, long long> squares;  // eigenvalue square -> multiplicity
  squares[pr.k * pr.k] += 1;
  squares[d3] += pr.m - 1;
  squares[d1] += pr.v - pr.m;

  long long trace1 = pr.loops;
  long long trace3 = (pr.k - pr.lambda1) * pr.loops + pr.lambda2 * pr.v * pr.k +
                     (pr.lambda1 - pr.lambda2) * pr.n_star;

  EigenMultiset out;
  long long t1 = trace1, t3 = trace3;
  std::vector<std::pair<long long, long long>> unknown;  // (square, multiplicity)
  for (const auto& [s, mult] : squares) {
    if (s == 0) {
      out.push_back({Eigenvalue::integer(0), mult});
    } else if (s == pr.k * pr.k && mult == 1) {
      // regularity pins the all-ones eigenvector to +k
      out.push_back({Eigenvalue::integer(pr.k), 1});
      t1 -= pr.k;
      t3 -= pr.k * pr.k * pr.k;
    } else {
      unknown.push_back({s, mult});
    }
  }

  auto push_split = [&](long long s, long long mult, long long delta) {
    if ((mult + delta) % 2 != 0 || delta > mult || delta < -mult)
      throw inconsistent_trace("trace split is not integral");
    long long a = (mult + delta) / 2, b = mult - a;
    long long root = 0;
    bool sq = is_perfect_square(s, &root);
    Eigenvalue plus = sq ? Eigenvalue::integer(root) : Eigenvalue::root(s, 1);
    Eigenvalue minus = sq ? Eigenvalue::integer(-root) : Eigenvalue::root(s, -1);
    if (a) out.push_back({plus, a});
    if (b) out.push_back({minus, b});
  };

  if (unknown.empty()) {
    if (t1 != 0 || t3 != 0) throw inconsistent_trace("trace residue nonzero");
  } else if (unknown.size() == 1) {
    auto [s, mult] = unknown[0];
    long long root = 0;
    long long delta = 0;
    if (is_perfect_square(s, &root)) {
      if (t1 % root != 0) throw inconsistent_trace("trace split is not integral");
      delta = t1 / root;
      if (delta * s * root != t3) throw inconsistent_trace("cubic trace mismatch");
    } else {
      if (t1 != 0 || t3 != 0) throw inconsistent_trace("irrational split must have zero trace");
    }
    push_split(s, mult, delta);
  } else if (unknown.size() == 2) {
    auto [s1, m1] = unknown[0];
    auto [s2, m2] = unknown[1];
    // e_i = delta_i * sqrt(s_i):  e1 + e2 = t1,  s1 e1 + s2 e2 = t3
    long long den = s2 - s1;
    long long num = t3 - s1 * t1;
    if (num % den != 0) throw inconsistent_trace("trace system not integral");
    long long e2 = num / den;
    long long e1 = t1 - e2;
    auto resolve = [&](long long s, long long e) {
      long long root = 0;
      if (is_perfect_square(s, &root)) {
        if (e % root != 0) throw inconsistent_trace("trace split is not integral");
        return e / root;
      }
      if (e != 0) throw inconsistent_trace("irrational split must have zero trace");
      return 0LL;
    };
    push_split(s1, m1, resolve(s1, e1));
    push_split(s2, m2, resolve(s2, e2));
  } else {
    throw inconsistent_trace("more than two unresolved eigenvalue squares");
  }
  return canonical_multiset(std::move(out));
}

// Size cap under which the literal characteristic-polynomial cross-check is
// run in addition to the certified trace method.
inline constexpr long long kCharpolyCutoff = 150;

// Full spectral check of a verified LDDG against the closed-form spectrum.
inline bool spectrum_verified_exactly(const LoopedGraph& g, const Partition& p, const Params& pr,
                                      const Spectrum& predicted) {
  EigenMultiset want = predicted.multiset();
  EigenMultiset have = exact_eigenvalue_multiset(g, p, pr);
  if (!(want == have)) return false;
  if (g.v() <= kCharpolyCutoff && !charpoly_equals_multiset(g, want)) return false;
  return true;
}

}  // namespace lddg
