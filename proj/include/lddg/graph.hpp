#pragma once
// Undirected graphs in which selfloops are allowed. A loop contributes 1 to
// the degree (not 2), and the complement flips every entry of the adjacency
// matrix including the diagonal, so degrees sum to v pointwise.
//
// Adjacency is stored as packed 64-bit rows; common-neighbour counts are
// popcounts of row intersections.

#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "lddg/gf.hpp"

namespace lddg {

LDDG_DEFINE_ERROR(partition_mismatch)

class LoopedGraph {
 public:
  LoopedGraph() = default;
  explicit LoopedGraph(long long v)
      : v_(v), words_((static_cast<size_t>(v) + 63) / 64), bits_(words_ * v, 0) {}

  long long v() const { return v_; }
  size_t words() const { return words_; }

  bool at(long long x, long long y) const {
    return (row(x)[y >> 6] >> (y & 63)) & 1;
  }
  void set_edge(long long x, long long y, bool val = true) {
    set_bit(x, y, val);
    set_bit(y, x, val);
  }

  const std::uint64_t* row(long long x) const { return bits_.data() + x * words_; }

  long long degree(long long x) const {
    const std::uint64_t* r = row(x);
    long long d = 0;
    for (size_t w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
  }

  bool has_loop(long long x) const { return at(x, x); }

  long long loop_count() const {
    long long l = 0;
    for (long long x = 0; x < v_; ++x) l += has_loop(x);
    return l;
  }

  long long edge_entry_count() const {  // number of 1 entries of the matrix
    long long t = 0;
    for (long long x = 0; x < v_; ++x) t += degree(x);
    return t;
  }

  // Common neighbours of x and y, counting every vertex including x and y
  // themselves as candidates.
  long long common_neighbours(long long x, long long y) const {
    const std::uint64_t* a = row(x);
    const std::uint64_t* b = row(y);
    long long c = 0;
    for (size_t w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
    return c;
  }

  LoopedGraph complement() const {
    LoopedGraph g(v_);
    size_t tail = static_cast<size_t>(v_) & 63;
    std::uint64_t mask = tail ? ((std::uint64_t(1) << tail) - 1) : ~std::uint64_t(0);
    for (long long x = 0; x < v_; ++x) {
      const std::uint64_t* src = row(x);
      std::uint64_t* dst = g.bits_.data() + x * words_;
      for (size_t w = 0; w < words_; ++w) dst[w] = ~src[w];
      if (words_) dst[words_ - 1] &= mask;
    }
    return g;
  }

  LoopedGraph relabeled(const std::vector<long long>& perm) const {
    LoopedGraph g(v_);
    for (long long x = 0; x < v_; ++x)
      for (long long y = x; y < v_; ++y)
        if (at(x, y)) g.set_edge(perm[x], perm[y]);
    return g;
  }

  static LoopedGraph disjoint_union(const std::vector<LoopedGraph>& gs) {
    long long v = 0;
    for (const LoopedGraph& g : gs) v += g.v();
    LoopedGraph u(v);
    long long off = 0;
    for (const LoopedGraph& g : gs) {
      for (long long x = 0; x < g.v(); ++x)
        for (long long y = x; y < g.v(); ++y)
          if (g.at(x, y)) u.set_edge(off + x, off + y);
      off += g.v();
    }
    return u;
  }

  friend bool operator==(const LoopedGraph& a, const LoopedGraph& b) {
    return a.v_ == b.v_ && a.bits_ == b.bits_;
  }

 private:
  void set_bit(long long x, long long y, bool val) {
    std::uint64_t& w = bits_[x * words_ + (y >> 6)];
    std::uint64_t m = std::uint64_t(1) << (y & 63);
    if (val)
      w |= m;
    else
      w &= ~m;
  }

  long long v_ = 0;
  size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct Partition {
  std::vector<std::vector<long long>> classes;

  long long covered() const {
    long long t = 0;
    for (const auto& c : classes) t += static_cast<long long>(c.size());
    return t;
  }

  // class index per vertex; throws unless classes are disjoint and cover
  // [0, v).
  std::vector<long long> class_of(long long v) const {
    std::vector<long long> cls(v, -1);
    for (size_t i = 0; i < classes.size(); ++i)
      for (long long x : classes[i]) {
        if (x < 0 || x >= v) throw partition_mismatch("vertex out of range");
        if (cls[x] != -1) throw partition_mismatch("classes are not disjoint");
        cls[x] = static_cast<long long>(i);
      }
    for (long long x = 0; x < v; ++x)
      if (cls[x] == -1) throw partition_mismatch("classes do not cover the vertex set");
    return cls;
  }

  bool equal_class_sizes() const {
    for (const auto& c : classes)
      if (c.size() != classes[0].size()) return false;
    return true;
  }
};

// Number of ordered pairs (u, w) of adjacent vertices lying in one class;
// loops count once, as the pair (u, u).
inline long long n_star(const LoopedGraph& g, const Partition& p) {
  (void)p.class_of(g.v());
  long long t = 0;
  for (const auto& cls : p.classes)
    for (long long u : cls)
      for (long long w : cls) t += g.at(u, w);
  return t;
}

inline bool is_permutation(const std::vector<long long>& theta, long long v) {
  if (static_cast<long long>(theta.size()) != v) return false;
  std::vector<bool> seen(v, false);
  for (long long x : theta) {
    if (x < 0 || x >= v || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

inline bool is_automorphism(const LoopedGraph& g, const std::vector<long long>& theta) {
  if (!is_permutation(theta, g.v())) return false;
  for (long long x = 0; x < g.v(); ++x)
    for (long long y = x; y < g.v(); ++y)
      if (g.at(x, y) != g.at(theta[x], theta[y])) return false;
  return true;
}

inline std::vector<std::vector<long long>> connected_components(const LoopedGraph& g) {
  std::vector<long long> comp(g.v(), -1);
  std::vector<std::vector<long long>> out;
  for (long long s = 0; s < g.v(); ++s) {
    if (comp[s] != -1) continue;
    long long id = static_cast<long long>(out.size());
    out.emplace_back();
    std::vector<long long> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      long long x = stack.back();
      stack.pop_back();
      out[id].push_back(x);
      const std::uint64_t* r = g.row(x);
      for (size_t w = 0; w < g.words(); ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
          long long y = static_cast<long long>(w * 64 + std::countr_zero(bits));
          bits &= bits - 1;
          if (y != x && comp[y] == -1) {
            comp[y] = id;
            stack.push_back(y);
          }
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

}  // namespace lddg
