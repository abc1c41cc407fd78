#pragma once
// Arithmetic in small finite fields GF(q), q = p^e <= 32, via precomputed
// tables.
//
// Element encoding: an element sum_i c_i t^i (0 <= c_i < p, t a root of the
// Conway polynomial for (p,e)) is encoded as the integer sum_i c_i p^i.
// For prime fields this is the residue itself. Conway polynomials are fixed
// so that encodings are reproducible across implementations:
//
//   GF(4)  x^2 + x + 1          GF(9)  x^2 + 2x + 2
//   GF(8)  x^3 + x + 1          GF(27) x^3 + 2x + 1
//   GF(16) x^4 + x + 1          GF(25) x^2 + 4x + 2
//   GF(32) x^5 + x^2 + 1
//
// For e = 1 the Conway polynomial is x - r with r the least primitive root.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lddg {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define LDDG_DEFINE_ERROR(name)        \
  struct name : error {                \
    using error::error;                \
  };

LDDG_DEFINE_ERROR(non_prime)
LDDG_DEFINE_ERROR(field_too_large)
LDDG_DEFINE_ERROR(conjugation_undefined)

// Field element: index in [0, q) under the encoding above. 0 and 1 are the
// additive and multiplicative identities of every table.
struct Fe {
  std::uint8_t v = 0;

  Fe() = default;
  constexpr explicit Fe(int x) : v(static_cast<std::uint8_t>(x)) {}
  friend constexpr bool operator==(Fe a, Fe b) { return a.v == b.v; }
  friend constexpr bool operator!=(Fe a, Fe b) { return a.v != b.v; }
  friend constexpr bool operator<(Fe a, Fe b) { return a.v < b.v; }
};

class GF {
 public:
  GF(int p, int e) : p_(p), e_(e) {
    if (p < 2 || !is_prime(p)) throw non_prime("p = " + std::to_string(p) + " is not prime");
    if (e < 1) throw error("e must be >= 1");
    long long qq = 1;
    for (int i = 0; i < e; ++i) qq *= p;
    if (qq > 32) throw field_too_large("p^e = " + std::to_string(qq) + " exceeds 32");
    q_ = static_cast<int>(qq);
    build_tables();
  }

  int q() const { return q_; }
  int p() const { return p_; }
  int e() const { return e_; }

  Fe zero() const { return Fe(0); }
  Fe one() const { return Fe(1); }
  // A generator of the multiplicative group (the Conway root t; the least
  // primitive root when e = 1).
  Fe gen() const { return gen_; }

  Fe add(Fe a, Fe b) const { return add_[a.v * q_ + b.v]; }
  Fe mul(Fe a, Fe b) const { return mul_[a.v * q_ + b.v]; }
  Fe neg(Fe a) const { return neg_[a.v]; }
  Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }
  Fe inv(Fe a) const {
    if (a.v == 0) throw error("inverse of zero");
    return inv_[a.v];
  }
  // Frobenius x -> x^p.
  Fe frob(Fe a) const { return frob_[a.v]; }

  bool has_conjugation() const { return e_ % 2 == 0; }
  // sqrt(q), defined when e is even.
  int r() const {
    if (!has_conjugation()) throw conjugation_undefined("q = " + std::to_string(q_) + " is not a square");
    int rr = 1;
    for (int i = 0; i < e_ / 2; ++i) rr *= p_;
    return rr;
  }
  // The involution x -> x^r with r = sqrt(q). Identity on the subfield GF(r).
  Fe conj(Fe a) const {
    if (!has_conjugation()) throw conjugation_undefined("q = " + std::to_string(q_) + " is not a square");
    Fe x = a;
    for (int i = 0; i < e_ / 2; ++i) x = frob(x);
    return x;
  }

  Fe pow(Fe a, long long n) const {
    Fe acc = one();
    for (long long i = 0; i < n; ++i) acc = mul(acc, a);
    return acc;
  }

  // Monic primitive polynomial used for the encoding, itself encoded as
  // sum_i coeff_i p^i (degree-e coefficient included).
  long long primitive_poly() const { return poly_code_; }

  // Shared immutable table for GF(q); q must be a prime power <= 32.
  static const GF& get(int q);

 private:
  static bool is_prime(int n) {
    for (int d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return n >= 2;
  }

  // Conway polynomial coefficients, low degree first, length e+1, monic.
  static std::vector<int> conway(int p, int e) {
    if (e == 1) {
      static const int least_primitive_root[] = {0, 0, 1, 2, 0, 2, 0, 3, 0, 0, 0, 2, 0, 2,
                                                 0, 0, 0, 3, 0, 2, 0, 0, 0, 5, 0, 0, 0, 0,
                                                 0, 2, 0, 3};
      int r = least_primitive_root[p];
      return {(p - r) % p, 1};  // x - r
    }
    if (p == 2 && e == 2) return {1, 1, 1};
    if (p == 2 && e == 3) return {1, 1, 0, 1};
    if (p == 2 && e == 4) return {1, 1, 0, 0, 1};
    if (p == 2 && e == 5) return {1, 0, 1, 0, 0, 1};
    if (p == 3 && e == 2) return {2, 2, 1};
    if (p == 3 && e == 3) return {1, 2, 0, 1};
    if (p == 5 && e == 2) return {2, 4, 1};
    throw field_too_large("no table for p^e > 32");
  }

  std::vector<int> decode(int code) const {
    std::vector<int> c(e_);
    for (int i = 0; i < e_; ++i) {
      c[i] = code % p_;
      code /= p_;
    }
    return c;
  }
  int encode(const std::vector<int>& c) const {
    int code = 0;
    for (int i = e_ - 1; i >= 0; --i) code = code * p_ + (i < (int)c.size() ? c[i] : 0);
    return code;
  }

  void build_tables() {
    std::vector<int> cp = conway(p_, e_);
    poly_code_ = 0;
    for (int i = e_; i >= 0; --i) poly_code_ = poly_code_ * p_ + cp[i];

    auto poly_mul = [&](const std::vector<int>& a, const std::vector<int>& b) {
      std::vector<int> c(a.size() + b.size() - 1, 0);
      for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
      // reduce modulo the monic Conway polynomial
      for (int d = (int)c.size() - 1; d >= e_; --d) {
        int f = c[d];
        if (f == 0) continue;
        for (int i = 0; i <= e_; ++i) {
          int pos = d - e_ + i;
          c[pos] = ((c[pos] - f * cp[i]) % p_ + p_) % p_;
        }
      }
      c.resize(e_);
      return c;
    };

    add_.assign(q_ * q_, Fe(0));
    mul_.assign(q_ * q_, Fe(0));
    neg_.assign(q_, Fe(0));
    inv_.assign(q_, Fe(0));
    frob_.assign(q_, Fe(0));

    for (int a = 0; a < q_; ++a) {
      std::vector<int> ca = decode(a);
      std::vector<int> na(e_);
      for (int i = 0; i < e_; ++i) na[i] = (p_ - ca[i]) % p_;
      neg_[a] = Fe(encode(na));
      for (int b = 0; b < q_; ++b) {
        std::vector<int> cb = decode(b);
        std::vector<int> s(e_);
        for (int i = 0; i < e_; ++i) s[i] = (ca[i] + cb[i]) % p_;
        add_[a * q_ + b] = Fe(encode(s));
        mul_[a * q_ + b] = Fe(encode(poly_mul(ca, cb)));
      }
    }
    for (int a = 1; a < q_; ++a)
      for (int b = 1; b < q_; ++b)
        if (mul_[a * q_ + b].v == 1) inv_[a] = Fe(b);
    for (int a = 0; a < q_; ++a) {
      Fe x(a);
      Fe acc = one();
      for (int i = 0; i < p_; ++i) acc = mul(acc, x);
      frob_[a] = acc;
    }

    // t itself, reduced: for e = 1 this is the primitive root.
    {
      std::vector<int> x(2, 0);
      x[1] = 1;
      std::vector<int> t = poly_mul(x, {1});
      gen_ = Fe(encode(t));
    }
    // The Conway polynomials are primitive; check the generator order anyway.
    Fe acc = one();
    for (int i = 1; i < q_ - 1; ++i) {
      acc = mul(acc, gen_);
      if (acc.v == 1) throw error("generator order check failed");
    }
  }

  int p_, e_, q_;
  long long poly_code_ = 0;
  Fe gen_;
  std::vector<Fe> add_, mul_, neg_, inv_, frob_;
};

inline const GF& GF::get(int q) {
  static std::vector<GF>* cache = [] {
    auto* v = new std::vector<GF>();
    for (int qq = 2; qq <= 32; ++qq) {
      for (int p = 2; p <= qq; ++p) {
        if (!is_prime(p)) continue;
        int e = 0;
        long long t = 1;
        while (t < qq) {
          t *= p;
          ++e;
        }
        if (t == qq) {
          v->emplace_back(p, e);
          break;
        }
      }
    }
    return v;
  }();
  for (const GF& f : *cache)
    if (f.q() == q) return f;
  throw field_too_large("GF(" + std::to_string(q) + ") unavailable (not a prime power <= 32)");
}

}  // namespace lddg
