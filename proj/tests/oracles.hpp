#pragma once

// Test-only reference computations. Nothing here calls into the library's
// arithmetic beyond the Integer type, so each oracle is an independent route.

#include "barth/rational.hpp"

#include <map>
#include <vector>

namespace oracle {

using barth::Integer;

/// Pascal's triangle up to row `rows`, built purely by addition.
inline std::vector<std::vector<Integer>> pascal(int rows) {
  std::vector<std::vector<Integer>> t(rows + 1);
  for (int a = 0; a <= rows; ++a) {
    t[a].assign(a + 1, 1);
    for (int b = 1; b < a; ++b)
      t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
  }
  return t;
}

inline Integer pascal_binom(int a, int b) {
  if (b < 0 || b > a)
    return 0;
  static const auto table = pascal(120);
  return table[a][b];
}

/// Power series in x truncated after `len` terms.
using Series = std::vector<Integer>;

inline Series series_mul(const Series& a, const Series& b, std::size_t len) {
  Series c(len, 0);
  for (std::size_t i = 0; i < a.size() && i < len; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j)
      c[i + j] += a[i] * b[j];
  return c;
}

/// (1+x)^e for any integer e. Negative powers by repeated division by (1+x):
/// dividing s by (1+x) gives q_k = s_k - q_{k-1}.
inline Series one_plus_x_pow(long e, std::size_t len) {
  Series s(len, 0);
  s[0] = 1;
  if (e >= 0) {
    for (long p = 0; p < e; ++p) {
      for (std::size_t k = len - 1; k >= 1; --k)
        s[k] += s[k - 1];
    }
    return s;
  }
  for (long p = 0; p < -e; ++p) {
    for (std::size_t k = 1; k < len; ++k)
      s[k] -= s[k - 1];
  }
  return s;
}

/// Elementary-symmetric Chern vector of O(d_1)+...+O(d_r), by expanding the
/// product of linear factors.
inline std::vector<Integer> split_chern(const std::vector<long>& degrees) {
  Series s{1};
  for (long d : degrees)
    s = series_mul(s, Series{1, d}, s.size() + 1);
  return s;
}

/// Brute-force fibre-ring arithmetic: unreduced monomials in L, D_1..D_f
/// with arbitrary exponents, multiplied naively and only reduced at the end
/// with D^e = (-L)^{e-1} D and L^n = 0.
struct RawPoly {
  int n;
  int f;
  // exponent vector: [L, D_1, ..., D_f]
  std::map<std::vector<int>, Integer> terms;

  static RawPoly var(int n, int f, int index /*0 = L, i = D_i*/) {
    RawPoly p{n, f, {}};
    std::vector<int> e(f + 1, 0);
    e[index] = 1;
    p.terms[e] = 1;
    return p;
  }
  static RawPoly constant(int n, int f, const Integer& c) {
    RawPoly p{n, f, {}};
    p.terms[std::vector<int>(f + 1, 0)] = c;
    return p;
  }

  RawPoly operator+(const RawPoly& o) const {
    RawPoly p = *this;
    for (const auto& [e, c] : o.terms)
      p.terms[e] += c;
    return p;
  }
  RawPoly operator*(const RawPoly& o) const {
    RawPoly p{n, f, {}};
    for (const auto& [e1, c1] : terms)
      for (const auto& [e2, c2] : o.terms) {
        std::vector<int> e(e1.size());
        for (std::size_t i = 0; i < e.size(); ++i)
          e[i] = e1[i] + e2[i];
        p.terms[e] += c1 * c2;
      }
    return p;
  }
  RawPoly scaled(const Integer& s) const {
    RawPoly p = *this;
    for (auto& [e, c] : p.terms)
      c *= s;
    return p;
  }

  /// Reduced coefficients keyed by (L exponent, D mask).
  std::map<std::pair<int, unsigned>, Integer> reduce() const {
    std::map<std::pair<int, unsigned>, Integer> out;
    for (const auto& [e, c] : terms) {
      int l = e[0];
      unsigned mask = 0;
      int sign = 1;
      for (int i = 1; i <= f; ++i) {
        if (e[i] == 0)
          continue;
        mask |= 1u << (i - 1);
        l += e[i] - 1;
        if ((e[i] - 1) % 2)
          sign = -sign;
      }
      if (l < n)
        out[{l, mask}] += sign * c;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
  }
};

} // namespace oracle
