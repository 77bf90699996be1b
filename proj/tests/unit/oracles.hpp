// Copyright 2026 The nucc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Independent reference implementations used as test oracles. Nothing here
// calls into the library's algebra: matrices are built from letters, ranks
// from plain Gaussian elimination over GF(2).

#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using C = std::complex<double>;
using Matrix = std::vector<C>;

inline std::size_t dim(const Matrix& m) {
  std::size_t d = 1;
  while (d * d < m.size()) ++d;
  return d;
}

inline Matrix mul(const Matrix& a, const Matrix& b) {
  const std::size_t d = dim(a);
  Matrix c(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) c[i * d + j] += a[i * d + k] * b[k * d + j];
  return c;
}

inline Matrix dagger(const Matrix& a) {
  const std::size_t d = dim(a);
  Matrix c(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c[j * d + i] = std::conj(a[i * d + j]);
  return c;
}

inline Matrix scale(Matrix a, C s) {
  for (auto& v : a) v *= s;
  return a;
}

inline double max_diff(const Matrix& a, const Matrix& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline Matrix letter_matrix(char l) {
  const C i(0, 1);
  switch (l) {
    case 'X': return {0, 1, 1, 0};
    case 'Y': return {0, -i, i, 0};
    case 'Z': return {1, 0, 0, -1};
    default: return {1, 0, 0, 1};
  }
}

/// Tensor product with letters[0] on the least significant index bit.
inline Matrix pauli(const std::string& letters, int phase = 0) {
  const std::size_t n = letters.size();
  const std::size_t d = std::size_t{1} << n;
  Matrix m(d * d, 0.0);
  C global = std::pow(C(0, 1), phase);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      C v = global;
      for (std::size_t q = 0; q < n; ++q) {
        const Matrix l = letter_matrix(letters[q]);
        v *= l[((r >> q) & 1u) * 2 + ((c >> q) & 1u)];
      }
      m[r * d + c] = v;
    }
  }
  return m;
}

/// Phase exponent k with a = i^k b, or -1 if no such k.
inline int phase_relation(const Matrix& a, const Matrix& b) {
  for (int k = 0; k < 4; ++k) {
    if (max_diff(a, scale(b, std::pow(C(0, 1), k))) < 1e-9) return k;
  }
  return -1;
}

inline std::string random_letters(std::mt19937_64& rng, std::size_t n) {
  static const char kLetters[] = "IXYZ";
  std::string s(n, 'I');
  for (auto& c : s) c = kLetters[rng() & 3u];
  return s;
}

/// Symplectic rows (x | z) as bit vectors of length 2n.
using Row = std::vector<std::uint8_t>;

inline Row symplectic(const std::string& letters) {
  const std::size_t n = letters.size();
  Row r(2 * n, 0);
  for (std::size_t q = 0; q < n; ++q) {
    r[q] = letters[q] == 'X' || letters[q] == 'Y';
    r[n + q] = letters[q] == 'Z' || letters[q] == 'Y';
  }
  return r;
}

inline std::size_t gf2_rank(std::vector<Row> rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][c]) {
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

inline bool letters_commute(const std::string& a, const std::string& b) {
  int anti = 0;
  for (std::size_t q = 0; q < a.size(); ++q) {
    if (a[q] != 'I' && b[q] != 'I' && a[q] != b[q]) ++anti;
  }
  return anti % 2 == 0;
}

/// Strips a leading sign / i prefix.
inline std::string letters_of(const std::string& s) {
  std::size_t p = 0;
  while (p < s.size() && (s[p] == '+' || s[p] == '-' || s[p] == 'i')) ++p;
  return s.substr(p);
}

/// Minimum weight of a Pauli that commutes with every generator and lies
/// outside their span, by enumeration over weights up to max_weight.
/// Returns 0 if none is found.
inline std::size_t brute_force_distance(const std::vector<std::string>& gens, std::size_t max_weight) {
  const std::size_t n = gens[0].size();
  std::vector<Row> base;
  for (const auto& g : gens) base.push_back(symplectic(g));
  const std::size_t r0 = gf2_rank(base);
  std::vector<std::size_t> idx;
  for (std::size_t w = 1; w <= max_weight; ++w) {
    idx.assign(w, 0);
    for (std::size_t i = 0; i < w; ++i) idx[i] = i;
    while (true) {
      std::size_t total = 1;
      for (std::size_t i = 0; i < w; ++i) total *= 3;
      for (std::size_t v = 0; v < total; ++v) {
        std::string p(n, 'I');
        std::size_t t = v;
        for (std::size_t i = 0; i < w; ++i) {
          p[idx[i]] = "XYZ"[t % 3];
          t /= 3;
        }
        bool ok = true;
        for (const auto& g : gens) {
          if (!letters_commute(g, p)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        auto rows = base;
        rows.push_back(symplectic(p));
        if (gf2_rank(rows) > r0) return w;
      }
      std::size_t i = w;
      while (i > 0 && idx[i - 1] == n - w + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < w; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return 0;
}

}  // namespace oracle
