#include "cospec/modular.hpp"

#include <stdexcept>

namespace cospec {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t invmod(uint64_t a, uint64_t p) {
  if (a % p == 0) throw std::domain_error("invmod: zero");
  return powmod(a, p - 2, p);
}

namespace {

inline uint64_t addm(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;  // both < p < 2^61, no overflow
  return s >= p ? s - p : s;
}

inline uint64_t subm(uint64_t a, uint64_t b, uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

// Similarity-transform M to upper Hessenberg form in place.
void hessenberg(ModMatrix& m, uint64_t p) {
  const int n = m.n;
  for (int col = 0; col + 2 < n; ++col) {
    int piv = -1;
    for (int r = col + 1; r < n; ++r)
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != col + 1) {
      for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col + 1, j));
      for (int i = 0; i < n; ++i) std::swap(m.at(i, piv), m.at(i, col + 1));
    }
    uint64_t inv = invmod(m.at(col + 1, col), p);
    for (int row = col + 2; row < n; ++row) {
      uint64_t f = mulmod(m.at(row, col), inv, p);
      if (f == 0) continue;
      for (int j = col; j < n; ++j)
        m.at(row, j) = subm(m.at(row, j), mulmod(f, m.at(col + 1, j), p), p);
      for (int i = 0; i < n; ++i)
        m.at(i, col + 1) = addm(m.at(i, col + 1), mulmod(f, m.at(i, row), p), p);
    }
  }
}

}  // namespace

std::vector<uint64_t> charpoly_mod(ModMatrix m, uint64_t p) {
  const int n = m.n;
  for (auto& v : m.a) v %= p;
  hessenberg(m, p);

  // d_k = (x - h_kk) d_{k-1} - sum_i h_{i,k-1} (prod of subdiagonals) d_i,
  // expanding det(xI - H) along the last column of each leading block.
  std::vector<std::vector<uint64_t>> d(n + 1);
  d[0] = {1 % p};
  for (int k = 1; k <= n; ++k) {
    d[k].assign(k + 1, 0);
    uint64_t h = m.at(k - 1, k - 1);
    for (int i = 0; i < k; ++i) {
      d[k][i + 1] = addm(d[k][i + 1], d[k - 1][i], p);
      d[k][i] = subm(d[k][i], mulmod(h, d[k - 1][i], p), p);
    }
    uint64_t prod = 1 % p;
    for (int i = k - 2; i >= 0; --i) {
      prod = mulmod(prod, m.at(i + 1, i), p);
      if (prod == 0) break;
      uint64_t coef = mulmod(m.at(i, k - 1), prod, p);
      if (coef == 0) continue;
      for (int t = 0; t <= i; ++t)
        d[k][t] = subm(d[k][t], mulmod(coef, d[i][t], p), p);
    }
  }
  return d[n];
}

}  // namespace cospec
