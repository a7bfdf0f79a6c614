#pragma once

// Dense matrices over an arbitrary commutative ring R (anything with R(int),
// +=, -, *, ==), plus the Samuelson-Berkowitz characteristic polynomial.
// Berkowitz is division-free, so the same code runs over Z, Q, Z[q] and the
// multivariate distance ring.

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace cospec {

template <class R>
struct RingMatrix {
  int n = 0;
  std::vector<R> a;  // row-major, n*n

  RingMatrix() = default;
  explicit RingMatrix(int size) : n(size), a(static_cast<size_t>(size) * size, R(0)) {}

  R& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const R& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  static RingMatrix identity(int size) {
    RingMatrix m(size);
    for (int i = 0; i < size; ++i) m.at(i, i) = R(1);
    return m;
  }
  static RingMatrix all_ones(int size) {
    RingMatrix m(size);
    for (auto& v : m.a) v = R(1);
    return m;
  }
};

template <class R>
RingMatrix<R> mat_mul(const RingMatrix<R>& x, const RingMatrix<R>& y) {
  if (x.n != y.n) throw std::invalid_argument("mat_mul: size mismatch");
  RingMatrix<R> r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      const R& v = x.at(i, k);
      if (v == R(0)) continue;
      for (int j = 0; j < x.n; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

template <class R>
bool mat_equal(const RingMatrix<R>& x, const RingMatrix<R>& y) {
  return x.n == y.n && x.a == y.a;
}

template <class R>
RingMatrix<R> transpose(const RingMatrix<R>& x) {
  RingMatrix<R> r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

// Coefficients of det(xI - M), ascending by degree, so the result is monic of
// degree n.  Berkowitz iterates over leading principal submatrices: with
// p = charpoly(M_{k-1}) and the bordering row R, column S, corner a,
//
//   charpoly(M_k) = (x - a)*p - sum_i x^i * sum_m p[i+1+m] * (R M_{k-1}^m S)
//
// which follows from expanding det(xI - M_k) with the adjugate identity
// adj(xI - B) = sum_i x^i sum_j p[i+j+1] B^j.  No divisions occur.
template <class R>
std::vector<R> charpoly_berkowitz(const RingMatrix<R>& m) {
  const int n = m.n;
  if (n == 0) return {R(1)};
  std::vector<R> p{-m.at(0, 0), R(1)};
  std::vector<R> v, w, nv;
  for (int k = 2; k <= n; ++k) {
    // w[t] = R_row * B^t * S_col for the (k-1)-sized leading block.
    v.assign(k - 1, R(0));
    for (int i = 0; i < k - 1; ++i) v[i] = m.at(i, k - 1);
    w.assign(k - 1, R(0));
    for (int t = 0; t < k - 1; ++t) {
      if (t > 0) {
        nv.assign(k - 1, R(0));
        for (int i = 0; i < k - 1; ++i)
          for (int j = 0; j < k - 1; ++j) nv[i] += m.at(i, j) * v[j];
        v.swap(nv);
      }
      for (int i = 0; i < k - 1; ++i) w[t] += m.at(k - 1, i) * v[i];
    }
    std::vector<R> np(k + 1, R(0));
    const R& corner = m.at(k - 1, k - 1);
    for (int i = 0; i <= k; ++i) {
      if (i > 0) np[i] += p[i - 1];
      if (i < k) np[i] -= corner * p[i];
    }
    for (int i = 0; i <= k - 2; ++i)
      for (int t = 0; t + i <= k - 2; ++t) np[i] -= p[i + 1 + t] * w[t];
    p = std::move(np);
  }
  return p;
}

// Row rank over Q by fraction-full Gaussian elimination; exact.
int rank_rational(RingMatrix<mpq_class> m);

// Scale + conjugation helpers used by certificates (S * M * S etc.) live with
// the callers; only generic pieces sit here.

}  // namespace cospec
