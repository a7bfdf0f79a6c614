#pragma once

// Sparse multivariate polynomials over Z in variables t_0..t_{k-1}, used for
// the fully symbolic distance matrix (one indeterminate per distance value).
// A monomial packs its exponent vector into one 64-bit key: 5 bits per
// variable, at most 12 variables.  Key addition is monomial multiplication,
// which is why exponents are capped; callers stay far below the cap because
// per-entry degrees are at most one and matrix sizes are small.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "cospec/poly.hpp"

namespace cospec {

class MultiPoly {
 public:
  static constexpr int kMaxVars = 12;
  static constexpr int kExpBits = 5;
  static constexpr unsigned kExpCap = (1u << kExpBits) - 1;  // 31

  MultiPoly() = default;
  MultiPoly(long c);  // constant

  static MultiPoly variable(int var);                  // t_var
  static MultiPoly term(const mpz_class& c, uint64_t packed_key, int nvars);

  bool is_zero() const { return terms_.empty(); }
  int nvars() const { return nvars_; }
  size_t term_count() const { return terms_.size(); }
  const std::vector<std::pair<uint64_t, mpz_class>>& terms() const {
    return terms_;
  }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }
  // Equality is equality of term maps; the variable count is just metadata.
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  // Substitute t_k -> q^k.  Collapses the symbolic distance charpoly onto the
  // exponential one, which tests lean on heavily.
  UniPoly subst_powers() const;

  static int exponent(uint64_t key, int var) {
    return static_cast<int>((key >> (var * kExpBits)) & kExpCap);
  }

  // Deterministic text form, terms by total degree descending then packed key
  // ascending: "t_0^2 - 2*t_0*t_1 + 3".
  std::string str() const;

 private:
  // Sorted ascending by key, no zero coefficients.
  std::vector<std::pair<uint64_t, mpz_class>> terms_;
  int nvars_ = 0;
  void normalize();
};

}  // namespace cospec
