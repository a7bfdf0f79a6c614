#pragma once

// Exact polynomial arithmetic over Z: dense univariate polynomials (UniPoly,
// variable "q" by convention) and polynomials in x whose coefficients are
// UniPoly (BivarPoly).  Everything is exact; no floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cospec {

// Coefficients ascending by degree, always trimmed: zero poly has an empty
// vector and degree() == -1.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(long c) { if (c != 0) c_.assign(1, mpz_class(c)); }
  explicit UniPoly(const mpz_class& c) { if (c != 0) c_.assign(1, c); }

  static UniPoly monomial(const mpz_class& c, int deg);
  static UniPoly from_coeffs(std::vector<mpz_class> ascending);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  // Coefficient of q^k; zero outside the stored range.
  const mpz_class& coeff(int k) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& leading() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { a += b; return a; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { a -= b; return a; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly& operator*=(const UniPoly& o) { *this = *this * o; return *this; }
  UniPoly& operator*=(const mpz_class& s);
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  mpz_class eval(const mpz_class& v) const;
  mpq_class eval(const mpq_class& v) const;

  // gcd of all coefficients (nonnegative); 0 for the zero polynomial.
  mpz_class content() const;
  UniPoly primitive_part() const;  // content divided out, leading coeff > 0

  // Canonical text form, monomials by ascending degree: "1 - q^2", "- 3 + 2*q".
  std::string str(const std::string& var = "q") const;

 private:
  std::vector<mpz_class> c_;
  void trim();
};

// Primitive gcd with positive leading coefficient times gcd of contents;
// computed with a primitive pseudo-remainder sequence (division-free in Q).
UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);

// All rational roots of a nonzero polynomial, ascending.  Uses the rational
// root theorem; divisor sets come from trial division plus Pollard rho.
std::vector<mpq_class> rational_roots(const UniPoly& f);

// Prime factorisation of |n| (trial division up to 10^5, then Pollard rho
// with Miller-Rabin primality); exposed because tests pin it down.
std::vector<std::pair<mpz_class, int>> factor_integer(const mpz_class& n);

// Polynomial in x over Z[q].  Coefficient list ascending in x-degree.
class BivarPoly {
 public:
  BivarPoly() = default;
  BivarPoly(long c) { if (c != 0) c_.assign(1, UniPoly(c)); }
  explicit BivarPoly(UniPoly c) { if (!c.is_zero()) c_.assign(1, std::move(c)); }

  static BivarPoly from_xcoeffs(std::vector<UniPoly> ascending);
  // c * q^qdeg * x^xdeg
  static BivarPoly term(const mpz_class& c, int qdeg, int xdeg);

  int degree_x() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const UniPoly& coeff_x(int k) const;  // zero outside range
  const std::vector<UniPoly>& xcoeffs() const { return c_; }

  BivarPoly operator-() const;
  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { a += b; return a; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { a -= b; return a; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);
  BivarPoly& operator*=(const BivarPoly& o) { *this = *this * o; return *this; }
  bool operator==(const BivarPoly& o) const { return c_ == o.c_; }

  // Substitute a rational value for q; result is the x-coefficient list over Q.
  std::vector<mpq_class> eval_q(const mpq_class& q) const;
  mpq_class eval(const mpq_class& x, const mpq_class& q) const;

  // Canonical text form: x-powers descending, each x-coefficient splayed into
  // monomials by ascending q-degree, e.g. "x^2 - 2*x + 1 - q^2".
  std::string str() const;
  static std::optional<BivarPoly> parse(const std::string& s);

 private:
  std::vector<UniPoly> c_;
  void trim();
};

// Descending-degree rendering for polynomials over Q (e.g. a charpoly after
// substituting a rational q): "x^3 - 3/4*x + 1".
std::string ratpoly_str(const std::vector<mpq_class>& ascending,
                        const std::string& var = "x");

}  // namespace cospec
