#include "cospec/matrix.hpp"

#include <random>
#include <vector>

#include "cospec/modular.hpp"
#include "doctest.h"

using namespace cospec;

namespace {

// Fraction-free Bareiss determinant over Z: an independent check for the
// Berkowitz charpoly (det(tI - M) must match its evaluation at t).
mpz_class bareiss_det(RingMatrix<mpz_class> m) {
  const int n = m.n;
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num / prev;  // divides exactly, Bareiss invariant
      }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

mpz_class eval_at(const std::vector<mpz_class>& ascending, const mpz_class& t) {
  mpz_class acc = 0;
  for (auto it = ascending.rbegin(); it != ascending.rend(); ++it)
    acc = acc * t + *it;
  return acc;
}

RingMatrix<mpz_class> random_int_matrix(std::mt19937_64& rng, int n, int bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  RingMatrix<mpz_class> m(n);
  for (auto& v : m.a) v = d(rng);
  return m;
}

}  // namespace

TEST_CASE("matrix primitives") {
  auto id = RingMatrix<mpz_class>::identity(3);
  auto j = RingMatrix<mpz_class>::all_ones(3);
  CHECK(mat_equal(mat_mul(id, j), j));
  CHECK(mat_equal(mat_mul(j, j), [&] {
    RingMatrix<mpz_class> t(3);
    for (auto& v : t.a) v = 3;
    return t;
  }()));

  RingMatrix<mpz_class> m(2);
  m.at(0, 1) = 5;
  auto mt = transpose(m);
  CHECK(mt.at(1, 0) == 5);
  CHECK(mt.at(0, 1) == 0);
  CHECK_THROWS_AS(mat_mul(m, id), std::invalid_argument);
}

TEST_CASE("charpoly of fixed small matrices") {
  // Companion check: the 0x0 and 1x1 cases pin the conventions down.
  CHECK(charpoly_berkowitz(RingMatrix<mpz_class>(0)) ==
        std::vector<mpz_class>{1});
  RingMatrix<mpz_class> one(1);
  one.at(0, 0) = 7;
  CHECK(charpoly_berkowitz(one) == std::vector<mpz_class>{-7, 1});

  // [[2,1],[1,2]]: x^2 - 4x + 3
  RingMatrix<mpz_class> m(2);
  m.at(0, 0) = 2; m.at(0, 1) = 1; m.at(1, 0) = 1; m.at(1, 1) = 2;
  CHECK(charpoly_berkowitz(m) == std::vector<mpz_class>{3, -4, 1});
}

TEST_CASE("3x3 determinant by hand cofactors") {
  // det [[1,2,0],[2,1,2],[0,2,1]] expanded along the first row:
  //   1*(1-4) - 2*(2-0) + 0 = -3 - 4 = -7; constant charpoly coeff is -det
  // for odd n.  A second matrix with a nonzero corner keeps the cofactor
  // arithmetic honest: det [[0,2,1],[2,0,2],[1,2,0]] = 0*(0-4) - 2*(0-2)
  // + 1*(4-0) = 8, so charpoly constant term is -8.
  RingMatrix<mpz_class> a(3);
  long va[3][3] = {{1, 2, 0}, {2, 1, 2}, {0, 2, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a.at(i, j) = va[i][j];
  CHECK(bareiss_det(a) == -7);
  CHECK(charpoly_berkowitz(a)[0] == 7);

  RingMatrix<mpz_class> b(3);
  long vb[3][3] = {{0, 2, 1}, {2, 0, 2}, {1, 2, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) b.at(i, j) = vb[i][j];
  CHECK(bareiss_det(b) == 8);
  CHECK(charpoly_berkowitz(b)[0] == -8);
}

TEST_CASE("charpoly evaluations match an independent determinant") {
  std::mt19937_64 rng(23);
  for (int n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 8; ++rep) {
      auto m = random_int_matrix(rng, n, 9);
      auto cp = charpoly_berkowitz(m);
      REQUIRE(static_cast<int>(cp.size()) == n + 1);
      CHECK(cp[n] == 1);  // monic

      // trace and determinant read off the ends
      mpz_class tr = 0;
      for (int i = 0; i < n; ++i) tr += m.at(i, i);
      CHECK(cp[n - 1] == -tr);

      for (long t : {-3L, 0L, 1L, 7L}) {
        RingMatrix<mpz_class> shifted(n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            shifted.at(i, j) = (i == j ? mpz_class(t) - m.at(i, j)
                                       : mpz_class(-m.at(i, j)));
        CHECK(eval_at(cp, t) == bareiss_det(shifted));
      }
    }
  }
}

TEST_CASE("charpoly over Q handles non-integer entries") {
  RingMatrix<mpq_class> m(2);
  m.at(0, 0) = mpq_class(1, 2);
  m.at(1, 1) = mpq_class(1, 3);
  auto cp = charpoly_berkowitz(m);
  CHECK(cp == std::vector<mpq_class>{mpq_class(1, 6), mpq_class(-5, 6),
                                     mpq_class(1)});
}

TEST_CASE("modular charpoly agrees with exact arithmetic mod p") {
  const uint64_t p = kFingerprintPrime;
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 12; ++rep) {
    int n = 1 + static_cast<int>(rng() % 6);
    auto m = random_int_matrix(rng, n, 20);
    ModMatrix mm(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        mpz_class r = m.at(i, j) % p;
        if (r < 0) r += p;
        mm.at(i, j) = r.get_ui();
      }
    auto exact = charpoly_berkowitz(m);
    auto modular = charpoly_mod(mm, p);
    REQUIRE(modular.size() == exact.size());
    for (size_t k = 0; k < exact.size(); ++k) {
      mpz_class r = exact[k] % p;
      if (r < 0) r += p;
      CHECK(modular[k] == r.get_ui());
    }
  }
}

TEST_CASE("modular scalar helpers") {
  const uint64_t p = kFingerprintPrime;
  CHECK(mulmod(p - 1, p - 1, p) == 1);  // (-1)^2
  CHECK(powmod(3, p - 1, p) == 1);      // Fermat
  for (uint64_t a : {uint64_t{2}, uint64_t{12345}, p - 2}) {
    CHECK(mulmod(a, invmod(a, p), p) == 1);
  }
}

TEST_CASE("rational rank") {
  auto id = RingMatrix<mpq_class>::identity(4);
  CHECK(rank_rational(id) == 4);
  CHECK(rank_rational(RingMatrix<mpq_class>::all_ones(4)) == 1);
  CHECK(rank_rational(RingMatrix<mpq_class>(3)) == 0);

  // rank 2: third row is the sum of the first two
  RingMatrix<mpq_class> m(3);
  long v[3][3] = {{1, 2, 3}, {0, 1, 1}, {1, 3, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = v[i][j];
  CHECK(rank_rational(m) == 2);
}
