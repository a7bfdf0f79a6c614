#include "cospec/distance.hpp"

#include <random>
#include <vector>

#include "cospec/graph.hpp"
#include "cospec/matrix.hpp"
#include "cospec/multipoly.hpp"
#include "cospec/poly.hpp"
#include "doctest.h"

using namespace cospec;

namespace {

Graph random_connected(std::mt19937_64& rng, int n) {
  for (;;) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) g.add_edge(u, v);
    if (is_connected(g)) return g;
  }
}

UniPoly qpow(int k) { return UniPoly::monomial(1, k); }

}  // namespace

TEST_CASE("level decomposition recovers the distance structure") {
  Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  auto ld = level_decomposition(p4);
  CHECK(ld.n == 4);
  CHECK(ld.diam == 3);
  REQUIRE(ld.levels.size() == 4);

  // M_0 = I, and the levels tile J exactly for a connected graph.
  auto m0 = ld.level_matrix(0);
  CHECK(mat_equal(m0, RingMatrix<mpq_class>::identity(4)));
  RingMatrix<mpq_class> sum(4);
  for (int k = 0; k <= ld.diam; ++k) {
    auto mk = ld.level_matrix(k);
    for (size_t i = 0; i < sum.a.size(); ++i) sum.a[i] += mk.a[i];
  }
  CHECK(mat_equal(sum, RingMatrix<mpq_class>::all_ones(4)));
  for (uint64_t m : ld.infinite) CHECK(m == 0);

  auto d = bfs_distances(p4);
  for (int k = 0; k <= ld.diam; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(((ld.levels[k][i] >> j) & 1) == (d.at(i, j) == k ? 1u : 0u));
}

TEST_CASE("level decomposition marks cross-component pairs infinite") {
  Graph g(4);  // edge + edge
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  auto ld = level_decomposition(g);
  CHECK(ld.diam == 1);
  CHECK(ld.infinite[0] == 0b1100u);
  CHECK(ld.infinite[2] == 0b0011u);

  // Levels plus infinite pairs still tile J.
  RingMatrix<mpq_class> sum(4);
  for (int k = 0; k <= ld.diam; ++k) {
    auto mk = ld.level_matrix(k);
    for (size_t i = 0; i < sum.a.size(); ++i) sum.a[i] += mk.a[i];
  }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(sum.at(i, j) + (((ld.infinite[i] >> j) & 1) ? 1 : 0) == 1);
}

TEST_CASE("exponential distance matrix, symbolic and at a point") {
  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  auto sym = exp_distance_symbolic(p3);
  CHECK(sym.at(0, 0) == UniPoly(1));
  CHECK(sym.at(0, 1) == qpow(1));
  CHECK(sym.at(0, 2) == qpow(2));
  CHECK(sym.at(2, 0) == qpow(2));

  auto at_half = exp_distance_at(p3, mpq_class(1, 2));
  CHECK(at_half.at(0, 2) == mpq_class(1, 4));
  CHECK(at_half.at(1, 1) == 1);

  // q = 0 collapses to the identity, q = 1 to all-ones (connected case).
  CHECK(mat_equal(exp_distance_at(p3, 0), RingMatrix<mpq_class>::identity(3)));
  CHECK(mat_equal(exp_distance_at(p3, 1), RingMatrix<mpq_class>::all_ones(3)));

  // Disconnected pairs get 0, the q^infinity convention.
  Graph two(2);
  auto d2 = exp_distance_symbolic(two);
  CHECK(d2.at(0, 1).is_zero());
  CHECK(exp_distance_at(two, mpq_class(1, 2)).at(0, 1) == 0);
}

TEST_CASE("symbolic charpoly specialises to the rational one") {
  std::mt19937_64 rng(53);
  for (int rep = 0; rep < 10; ++rep) {
    int n = 2 + static_cast<int>(rng() % 5);
    Graph g = random_connected(rng, n);
    auto sym_cp = charpoly_berkowitz(exp_distance_symbolic(g));
    for (mpq_class q : {mpq_class(1, 2), mpq_class(-2), mpq_class(3, 5)}) {
      auto at_cp = charpoly_berkowitz(exp_distance_at(g, q));
      REQUIRE(sym_cp.size() == at_cp.size());
      for (size_t k = 0; k < at_cp.size(); ++k)
        CHECK(sym_cp[k].eval(q) == at_cp[k]);
    }
  }
}

TEST_CASE("charpoly of K3 and P2 in closed form") {
  // D_q(K3) = I + q(J - I) has eigenvalues 1 + 2q, 1 - q, 1 - q, so the
  // charpoly is (x - 1 - 2q)(x - 1 + q)^2.
  Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  auto cp = BivarPoly::from_xcoeffs(charpoly_berkowitz(exp_distance_symbolic(k3)));
  BivarPoly x = BivarPoly::term(1, 0, 1);
  BivarPoly q = BivarPoly::term(1, 1, 0);
  BivarPoly want = (x - BivarPoly(1) - q - q) * (x - BivarPoly(1) + q) *
                   (x - BivarPoly(1) + q);
  CHECK(cp == want);

  Graph p2 = Graph::from_edges(2, {{0, 1}});
  auto cp2 = BivarPoly::from_xcoeffs(charpoly_berkowitz(exp_distance_symbolic(p2)));
  CHECK(cp2.str() == "x^2 - 2*x + 1 - q^2");
}

TEST_CASE("generalized distance matrix uses one indeterminate per distance") {
  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  auto m = generalized_distance_symbolic(p3);
  CHECK(m.at(0, 0) == MultiPoly::variable(0));
  CHECK(m.at(0, 1) == MultiPoly::variable(1));
  CHECK(m.at(0, 2) == MultiPoly::variable(2));
  CHECK(m.at(0, 2).nvars() == 3);  // diam 2 -> t_0..t_2

  // Widening the ring embeds the same entries among more variables.
  auto wide = generalized_distance_symbolic(p3, 5);
  CHECK(wide.at(0, 2) == MultiPoly::variable(2));
  CHECK(wide.at(0, 2).nvars() == 5);
  CHECK_THROWS_AS(generalized_distance_symbolic(p3, 2), std::invalid_argument);

  Graph two(2);
  CHECK_THROWS_AS(generalized_distance_symbolic(two), std::invalid_argument);
}

TEST_CASE("substituting t_k = q^k collapses generalized onto exponential") {
  std::mt19937_64 rng(59);
  for (int rep = 0; rep < 6; ++rep) {
    int n = 2 + static_cast<int>(rng() % 4);
    Graph g = random_connected(rng, n);
    auto gen_cp = charpoly_berkowitz(generalized_distance_symbolic(g));
    auto exp_cp = charpoly_berkowitz(exp_distance_symbolic(g));
    REQUIRE(gen_cp.size() == exp_cp.size());
    for (size_t k = 0; k < gen_cp.size(); ++k)
      CHECK(gen_cp[k].subst_powers() == exp_cp[k]);
  }
}
