#include "cospec/families.hpp"

#include <string>
#include <vector>

#include "cospec/graph.hpp"
#include "cospec/poly.hpp"
#include "cospec/qanalysis.hpp"
#include "doctest.h"

using namespace cospec;

namespace {

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

}  // namespace

TEST_CASE("path charpoly recursion matches the direct computation") {
  for (int n = 0; n <= 12; ++n)
    CHECK(path_charpoly(n) == charpoly_q(path_graph(n)));
  CHECK_THROWS_AS(path_charpoly(-1), std::invalid_argument);
}

TEST_CASE("family names round-trip") {
  for (Family f : {Family::double_k4, Family::k6_minus_edge}) {
    Family back{};
    REQUIRE(parse_family(family_name(f), back));
    CHECK(back == f);
  }
  Family out{};
  CHECK(parse_family("double-k4", out));
  CHECK(out == Family::double_k4);
  CHECK(!parse_family("triple_k9", out));
}

TEST_CASE("family constructors produce the documented shapes") {
  for (Family f : {Family::double_k4, Family::k6_minus_edge}) {
    FamilyPair p = family_pair(f, 10);
    CHECK(p.family == f);
    CHECK(p.n == 10);
    CHECK(p.g.n == 10);
    CHECK(p.h.n == 10);
    CHECK(is_connected(p.g));
    CHECK(!is_connected(p.h));

    // H = 6-vertex gadget plus the path as a separate component
    auto comps = components(p.h);
    REQUIRE(comps.size() == 2);
    int six = __builtin_popcountll(comps[0]) == 6 ? 0 : 1;
    CHECK(__builtin_popcountll(comps[six]) == 6);
    CHECK(__builtin_popcountll(comps[1 - six]) == 4);

    FamilyPair direct = f == Family::double_k4 ? double_k4_pair(10)
                                               : k6_minus_edge_pair(10);
    CHECK(direct.g.adj == p.g.adj);
    CHECK(direct.h.adj == p.h.adj);

    CHECK_THROWS_AS(family_pair(f, 7), std::invalid_argument);
  }
}

TEST_CASE("family pairs are cospectral exactly at one half") {
  const mpq_class half(1, 2);
  for (Family f : {Family::double_k4, Family::k6_minus_edge}) {
    for (int n = 8; n <= 13; ++n) {
      FamilyPair p = family_pair(f, n);
      CHECK(cospectral_at(p.g, p.h, half));
      CHECK(!cospectral_at(p.g, p.h, mpq_class(1, 3)));
      CHECK(!cospectral_at(p.g, p.h, mpq_class(2, 5)));
      CHECK(!cospectral_all_q(p.g, p.h));

      // inside (0,1) the locus polynomial vanishes rationally only at 1/2
      QLocus loc = q_locus(p.g, p.h);
      REQUIRE(!loc.identically_zero);
      int inside = 0;
      for (const mpq_class& r : loc.roots) {
        if (r > 0 && r < 1) {
          CHECK(r == half);
          ++inside;
        }
      }
      CHECK(inside == 1);
    }
  }
}

TEST_CASE("closed form equals the directly computed charpoly") {
  for (Family f : {Family::double_k4, Family::k6_minus_edge})
    for (int n = 8; n <= 12; ++n) {
      FamilyPair p = family_pair(f, n);
      CHECK(closed_form_charpoly(f, n) == charpoly_q(p.h));
    }
}

TEST_CASE("closed form specializes correctly beyond the expansion range") {
  for (Family f : {Family::double_k4, Family::k6_minus_edge}) {
    FamilyPair p = family_pair(f, 13);
    BivarPoly cf = closed_form_charpoly(f, 13);
    for (const mpq_class& q : {mpq_class(1, 2), mpq_class(3, 4), mpq_class(-2)})
      CHECK(cf.eval_q(q) == charpoly_at(p.h, q));
  }
}
