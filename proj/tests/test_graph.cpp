#include "cospec/graph.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "doctest.h"

using namespace cospec;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p_num = 1,
                   double p_den = 2) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<double>(rng() % 1000) * p_den < 1000 * p_num)
        g.add_edge(u, v);
  return g;
}

Graph shuffled(std::mt19937_64& rng, const Graph& g) {
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return apply_labeling(g, perm);
}

// Number of graphs on n unlabelled vertices by Burnside over S_n acting on
// vertex pairs: sum over cycle types of 2^(pair orbits) weighted by the
// conjugacy class size.  Completely independent of canonical_form, so it
// pins down the enumeration counts from the other side.
mpz_class burnside_graph_count(int n) {
  std::vector<int> parts;
  mpz_class total = 0;
  mpz_class nfact = 1;
  for (int i = 2; i <= n; ++i) nfact *= i;

  auto process = [&](const std::vector<int>& lambda) {
    // conjugacy class size n!/z, z = prod k^{m_k} m_k!
    std::map<int, int> mult;
    for (int k : lambda) mult[k]++;
    mpz_class z = 1;
    for (auto [k, m] : mult) {
      for (int i = 0; i < m; ++i) z *= k;
      for (int i = 2; i <= m; ++i) z *= i;
    }
    long orbits = 0;
    for (size_t i = 0; i < lambda.size(); ++i) {
      orbits += lambda[i] / 2;
      for (size_t j = i + 1; j < lambda.size(); ++j)
        orbits += std::gcd(lambda[i], lambda[j]);
    }
    mpz_class term = nfact / z;
    mpz_class pow2 = 1;
    pow2 <<= orbits;
    total += term * pow2;
  };

  // generate partitions of n, parts non-increasing
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int maxpart) -> void {
    if (rem == 0) {
      process(cur);
      return;
    }
    for (int k = std::min(rem, maxpart); k >= 1; --k) {
      cur.push_back(k);
      self(self, rem - k, k);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return total / nfact;
}

// Inverse Euler transform: from counts of all graphs to counts of connected
// ones.  b, a are 1-indexed via b[0] = count on 1 vertex.
std::vector<mpz_class> connected_from_all(const std::vector<mpz_class>& b) {
  const int n = static_cast<int>(b.size());
  std::vector<mpz_class> c(n + 1), a(n + 1);
  auto mu = [](int m) {
    int res = 1;
    for (int p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) return 0;
        res = -res;
      }
    if (m > 1) res = -res;
    return res;
  };
  for (int i = 1; i <= n; ++i) {
    c[i] = i * b[i - 1];
    for (int k = 1; k < i; ++k) c[i] -= c[k] * b[i - k - 1];
  }
  for (int i = 1; i <= n; ++i) {
    mpz_class s = 0;
    for (int d = 1; d <= i; ++d)
      if (i % d == 0) s += mu(i / d) * c[d];
    a[i] = s / i;
  }
  return {a.begin() + 1, a.end()};
}

}  // namespace

TEST_CASE("edge bookkeeping") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 1);
  CHECK(g.has_edge(1, 0));
  CHECK(g.degree(1) == 2);
  CHECK(g.edge_count() == 2);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  g.remove_edge(1, 0);
  CHECK(!g.has_edge(0, 1));
  CHECK_THROWS(g.add_edge(0, 0));
  CHECK_THROWS(g.add_edge(0, 4));
  CHECK(Graph::from_edges(3, {{0, 1}, {1, 2}}).edge_count() == 2);
}

TEST_CASE("connectivity and components") {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(3, 4);
  CHECK(!is_connected(g));
  auto comps = components(g);
  REQUIRE(comps.size() == 3);
  CHECK(component_of(g, 1) == 0b00011u);
  CHECK(component_of(g, 2) == 0b00100u);

  auto sub = induced_subgraph(g, 0b11001u);  // vertices 0,3,4
  CHECK(sub.n == 3);
  CHECK(sub.has_edge(1, 2));  // 3-4 survives, relabelled
  CHECK(sub.edge_count() == 1);

  CHECK(is_connected(Graph(1)));
  CHECK(!is_connected(Graph(2)));
}

TEST_CASE("coalescing glues at the root and appends the rest") {
  Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
  Graph tri = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  Graph glued = coalesce(path, 2, tri, 1);
  CHECK(glued.n == 5);
  // root (tri vertex 1) merged into path vertex 2; tri vertices 0,2 -> 3,4
  CHECK(glued.has_edge(2, 3));
  CHECK(glued.has_edge(2, 4));
  CHECK(glued.has_edge(3, 4));
  CHECK(glued.edge_count() == 5);
}

TEST_CASE("distance matrices and diameter") {
  Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  auto d = bfs_distances(p4);
  CHECK(d.at(0, 3) == 3);
  CHECK(d.at(1, 3) == 2);
  CHECK(d.at(2, 2) == 0);
  CHECK(diameter(d) == 3);

  Graph two(3);
  two.add_edge(0, 1);
  auto dd = bfs_distances(two);
  CHECK(dd.at(0, 2) == DistMatrix::kInf);
  CHECK(diameter(dd) == 1);  // max finite distance
}

TEST_CASE("bfs distances match Floyd-Warshall") {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 40; ++rep) {
    int n = 2 + static_cast<int>(rng() % 9);
    Graph g = random_graph(rng, n, 1, 3);
    auto d = bfs_distances(g);
    const int inf = 1 << 20;
    std::vector<std::vector<int>> fw(n, std::vector<int>(n, inf));
    for (int i = 0; i < n; ++i) fw[i][i] = 0;
    for (auto [u, v] : g.edges()) fw[u][v] = fw[v][u] = 1;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          fw[i][j] = std::min(fw[i][j], fw[i][k] + fw[k][j]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int want = fw[i][j] >= inf ? DistMatrix::kInf : fw[i][j];
        CHECK(d.at(i, j) == want);
      }
  }
}

TEST_CASE("graph6 corpus") {
  // Hand-decoded reference strings: K1, K2, K3, P3, K4, the 4-star.
  struct Entry {
    const char* g6;
    int n;
    std::vector<std::pair<int, int>> edges;
  };
  const Entry corpus[] = {
      {"@", 1, {}},
      {"A_", 2, {{0, 1}}},
      {"Bw", 3, {{0, 1}, {0, 2}, {1, 2}}},
      {"Bg", 3, {{0, 1}, {1, 2}}},
      {"C~", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
      {"D?{", 5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}},
  };
  for (const auto& e : corpus) {
    Graph g = parse_graph6(e.g6);
    CHECK(g.n == e.n);
    CHECK(g.edges() == e.edges);
    CHECK(to_graph6(g) == e.g6);
  }
}

TEST_CASE("graph6 survives the optional header and large orders") {
  Graph g = parse_graph6(">>graph6<<A_");
  CHECK(g.n == 2);
  CHECK(g.has_edge(0, 1));

  // 63 and 64 vertices need the multi-byte size prefix.
  std::mt19937_64 rng(43);
  for (int n : {63, 64}) {
    Graph big = random_graph(rng, n);
    Graph back = parse_graph6(to_graph6(big));
    CHECK(back == big);
  }

  CHECK_THROWS_AS(parse_graph6(""), std::runtime_error);
  CHECK_THROWS_AS(parse_graph6("B"), std::runtime_error);     // truncated
  CHECK_THROWS_AS(parse_graph6("A\x1f"), std::runtime_error);  // byte < 63
}

TEST_CASE("graph6 streams skip comments and blanks") {
  std::istringstream in("# two graphs\n\nA_\nBw\n");
  auto gs = read_graph6_stream(in);
  REQUIRE(gs.size() == 2);
  CHECK(gs[0].n == 2);
  CHECK(gs[1].n == 3);
}

TEST_CASE("edge list text form") {
  Graph g = parse_edge_list("3; 1 2; 2 3");
  CHECK(g.n == 3);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(to_edge_list(g) == "3; 1 2; 2 3");

  Graph commented = parse_edge_list("# path\n3; 1 2; # mid\n 2 3");
  CHECK(commented == g);

  CHECK(parse_edge_list("2;").edge_count() == 0);
  CHECK_THROWS(parse_edge_list("3; 0 1"));   // labels are 1-based
  CHECK_THROWS(parse_edge_list("3; 1 4"));
  CHECK_THROWS(parse_edge_list("3; 1 1"));
  CHECK_THROWS(parse_edge_list(""));
}

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 20000; ++it) {
    int n = 5 + static_cast<int>(rng() % 6);
    Graph g = random_graph(rng, n);
    Graph h = shuffled(rng, g);
    CHECK(canonical_form(g) == canonical_form(h));
  }
}

TEST_CASE("canonical form separates non-isomorphic graphs of one degree sequence") {
  // C6 and two triangles: both 2-regular on 6 vertices.
  Graph c6 = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  Graph tt = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(canonical_form(c6) != canonical_form(tt));
  CHECK(!are_isomorphic(c6, tt));

  // C5 relabelled is still C5, but P5 is not.
  Graph c5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  Graph c5b = apply_labeling(c5, {2, 0, 3, 1, 4});
  CHECK(are_isomorphic(c5, c5b));
  Graph p5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(!are_isomorphic(c5, p5));
}

TEST_CASE("canonical labelling realises the canonical graph") {
  std::mt19937_64 rng(47);
  for (int it = 0; it < 300; ++it) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph g = random_graph(rng, n);
    auto perm = canonical_labeling(g);
    Graph cg = canonical_graph(g);
    CHECK(apply_labeling(g, perm) == cg);
    CHECK(canonical_graph(cg) == cg);  // idempotent
    CHECK(to_graph6(cg) == canonical_graph6(g));
  }
}

TEST_CASE("canonical classes of all labelled graphs match known counts") {
  // Every labelled graph on n <= 6 vertices, deduplicated by canonical form.
  // Counts: 1, 2, 4, 11, 34, 156 overall; 1, 1, 2, 6, 21, 112 connected.
  const long want_all[] = {1, 2, 4, 11, 34, 156};
  const long want_conn[] = {1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    const int m = n * (n - 1) / 2;
    std::set<CanonicalForm> all, conn;
    for (uint64_t mask = 0; mask < (uint64_t(1) << m); ++mask) {
      Graph g(n);
      int bit = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
          if ((mask >> bit) & 1) g.add_edge(u, v);
      auto cf = canonical_form(g);
      all.insert(cf);
      if (is_connected(g)) conn.insert(cf);
    }
    CHECK(static_cast<long>(all.size()) == want_all[n - 1]);
    CHECK(static_cast<long>(conn.size()) == want_conn[n - 1]);
  }
}

TEST_CASE("enumeration matches the Burnside and Euler-transform oracles") {
  std::vector<mpz_class> all_counts;
  for (int n = 1; n <= 8; ++n) all_counts.push_back(burnside_graph_count(n));
  CHECK(all_counts[6] == 1044);
  CHECK(all_counts[7] == 12346);
  auto conn_counts = connected_from_all(all_counts);
  CHECK(conn_counts[6] == 853);
  CHECK(conn_counts[7] == 11117);

  for (int n = 1; n <= 8; ++n) {
    auto all = enumerate_all(n);
    CHECK(mpz_class(static_cast<long>(all.size())) == all_counts[n - 1]);
    long conn = 0;
    for (const auto& g : all)
      if (is_connected(g)) ++conn;
    CHECK(mpz_class(conn) == conn_counts[n - 1]);
  }

  for (int n = 1; n <= 7; ++n) {
    auto conn = enumerate_connected(n);
    CHECK(mpz_class(static_cast<long>(conn.size())) == conn_counts[n - 1]);
    // One representative per class, already canonical and sorted.
    std::set<CanonicalForm> forms;
    for (const auto& g : conn) {
      CHECK(is_connected(g));
      CHECK(canonical_graph(g) == g);
      forms.insert(canonical_form(g));
    }
    CHECK(forms.size() == conn.size());
  }

  // The two generators agree class-by-class where both apply.
  auto direct = enumerate_connected(7);
  std::set<CanonicalForm> via_all;
  for (const auto& g : enumerate_all(7))
    if (is_connected(g)) via_all.insert(canonical_form(g));
  std::set<CanonicalForm> via_direct;
  for (const auto& g : direct) via_direct.insert(canonical_form(g));
  CHECK(via_all == via_direct);
}
