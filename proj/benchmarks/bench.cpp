// Microbenchmarks for the paths the survey leans on: BFS distance matrices,
// modular fingerprint charpolys, the exact rational/bivariate/multivariate
// charpolys, canonical forms, enumeration, and the switching pipeline end to
// end.  Run `cospec_bench --benchmark_filter=...` to narrow.

#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cospec/families.hpp"
#include "cospec/graph.hpp"
#include "cospec/modular.hpp"
#include "cospec/qanalysis.hpp"
#include "cospec/survey.hpp"
#include "cospec/switching.hpp"

namespace {

using namespace cospec;

// Deterministic Erdos-Renyi(1/2) resampled until connected, so every run
// benchmarks the same instance.
Graph random_connected(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1) g.add_edge(u, v);
    if (is_connected(g)) return g;
  }
}

std::string fixture(const std::string& name) {
  return std::string(COSPEC_FIXTURE_DIR "/") + name;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ModMatrix fingerprint_matrix(const Graph& g, uint64_t q, uint64_t p) {
  DistMatrix d = bfs_distances(g);
  ModMatrix m(g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (d.at(i, j) != DistMatrix::kInf)
        m.at(i, j) = powmod(q % p, static_cast<uint64_t>(d.at(i, j)), p);
  return m;
}

void BM_BfsDistances(benchmark::State& state) {
  Graph g = random_connected(static_cast<int>(state.range(0)), 12345);
  for (auto _ : state) benchmark::DoNotOptimize(bfs_distances(g));
}
BENCHMARK(BM_BfsDistances)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_ModularCharpoly(benchmark::State& state) {
  const uint64_t p = kFingerprintPrime;
  Graph g = random_connected(static_cast<int>(state.range(0)), 12345);
  ModMatrix m = fingerprint_matrix(g, 5, p);
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_mod(m, p));
}
BENCHMARK(BM_ModularCharpoly)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_RationalCharpoly(benchmark::State& state) {
  Graph g = random_connected(static_cast<int>(state.range(0)), 999);
  mpq_class half(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_at(g, half));
}
BENCHMARK(BM_RationalCharpoly)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMicrosecond);

void BM_BivariateCharpoly(benchmark::State& state) {
  Graph g = random_connected(static_cast<int>(state.range(0)), 999);
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_q(g));
}
BENCHMARK(BM_BivariateCharpoly)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_GeneralizedCospectral(benchmark::State& state) {
  Graph a = read_graph_file(fixture("pair7a.txt"));
  Graph b = read_graph_file(fixture("pair7b.txt"));
  for (auto _ : state) benchmark::DoNotOptimize(cospectral_generalized(a, b));
}
BENCHMARK(BM_GeneralizedCospectral)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  Graph g = random_connected(static_cast<int>(state.range(0)), 777);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_EnumerateConnected(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_connected(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateConnected)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_PathCharpolyClosed(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(path_charpoly(n));
}
BENCHMARK(BM_PathCharpolyClosed)->Arg(8)->Arg(12)->Arg(24)->Unit(benchmark::kMicrosecond);

void BM_PathCharpolyDirect(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Graph p(n);
  for (int v = 0; v + 1 < n; ++v) p.add_edge(v, v + 1);
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_q(p));
}
BENCHMARK(BM_PathCharpolyDirect)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_CertifySeven(benchmark::State& state) {
  Graph a = read_graph_file(fixture("pair7a.txt"));
  Graph b = read_graph_file(fixture("pair7b.txt"));
  SwitchConfig c = SwitchConfig::parse(read_text(fixture("pair7.config")));
  for (auto _ : state) benchmark::DoNotOptimize(certify_pair(a, b, c));
}
BENCHMARK(BM_CertifySeven)->Unit(benchmark::kMicrosecond);

void BM_CertifyEighteen(benchmark::State& state) {
  Graph a = read_graph_file(fixture("pair18a.txt"));
  Graph b = read_graph_file(fixture("pair18b.txt"));
  SwitchConfig c = SwitchConfig::parse(read_text(fixture("pair18.config")));
  for (auto _ : state) benchmark::DoNotOptimize(certify_pair(a, b, c));
}
BENCHMARK(BM_CertifyEighteen)->Unit(benchmark::kMillisecond);

void BM_MatchSeven(benchmark::State& state) {
  Graph a = read_graph_file(fixture("pair7a.txt"));
  Graph b = read_graph_file(fixture("pair7b.txt"));
  for (auto _ : state) benchmark::DoNotOptimize(match_construction(a, b));
}
BENCHMARK(BM_MatchSeven)->Unit(benchmark::kMillisecond);

void BM_SurveySix(benchmark::State& state) {
  static const std::vector<Graph> universe = enumerate_connected(6);
  for (auto _ : state) benchmark::DoNotOptimize(run_survey(universe));
}
BENCHMARK(BM_SurveySix)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
