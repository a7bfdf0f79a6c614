#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "cospec/graph.hpp"

namespace cospec {

namespace {

std::vector<Graph> sorted_by_canonical(std::vector<std::pair<CanonicalForm, Graph>>&& reps) {
  std::sort(reps.begin(), reps.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(reps.size());
  for (auto& [form, g] : reps) out.push_back(std::move(g));
  return out;
}

}  // namespace

std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("enumerate_connected: n must be in [1, 7]");
  // Upper-triangle pair list for mask decoding.
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const uint64_t total = uint64_t(1) << pairs.size();

  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  std::vector<std::pair<CanonicalForm, Graph>> reps;
  for (uint64_t mask = 0; mask < total; ++mask) {
    Graph g(n);
    for (size_t b = 0; b < pairs.size(); ++b)
      if ((mask >> b) & 1) g.add_edge(pairs[b].first, pairs[b].second);
    if (!is_connected(g)) continue;
    CanonicalForm f = canonical_form(g);
    if (seen.insert(f).second) reps.emplace_back(f, canonical_graph(g));
  }
  return sorted_by_canonical(std::move(reps));
}

std::vector<Graph> enumerate_all(int n) {
  if (n < 1 || n > 9)
    throw std::invalid_argument("enumerate_all: n must be in [1, 9]");
  std::vector<Graph> level{Graph(1)};
  for (int size = 2; size <= n; ++size) {
    std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
    std::vector<std::pair<CanonicalForm, Graph>> next;
    const uint64_t attach_limit = uint64_t(1) << (size - 1);
    for (const Graph& g : level) {
      Graph ext(size);
      for (int v = 0; v < size - 1; ++v) ext.adj[v] = g.adj[v];
      for (uint64_t attach = 0; attach < attach_limit; ++attach) {
        ext.adj[size - 1] = attach;
        for (int v = 0; v < size - 1; ++v) {
          uint64_t bit = uint64_t(1) << (size - 1);
          ext.adj[v] = (ext.adj[v] & ~bit) | (((attach >> v) & 1) << (size - 1));
        }
        CanonicalForm f = canonical_form(ext);
        if (seen.insert(f).second) next.emplace_back(f, canonical_graph(ext));
      }
    }
    level = sorted_by_canonical(std::move(next));
  }
  return level;
}

}  // namespace cospec
