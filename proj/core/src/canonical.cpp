#include <algorithm>
#include <map>
#include <stdexcept>

#include "cospec/graph.hpp"

// Canonical labelling for n <= 16: stable colour refinement seeded with
// degree + distance profiles, then backtracking over colour-preserving
// placements keeping the lexicographically largest adjacency bit string.
// Refinement keys are label-independent, so the class order is canonical and
// restricting the search to colour-preserving permutations is sound.

namespace cospec {

namespace {

constexpr int kMaxCanonN = 16;

struct CanonWork {
  int n;
  uint32_t adj[kMaxCanonN];       // local 16-bit-wide adjacency
  int cls_of_pos[kMaxCanonN];     // colour class expected at each position
  std::vector<std::vector<int>> class_members;

  int placed[kMaxCanonN];
  uint32_t best_bits[kMaxCanonN];  // per-level row bits of the best string
  int best_perm[kMaxCanonN];
  bool have_best = false;
  bool used[kMaxCanonN] = {false};

  void search(int p);
};

// Invariant: on entering search(p) with have_best set, best_bits[0..p-1]
// equals the row bits of the current path, so per-level comparison against
// best_bits is exactly lexicographic comparison with the best full string.
// A strict improvement at this level is committed immediately (every prefix
// is completable, since each position always has an unused class member) and
// the now-meaningless deeper levels are zeroed until a leaf rewrites them.
void CanonWork::search(int p) {
  if (p == n) {
    std::copy(placed, placed + n, best_perm);
    have_best = true;
    return;
  }
  // Candidates from the class owning this position, largest row bits first so
  // the maximum is locked in early and pruning bites.
  auto& members = class_members[cls_of_pos[p]];
  std::pair<uint32_t, int> cand[kMaxCanonN];
  int nc = 0;
  for (int v : members) {
    if (used[v]) continue;
    uint32_t bits = 0;
    for (int t = 0; t < p; ++t)
      bits |= ((adj[v] >> placed[t]) & 1u) << (p - 1 - t);
    cand[nc++] = {bits, v};
  }
  std::sort(cand, cand + nc, std::greater<>());
  for (int i = 0; i < nc; ++i) {
    if (i > 0 && cand[i].first == cand[i - 1].first &&
        adj[cand[i].second] == adj[cand[i - 1].second]) {
      continue;  // twin vertices give identical subtrees
    }
    auto [bits, v] = cand[i];
    if (!have_best) {
      best_bits[p] = bits;  // first descent lays down the baseline greedily
    } else if (bits < best_bits[p]) {
      break;  // sorted, the rest are smaller too
    } else if (bits > best_bits[p]) {
      best_bits[p] = bits;
      std::fill(best_bits + p + 1, best_bits + n, 0);
    }
    placed[p] = v;
    used[v] = true;
    search(p + 1);
    used[v] = false;
  }
}

// Paint vertices by sorted invariant keys; returns colour per vertex with
// colours numbered in key order (so the numbering itself is invariant).
template <class Key>
std::vector<int> rank_by_key(const std::vector<Key>& keys) {
  std::map<Key, int> order;
  for (const auto& k : keys) order.emplace(k, 0);
  int idx = 0;
  for (auto& [k, v] : order) v = idx++;
  std::vector<int> colors(keys.size());
  for (size_t i = 0; i < keys.size(); ++i) colors[i] = order[keys[i]];
  return colors;
}

std::vector<int> stable_coloring(const Graph& g) {
  const int n = g.n;
  DistMatrix dm = bfs_distances(g);
  std::vector<std::vector<int>> keys(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> profile(n + 1, 0);  // slot n counts unreachable pairs
    for (int u = 0; u < n; ++u) {
      int d = dm.at(v, u);
      ++profile[d == DistMatrix::kInf ? n : d];
    }
    keys[v] = std::move(profile);
  }
  std::vector<int> colors = rank_by_key(keys);
  while (true) {
    std::vector<std::vector<int>> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> k{colors[v]};
      for (uint64_t m = g.adj[v]; m;) {
        int u = __builtin_ctzll(m);
        m &= m - 1;
        k.push_back(colors[u]);
      }
      std::sort(k.begin() + 1, k.end());
      next[v] = std::move(k);
    }
    std::vector<int> nc = rank_by_key(next);
    if (nc == colors) break;
    colors = std::move(nc);
  }
  return colors;
}

CanonWork run_canon(const Graph& g) {
  if (g.n > kMaxCanonN)
    throw std::invalid_argument("canonical_form: supported only for n <= 16");
  CanonWork w;
  w.n = g.n;
  for (int v = 0; v < g.n; ++v) w.adj[v] = static_cast<uint32_t>(g.adj[v]);
  std::vector<int> colors = stable_coloring(g);
  int nclasses = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  w.class_members.assign(nclasses, {});
  for (int v = 0; v < g.n; ++v) w.class_members[colors[v]].push_back(v);
  int pos = 0;
  for (int c = 0; c < nclasses; ++c)
    for (size_t i = 0; i < w.class_members[c].size(); ++i) w.cls_of_pos[pos++] = c;
  w.search(0);
  return w;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  CanonWork w = run_canon(g);
  CanonicalForm f;
  f.n = g.n;
  int bit = 0;
  for (int p = 1; p < g.n; ++p)
    for (int t = 0; t < p; ++t, ++bit)
      if ((w.best_bits[p] >> (p - 1 - t)) & 1)
        f.bits[bit >> 6] |= uint64_t(1) << (bit & 63);
  return f;
}

std::vector<int> canonical_labeling(const Graph& g) {
  CanonWork w = run_canon(g);
  return {w.best_perm, w.best_perm + g.n};
}

Graph apply_labeling(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.has_edge(perm[i], perm[j])) out.add_edge(i, j);
  return out;
}

Graph canonical_graph(const Graph& g) {
  return apply_labeling(g, canonical_labeling(g));
}

std::string canonical_graph6(const Graph& g) {
  return to_graph6(canonical_graph(g));
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace cospec
