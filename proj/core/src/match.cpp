#include <algorithm>

#include "cospec/switching.hpp"

// Recognising switched pairs.  For a fixed collection of parts the rest of a
// configuration is forced by the graph: component extents must be the pieces
// left after cutting the legal extra edges, and a component's half-set can
// only be the common attachment of its half-type vertices.  Edges incident to
// a vertex with no part attachment can never be extra edges (both endpoints
// would need a neighbour in the part), so the pieces connected by such edges
// are indivisible; cutting everything between those pieces is the finest
// split, and it is valid exactly when any split is.  The search therefore
// only has to enumerate part collections.

namespace cospec {

namespace {

struct Oriented {
  const Graph& a;
  const Graph& b;
  CanonicalForm target;
};

// Even-sized subsets inducing a regular subgraph of degree >= size/2.
std::vector<uint64_t> candidate_parts(const Graph& g) {
  std::vector<uint64_t> out;
  const uint64_t all = g.n == 64 ? ~uint64_t(0) : (uint64_t(1) << g.n) - 1;
  for (uint64_t p = 3; p < all; ++p) {  // skip singletons; V itself leaves no outside
    int size = __builtin_popcountll(p);
    if (size < 2 || size % 2) continue;
    int deg = -1;
    bool good = true;
    for (uint64_t m = p; m && good;) {
      int v = __builtin_ctzll(m);
      m &= m - 1;
      int dv = __builtin_popcountll(g.adj[v] & p);
      if (deg < 0) deg = dv;
      good = dv == deg;
    }
    if (good && 2 * deg >= size) out.push_back(p);
  }
  return out;
}

struct Searcher {
  const Graph& g;
  const std::vector<uint64_t>& cands;
  const MatchOptions& opts;
  const CanonicalForm& target;
  long& examined;

  std::vector<int> chosen;
  uint64_t aunion = 0;
  bool out_of_budget = false;
  SwitchConfig found;
  bool have_found = false;

  bool joins_uniform(uint64_t p, uint64_t q) const {
    long cross = 0;
    for (uint64_t m = p; m;) {
      int v = __builtin_ctzll(m);
      m &= m - 1;
      cross += __builtin_popcountll(g.adj[v] & q);
    }
    return cross == 0 ||
           cross == static_cast<long>(__builtin_popcountll(p)) * __builtin_popcountll(q);
  }

  bool union_connected() const {
    // Parts are internally connected (>= half-regular), so the union is
    // connected iff the joined-parts graph is.
    size_t m = chosen.size();
    std::vector<int> root(m);
    for (size_t i = 0; i < m; ++i) root[i] = static_cast<int>(i);
    auto find = [&](int x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    for (size_t i = 0; i < m; ++i)
      for (size_t j = i + 1; j < m; ++j) {
        uint64_t pi = cands[chosen[i]], pj = cands[chosen[j]];
        bool joined = false;
        for (uint64_t mask = pi; mask && !joined;) {
          int v = __builtin_ctzll(mask);
          mask &= mask - 1;
          joined = (g.adj[v] & pj) != 0;
        }
        if (joined) root[find(static_cast<int>(i))] = find(static_cast<int>(j));
      }
    int r0 = find(0);
    for (size_t i = 1; i < m; ++i)
      if (find(static_cast<int>(i)) != r0) return false;
    return true;
  }

  // Derive the forced component structure; returns false when this part
  // collection cannot carry a valid configuration.
  bool derive_and_try(SwitchConfig& cfg) {
    const uint64_t all = g.n == 64 ? ~uint64_t(0) : (uint64_t(1) << g.n) - 1;
    uint64_t bmask = all & ~aunion;
    if (!bmask) return false;

    // attachment and owning part per outside vertex
    uint64_t attach[64];
    int owner[64];
    for (uint64_t m = bmask; m;) {
      int v = __builtin_ctzll(m);
      m &= m - 1;
      attach[v] = 0;
      owner[v] = -1;
      for (size_t i = 0; i < cfg.parts.size(); ++i) {
        uint64_t nb = g.adj[v] & cfg.parts[i];
        if (!nb) continue;
        if (owner[v] >= 0) return false;  // touches two parts
        owner[v] = static_cast<int>(i);
        attach[v] = nb;
        if (nb != cfg.parts[i] &&
            2 * __builtin_popcountll(nb) != __builtin_popcountll(cfg.parts[i]))
          return false;  // proper attachment that is not a half
      }
    }

    bool any_half = false;
    uint64_t left = bmask;
    while (left) {
      // blob: maximal connected piece outside the parts
      uint64_t blob = uint64_t(1) << __builtin_ctzll(left);
      for (uint64_t grow = blob; grow;) {
        uint64_t next = 0;
        for (uint64_t m = grow; m;) {
          int v = __builtin_ctzll(m);
          m &= m - 1;
          next |= g.adj[v] & bmask;
        }
        grow = next & ~blob;
        blob |= grow;
      }
      left &= ~blob;

      int part = -1;
      for (uint64_t m = blob; m;) {
        int v = __builtin_ctzll(m);
        m &= m - 1;
        if (owner[v] < 0) continue;
        if (part >= 0 && part != owner[v]) return false;
        part = owner[v];
      }
      if (part < 0) return false;  // blob floats free of every part

      // super-nodes: components under edges touching an unattached endpoint
      std::vector<uint64_t> supers;
      uint64_t todo = blob;
      while (todo) {
        uint64_t sn = uint64_t(1) << __builtin_ctzll(todo);
        for (uint64_t grow = sn; grow;) {
          uint64_t next = 0;
          for (uint64_t m = grow; m;) {
            int v = __builtin_ctzll(m);
            m &= m - 1;
            uint64_t nbrs = g.adj[v] & blob;
            if (attach[v] == 0) {
              next |= nbrs;  // every edge at an unattached vertex is internal
            } else {
              for (uint64_t w = nbrs; w;) {
                int u = __builtin_ctzll(w);
                w &= w - 1;
                if (attach[u] == 0) next |= uint64_t(1) << u;
              }
            }
          }
          grow = next & ~sn;
          sn |= grow;
        }
        todo &= ~sn;
        supers.push_back(sn);
      }

      std::vector<int> super_of(g.n, -1);
      for (size_t s = 0; s < supers.size(); ++s)
        for (uint64_t m = supers[s]; m;) {
          super_of[__builtin_ctzll(m)] = static_cast<int>(s);
          m &= m - 1;
        }

      uint64_t part_mask = cfg.parts[part];
      for (uint64_t sn : supers) {
        uint64_t half = 0;
        for (uint64_t m = sn; m;) {
          int v = __builtin_ctzll(m);
          m &= m - 1;
          if (attach[v] == 0 || attach[v] == part_mask) continue;
          if (half && attach[v] != half) return false;  // two halves in one piece
          half = attach[v];
        }
        BComponent comp;
        comp.verts = sn;
        comp.part = part;
        comp.half = half;
        if (half) any_half = true;
        cfg.comps.push_back(comp);
      }

      // cross-piece edges become the declared extra edges
      for (uint64_t m = blob; m;) {
        int v = __builtin_ctzll(m);
        m &= m - 1;
        for (uint64_t w = g.adj[v] & blob; w;) {
          int u = __builtin_ctzll(w);
          w &= w - 1;
          if (u > v && super_of[u] != super_of[v]) cfg.extra_edges.emplace_back(v, u);
        }
      }
    }
    if (!any_half) return false;  // switch would be the identity

    std::sort(cfg.comps.begin(), cfg.comps.end(),
              [](const BComponent& x, const BComponent& y) { return x.verts < y.verts; });
    std::sort(cfg.extra_edges.begin(), cfg.extra_edges.end());

    // direct flip, cheaper than apply_switch with its revalidation
    Graph flipped = g;
    for (const auto& comp : cfg.comps) {
      if (!comp.half) continue;
      uint64_t pm = cfg.parts[comp.part];
      for (uint64_t m = comp.verts; m;) {
        int v = __builtin_ctzll(m);
        m &= m - 1;
        if ((g.adj[v] & pm) != comp.half) continue;
        for (uint64_t t = pm; t;) {
          int a = __builtin_ctzll(t);
          t &= t - 1;
          flipped.remove_edge(v, a);
        }
        for (uint64_t t = pm & ~comp.half; t;) {
          int a = __builtin_ctzll(t);
          t &= t - 1;
          flipped.add_edge(v, a);
        }
      }
    }
    if (flipped == g) return false;
    if (canonical_form(flipped) != target) return false;
    return certify_pair(g, flipped, cfg).ok;
  }

  void extend(int from) {
    if (have_found || out_of_budget) return;
    if (!chosen.empty()) {
      if (examined >= opts.budget) {
        out_of_budget = true;
        return;
      }
      ++examined;
      if (!opts.require_part_union_connected || union_connected()) {
        SwitchConfig cfg;
        for (int idx : chosen) cfg.parts.push_back(cands[idx]);
        if (derive_and_try(cfg)) {
          found = std::move(cfg);
          have_found = true;
          return;
        }
      }
    }
    if (opts.max_parts > 0 && static_cast<int>(chosen.size()) >= opts.max_parts) return;
    for (int i = from; i < static_cast<int>(cands.size()); ++i) {
      uint64_t p = cands[i];
      if (p & aunion) continue;
      bool uniform = true;
      for (int idx : chosen)
        if (!joins_uniform(cands[idx], p)) {
          uniform = false;
          break;
        }
      if (!uniform) continue;
      chosen.push_back(i);
      aunion |= p;
      extend(i + 1);
      aunion &= ~p;
      chosen.pop_back();
      if (have_found || out_of_budget) return;
    }
  }
};

}  // namespace

MatchResult match_construction(const Graph& g1, const Graph& g2,
                               const MatchOptions& opts) {
  MatchResult res;
  if (g1.n != g2.n || !is_connected(g1) || !is_connected(g2)) return res;
  if (are_isomorphic(g1, g2)) return res;  // looking for genuine mates only

  bool exhausted = false;
  for (int side = 0; side < 2; ++side) {
    const Graph& a = side == 0 ? g1 : g2;
    const Graph& b = side == 0 ? g2 : g1;
    std::vector<uint64_t> cands = candidate_parts(a);
    CanonicalForm target = canonical_form(b);
    Searcher s{a, cands, opts, target, res.examined};
    s.extend(0);
    if (s.have_found) {
      res.status = MatchResult::Status::found;
      res.config = std::move(s.found);
      res.swapped = side == 1;
      return res;
    }
    exhausted |= s.out_of_budget;
  }
  res.status = exhausted ? MatchResult::Status::budget_exhausted
                         : MatchResult::Status::none;
  return res;
}

}  // namespace cospec
