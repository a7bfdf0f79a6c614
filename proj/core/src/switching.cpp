#include "cospec/switching.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cospec {

namespace {

std::vector<int> mask_verts(uint64_t m) {
  std::vector<int> out;
  while (m) {
    out.push_back(__builtin_ctzll(m));
    m &= m - 1;
  }
  return out;
}

std::string mask_str(uint64_t m) {
  std::string s = "{";
  bool first = true;
  for (int v : mask_verts(m)) {
    if (!first) s += ",";
    s += std::to_string(v + 1);
    first = false;
  }
  return s + "}";
}

}  // namespace

std::string SwitchConfig::str() const {
  std::string s = "A: ";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ", ";
    s += mask_str(parts[i]);
  }
  s += "; B: ";
  for (size_t i = 0; i < comps.size(); ++i) {
    if (i) s += ", ";
    s += mask_str(comps[i].verts);
    s += comps[i].half ? "->half" + mask_str(comps[i].half) : "->none";
  }
  s += "; extra: {";
  for (size_t i = 0; i < extra_edges.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(extra_edges[i].first + 1) + "-" +
         std::to_string(extra_edges[i].second + 1);
  }
  return s + "}";
}

namespace {

[[noreturn]] void bad_config(const std::string& why) {
  throw std::runtime_error("switch config: " + why);
}

void skip_ws(const std::string& s, size_t& p) {
  while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
}

bool eat(const std::string& s, size_t& p, const std::string& tok) {
  skip_ws(s, p);
  if (s.compare(p, tok.size(), tok) != 0) return false;
  p += tok.size();
  return true;
}

long parse_num(const std::string& s, size_t& p) {
  skip_ws(s, p);
  size_t start = p;
  while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
  if (p == start) bad_config("expected a number at '" + s.substr(start, 8) + "'");
  return std::stol(s.substr(start, p - start));
}

// "{1,2,3}" or "{}", 1-based labels to a mask.
uint64_t parse_mask(const std::string& s, size_t& p) {
  if (!eat(s, p, "{")) bad_config("expected '{'");
  uint64_t m = 0;
  skip_ws(s, p);
  if (s[p] == '}') {
    ++p;
    return 0;
  }
  while (true) {
    long v = parse_num(s, p);
    if (v < 1 || v > 64) bad_config("vertex label out of range: " + std::to_string(v));
    m |= uint64_t(1) << (v - 1);
    skip_ws(s, p);
    if (p < s.size() && s[p] == ',') {
      ++p;
      continue;
    }
    if (p < s.size() && s[p] == '}') {
      ++p;
      return m;
    }
    bad_config("expected ',' or '}' in vertex set");
  }
}

}  // namespace

SwitchConfig SwitchConfig::parse(const std::string& text) {
  SwitchConfig c;
  size_t p = 0;
  if (!eat(text, p, "A:")) bad_config("expected 'A:'");
  while (true) {
    c.parts.push_back(parse_mask(text, p));
    if (!eat(text, p, ",")) break;
  }
  if (!eat(text, p, ";") || !eat(text, p, "B:")) bad_config("expected '; B:'");
  skip_ws(text, p);
  while (p < text.size() && text[p] == '{') {
    BComponent comp;
    comp.verts = parse_mask(text, p);
    if (!eat(text, p, "->")) bad_config("expected '->' after component vertices");
    if (eat(text, p, "half")) {
      comp.half = parse_mask(text, p);
      if (comp.half == 0) bad_config("half-set may not be empty");
      for (size_t i = 0; i < c.parts.size(); ++i)
        if ((comp.half & ~c.parts[i]) == 0) comp.part = static_cast<int>(i);
      if (comp.part < 0) bad_config("half-set not contained in any part");
    } else if (!eat(text, p, "none")) {
      bad_config("expected 'half{...}' or 'none'");
    }
    c.comps.push_back(comp);
    if (!eat(text, p, ",")) break;
    skip_ws(text, p);
  }
  if (!eat(text, p, ";") || !eat(text, p, "extra:") || !eat(text, p, "{"))
    bad_config("expected '; extra: {'");
  skip_ws(text, p);
  if (p < text.size() && text[p] != '}') {
    while (true) {
      long u = parse_num(text, p);
      if (!eat(text, p, "-")) bad_config("expected 'u-v' in extra edge");
      long v = parse_num(text, p);
      c.extra_edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
      if (!eat(text, p, ",")) break;
    }
  }
  if (!eat(text, p, "}")) bad_config("expected '}' closing extra edges");
  skip_ws(text, p);
  if (p != text.size()) bad_config("trailing characters after config");
  return c;
}

// ----- validation -----

ValidationReport validate_config(const Graph& g, const SwitchConfig& c) {
  ValidationReport rep;
  auto fail = [&](const std::string& s) { rep.violations.push_back(s); };
  const uint64_t all = g.n == 64 ? ~uint64_t(0) : (uint64_t(1) << g.n) - 1;

  if (c.parts.empty()) fail("no switching parts given");
  uint64_t aunion = 0;
  for (size_t i = 0; i < c.parts.size(); ++i) {
    uint64_t part = c.parts[i];
    std::string name = "part " + std::to_string(i + 1);
    if (part == 0) {
      fail(name + " is empty");
      continue;
    }
    if (part & ~all) {
      fail(name + " has vertices outside the graph");
      continue;
    }
    if (part & aunion) fail(name + " overlaps an earlier part");
    aunion |= part;
    int size = __builtin_popcountll(part);
    if (size % 2) fail(name + " has odd size");
    // induced regularity of degree >= size/2
    int deg = -1;
    bool regular = true;
    for (int v : mask_verts(part)) {
      int dv = __builtin_popcountll(g.adj[v] & part);
      if (deg < 0) deg = dv;
      if (dv != deg) regular = false;
    }
    if (!regular)
      fail(name + " does not induce a regular subgraph");
    else if (2 * deg < size)
      fail(name + " induces " + std::to_string(deg) + "-regular but needs degree >= " +
           std::to_string((size + 1) / 2));
  }
  // pairwise joins complete or empty
  for (size_t i = 0; i < c.parts.size(); ++i)
    for (size_t j = i + 1; j < c.parts.size(); ++j) {
      long cross = 0;
      for (int v : mask_verts(c.parts[i]))
        cross += __builtin_popcountll(g.adj[v] & c.parts[j]);
      long full = static_cast<long>(__builtin_popcountll(c.parts[i])) *
                  __builtin_popcountll(c.parts[j]);
      if (cross != 0 && cross != full)
        fail("parts " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
             " are partially joined (" + std::to_string(cross) + " of " +
             std::to_string(full) + " edges)");
    }

  if (!is_connected(g)) fail("graph is not connected");

  // components must tile V minus the parts and match the actual connected
  // pieces once the declared extra edges are removed
  uint64_t bunion = 0;
  bool comps_disjoint = true;
  for (const auto& comp : c.comps) {
    if (comp.verts == 0) fail("empty component listed");
    if (comp.verts & aunion) fail("component " + mask_str(comp.verts) + " overlaps a part");
    if (comp.verts & bunion) comps_disjoint = false;
    bunion |= comp.verts;
  }
  if (!comps_disjoint) fail("components overlap each other");
  if ((bunion | aunion) != all || (bunion & ~all))
    fail("components plus parts must cover the vertex set exactly");

  Graph stripped = g;
  for (auto [u, v] : c.extra_edges) {
    if (u < 0 || v < 0 || u >= g.n || v >= g.n || !g.has_edge(u, v)) {
      fail("extra edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) +
           " is not an edge of the graph");
      continue;
    }
    stripped.remove_edge(u, v);
  }
  if (rep.ok()) {
    Graph outside(g.n);
    for (int v = 0; v < g.n; ++v)
      outside.adj[v] = ((bunion >> v) & 1) ? (stripped.adj[v] & bunion) : 0;
    std::vector<uint64_t> pieces;
    uint64_t left = bunion;
    while (left) {
      uint64_t piece = component_of(outside, __builtin_ctzll(left)) & bunion;
      pieces.push_back(piece);
      left &= ~piece;
    }
    for (uint64_t piece : pieces) {
      bool found = false;
      for (const auto& comp : c.comps) found |= comp.verts == piece;
      if (!found)
        fail("outside piece " + mask_str(piece) +
             " is not listed as a component (after removing extra edges)");
    }
  }

  // attachment discipline per component
  for (const auto& comp : c.comps) {
    int assoc = -1;
    bool multi = false;
    for (int v : mask_verts(comp.verts))
      for (size_t i = 0; i < c.parts.size(); ++i)
        if (g.adj[v] & c.parts[i]) {
          if (assoc >= 0 && assoc != static_cast<int>(i)) multi = true;
          assoc = static_cast<int>(i);
        }
    if (multi) {
      fail("component " + mask_str(comp.verts) + " attaches to more than one part");
      continue;
    }
    if (assoc < 0) {
      fail("component " + mask_str(comp.verts) + " attaches to no part");
      continue;
    }
    if (comp.half) {
      if (comp.part != assoc) {
        fail("component " + mask_str(comp.verts) + " declares a half-set on the wrong part");
        continue;
      }
      uint64_t part = c.parts[comp.part];
      if (comp.half & ~part)
        fail("half-set " + mask_str(comp.half) + " is not inside its part");
      if (2 * __builtin_popcountll(comp.half) != __builtin_popcountll(part))
        fail("half-set " + mask_str(comp.half) + " is not half of " + mask_str(part));
    }
    uint64_t part = c.parts[assoc];
    for (int v : mask_verts(comp.verts)) {
      uint64_t nb = g.adj[v] & part;
      if (nb == 0 || nb == part) continue;
      if (comp.half && nb == comp.half) continue;
      fail("vertex " + std::to_string(v + 1) + " attaches to " + mask_str(nb) +
           ", which is neither all, none, nor the declared half of its part");
    }
  }

  // extra edges: same part family, both endpoints attached to that part
  for (auto [u, v] : c.extra_edges) {
    if (u < 0 || v < 0 || u >= g.n || v >= g.n) continue;  // reported above
    const BComponent *cu = nullptr, *cv = nullptr;
    for (const auto& comp : c.comps) {
      if ((comp.verts >> u) & 1) cu = &comp;
      if ((comp.verts >> v) & 1) cv = &comp;
    }
    if (!cu || !cv) {
      fail("extra edge endpoint outside every component");
      continue;
    }
    int pu = -1, pv = -1;
    for (size_t i = 0; i < c.parts.size(); ++i) {
      if (g.adj[u] & c.parts[i]) pu = static_cast<int>(i);
      if (g.adj[v] & c.parts[i]) pv = static_cast<int>(i);
    }
    if (pu < 0 || pv < 0 || pu != pv)
      fail("extra edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) +
           " needs both endpoints adjacent to the same part");
  }

  // the part union should induce a connected graph: kept separate because the
  // certificate, not this syntactic check, is the final arbiter
  if (aunion && rep.ok()) {
    Graph asub = induced_subgraph(g, aunion);
    if (!is_connected(asub))
      rep.soft.push_back("the union of the parts induces a disconnected graph");
  }
  return rep;
}

Graph apply_switch(const Graph& g, const SwitchConfig& c) {
  ValidationReport rep = validate_config(g, c);
  if (!rep.ok())
    throw std::invalid_argument("apply_switch: invalid config: " + rep.violations.front());
  Graph out = g;
  for (const auto& comp : c.comps) {
    if (!comp.half) continue;
    uint64_t part = c.parts[comp.part];
    uint64_t flipped = part & ~comp.half;
    for (int v : mask_verts(comp.verts)) {
      if ((g.adj[v] & part) != comp.half) continue;
      for (int a : mask_verts(part)) out.remove_edge(v, a);
      for (int a : mask_verts(flipped)) out.add_edge(v, a);
    }
  }
  return out;
}

// ----- similarity and certificates -----

RingMatrix<mpq_class> Similarity::to_matrix() const {
  RingMatrix<mpq_class> s = RingMatrix<mpq_class>::identity(n);
  for (uint64_t block : blocks) {
    int size = __builtin_popcountll(block);
    mpq_class two_over(2, size);
    two_over.canonicalize();
    for (int u : mask_verts(block))
      for (int v : mask_verts(block))
        s.at(u, v) = two_over - (u == v ? 1 : 0);
  }
  return s;
}

Similarity build_similarity(int n, const SwitchConfig& c) {
  Similarity s;
  s.n = n;
  s.blocks = c.parts;
  return s;
}

Certificate certify_with(const Graph& g1, const Graph& g2,
                         const RingMatrix<mpq_class>& s) {
  Certificate cert;
  if (g1.n != g2.n || s.n != g1.n) {
    cert.failure = "size mismatch between graphs and similarity matrix";
    return cert;
  }
  // GMP entry comparisons below assume canonical form; don't trust callers.
  RingMatrix<mpq_class> sc = s;
  for (mpq_class& e : sc.a) e.canonicalize();
  LevelDecomposition l1 = level_decomposition(g1);
  LevelDecomposition l2 = level_decomposition(g2);
  int top = std::max(l1.diam, l2.diam);

  auto check_level = [&](const RingMatrix<mpq_class>& m1,
                         const RingMatrix<mpq_class>& m2, int label) {
    RingMatrix<mpq_class> conj = mat_mul(mat_mul(sc, m1), sc);
    LevelCheck lc{label, true};
    for (int i = 0; i < g1.n && lc.ok; ++i)
      for (int j = 0; j < g1.n; ++j)
        if (conj.at(i, j) != m2.at(i, j)) {
          lc = {label, false, i, j};
          break;
        }
    cert.levels.push_back(lc);
    if (!lc.ok && cert.failure.empty())
      cert.failure = "level " + std::to_string(label) + " differs first at entry (" +
                     std::to_string(lc.i + 1) + "," + std::to_string(lc.j + 1) + ")";
    return lc.ok;
  };

  bool all_ok = true;
  for (int k = 0; k <= top; ++k)
    all_ok &= check_level(k <= l1.diam ? l1.level_matrix(k) : RingMatrix<mpq_class>(g1.n),
                          k <= l2.diam ? l2.level_matrix(k) : RingMatrix<mpq_class>(g2.n), k);

  bool inf1 = false, inf2 = false;
  for (uint64_t m : l1.infinite) inf1 |= m != 0;
  for (uint64_t m : l2.infinite) inf2 |= m != 0;
  if (inf1 || inf2) {
    auto inf_matrix = [](const LevelDecomposition& l) {
      RingMatrix<mpq_class> m(l.n);
      for (int i = 0; i < l.n; ++i)
        for (uint64_t row = l.infinite[i]; row;) {
          int j = __builtin_ctzll(row);
          row &= row - 1;
          m.at(i, j) = 1;
        }
      return m;
    };
    all_ok &= check_level(inf_matrix(l1), inf_matrix(l2), -1);
  }
  cert.ok = all_ok;
  return cert;
}

Certificate certify_pair(const Graph& g1, const Graph& g2, const SwitchConfig& c) {
  return certify_with(g1, g2, build_similarity(g1.n, c).to_matrix());
}

// ----- coalescing -----

CoalescedPair coalesce_on_part(const Graph& g1, const Graph& g2,
                               const SwitchConfig& c, int part_index,
                               const Graph& glue, int root) {
  if (part_index < 0 || part_index >= static_cast<int>(c.parts.size()))
    throw std::out_of_range("coalesce_on_part: part index out of range");
  if (glue.n < 1 || !is_connected(glue))
    throw std::invalid_argument("coalesce_on_part: glued graph must be connected");
  if (root < 0 || root >= glue.n)
    throw std::out_of_range("coalesce_on_part: root out of range");

  std::vector<int> anchors = mask_verts(c.parts[part_index]);
  CoalescedPair out;
  out.h1 = g1;
  out.h2 = g2;
  for (int a : anchors) {
    out.h1 = coalesce(out.h1, a, glue, root);
    out.h2 = coalesce(out.h2, a, glue, root);
  }

  // Every part keeps its involution block.  Each non-root glue vertex w adds
  // one more block holding w's copies, ordered like the anchors; identity
  // there would break the conjugation because distances from the copies
  // still see the switched half-sets.
  out.sim.n = out.h1.n;
  out.sim.blocks = c.parts;
  int per_copy = glue.n - 1;
  for (int w = 0; w < glue.n; ++w) {
    if (w == root) continue;
    int rank = w - (w > root ? 1 : 0);
    uint64_t block = 0;
    for (size_t s = 0; s < anchors.size(); ++s)
      block |= uint64_t(1) << (g1.n + static_cast<int>(s) * per_copy + rank);
    out.sim.blocks.push_back(block);
  }
  out.cert = certify_with(out.h1, out.h2, out.sim.to_matrix());
  return out;
}

}  // namespace cospec
