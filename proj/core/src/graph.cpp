#include "cospec/graph.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cospec {

Graph::Graph(int size) : n(size), adj(size, 0) {
  if (size < 0 || size > 64)
    throw std::invalid_argument("Graph: vertex count must be in [0, 64]");
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw std::out_of_range("add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edge: loops not allowed");
  adj[u] |= uint64_t(1) << v;
  adj[v] |= uint64_t(1) << u;
}

void Graph::remove_edge(int u, int v) {
  adj[u] &= ~(uint64_t(1) << v);
  adj[v] &= ~(uint64_t(1) << u);
}

size_t Graph::edge_count() const {
  size_t twice = 0;
  for (int v = 0; v < n; ++v) twice += degree(v);
  return twice / 2;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

uint64_t component_of(const Graph& g, int v) {
  uint64_t seen = uint64_t(1) << v, frontier = seen;
  while (frontier) {
    uint64_t next = 0;
    for (uint64_t f = frontier; f;) {
      int u = __builtin_ctzll(f);
      f &= f - 1;
      next |= g.adj[u];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return true;
  uint64_t all = g.n == 64 ? ~uint64_t(0) : (uint64_t(1) << g.n) - 1;
  return component_of(g, 0) == all;
}

std::vector<uint64_t> components(const Graph& g) {
  std::vector<uint64_t> out;
  uint64_t left = g.n == 64 ? ~uint64_t(0) : (uint64_t(1) << g.n) - 1;
  while (left) {
    uint64_t c = component_of(g, __builtin_ctzll(left));
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

Graph induced_subgraph(const Graph& g, uint64_t mask) {
  std::vector<int> verts;
  for (uint64_t m = mask; m;) {
    int v = __builtin_ctzll(m);
    m &= m - 1;
    verts.push_back(v);
  }
  Graph s(static_cast<int>(verts.size()));
  for (size_t i = 0; i < verts.size(); ++i)
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (g.has_edge(verts[i], verts[j])) s.add_edge(static_cast<int>(i), static_cast<int>(j));
  return s;
}

Graph coalesce(const Graph& g, int v, const Graph& h, int root) {
  if (v < 0 || v >= g.n) throw std::out_of_range("coalesce: glue vertex out of range");
  if (root < 0 || root >= h.n) throw std::out_of_range("coalesce: root out of range");
  Graph out(g.n + h.n - 1);
  for (auto [a, b] : g.edges()) out.add_edge(a, b);
  // Map h's vertices: root -> v, others appended in order.
  std::vector<int> map(h.n);
  int next = g.n;
  for (int w = 0; w < h.n; ++w) map[w] = (w == root) ? v : next++;
  for (auto [a, b] : h.edges()) out.add_edge(map[a], map[b]);
  return out;
}

// ----- distances -----

DistMatrix bfs_distances(const Graph& g) {
  DistMatrix d(g.n);
  for (int s = 0; s < g.n; ++s) {
    uint64_t seen = uint64_t(1) << s, frontier = seen;
    int depth = 0;
    d.at(s, s) = 0;
    while (frontier) {
      uint64_t next = 0;
      for (uint64_t f = frontier; f;) {
        int u = __builtin_ctzll(f);
        f &= f - 1;
        next |= g.adj[u];
      }
      next &= ~seen;
      ++depth;
      for (uint64_t f = next; f;) {
        int u = __builtin_ctzll(f);
        f &= f - 1;
        d.at(s, u) = depth;
      }
      seen |= next;
      frontier = next;
    }
  }
  return d;
}

int diameter(const DistMatrix& d) {
  int best = 0;
  for (int v : d.d)
    if (v != DistMatrix::kInf && v > best) best = v;
  return best;
}

// ----- graph6 -----

Graph parse_graph6(const std::string& line) {
  if (line.empty()) throw std::runtime_error("graph6: empty line");
  size_t pos = 0;
  if (line[0] == '>') {  // optional ">>graph6<<" header
    const std::string hdr = ">>graph6<<";
    if (line.rfind(hdr, 0) != 0)
      throw std::runtime_error("graph6: malformed header");
    pos = hdr.size();
  }
  if (pos >= line.size()) throw std::runtime_error("graph6: missing size byte");
  int c = static_cast<unsigned char>(line[pos]);
  long n;
  if (c == 126) {
    // Multi-byte sizes encode n >= 63; anything beyond 64 is out of range
    // for this toolkit anyway, so decode the 3-byte form only.
    if (pos + 3 >= line.size()) throw std::runtime_error("graph6: truncated size");
    n = 0;
    for (int k = 1; k <= 3; ++k) {
      int b = static_cast<unsigned char>(line[pos + k]) - 63;
      if (b < 0 || b > 63) throw std::runtime_error("graph6: bad size byte");
      n = (n << 6) | b;
    }
    pos += 4;
  } else {
    if (c < 63 || c > 125) throw std::runtime_error("graph6: bad size byte");
    n = c - 63;
    pos += 1;
  }
  if (n > 64) throw std::runtime_error("graph6: vertex count out of range (max 64)");
  Graph g(static_cast<int>(n));
  long bits_needed = n * (n - 1) / 2;
  long bytes_needed = (bits_needed + 5) / 6;
  if (static_cast<long>(line.size() - pos) < bytes_needed)
    throw std::runtime_error("graph6: truncated bit string");
  long bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit) {
      int byte = static_cast<unsigned char>(line[pos + bit / 6]) - 63;
      if (byte < 0 || byte > 63) throw std::runtime_error("graph6: bad data byte");
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(u, v);
    }
  return g;
}

std::string to_graph6(const Graph& g) {
  std::string out;
  if (g.n >= 63) {
    out += static_cast<char>(126);
    out += static_cast<char>(63 + ((g.n >> 12) & 63));
    out += static_cast<char>(63 + ((g.n >> 6) & 63));
    out += static_cast<char>(63 + (g.n & 63));
  } else {
    out += static_cast<char>(63 + g.n);
  }
  int acc = 0, nbits = 0;
  for (int v = 1; v < g.n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out += static_cast<char>(63 + (acc << (6 - nbits)));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
      line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
  return read_graph6_stream(in);
}

// ----- edge-list text -----

Graph parse_edge_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  bool comment = false;  // '#' to end of line, as in the graph6 reader
  for (char c : text) {
    if (c == '\n') comment = false;
    if (comment) continue;
    if (c == '#') {
      comment = true;
    } else if (c == ';') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  auto numbers = [](const std::string& s) {
    std::istringstream in(s);
    std::vector<long> out;
    long v;
    while (in >> v) out.push_back(v);
    std::string rest;
    if (in.clear(), in >> rest)
      throw std::runtime_error("edge list: unexpected token '" + rest + "'");
    return out;
  };
  auto head = numbers(parts[0]);
  if (head.size() != 1)
    throw std::runtime_error("edge list: expected vertex count before first ';'");
  Graph g(static_cast<int>(head[0]));
  for (size_t i = 1; i < parts.size(); ++i) {
    auto e = numbers(parts[i]);
    if (e.empty()) continue;  // tolerate a trailing ';'
    if (e.size() != 2)
      throw std::runtime_error("edge list: each edge needs exactly two labels");
    if (e[0] < 1 || e[1] < 1 || e[0] > g.n || e[1] > g.n)
      throw std::runtime_error("edge list: vertex label out of range");
    g.add_edge(static_cast<int>(e[0] - 1), static_cast<int>(e[1] - 1));
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n);
  for (auto [u, v] : g.edges())
    out += "; " + std::to_string(u + 1) + " " + std::to_string(v + 1);
  return out;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  bool g6 = path.size() > 3 && path.substr(path.size() - 3) == ".g6";
  if (g6) {
    auto all = read_graph6_stream(in);
    if (all.empty()) throw std::runtime_error("no graphs in " + path);
    return all[0];
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

}  // namespace cospec
