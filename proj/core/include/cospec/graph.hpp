#pragma once

// Simple undirected graphs on up to 64 vertices, adjacency kept as one 64-bit
// neighbour mask per vertex.  Everything downstream (distances, switching,
// canonical forms) works on this representation.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cospec {

struct Graph {
  int n = 0;
  std::vector<uint64_t> adj;  // adj[v] = neighbour bitmask of v

  Graph() = default;
  explicit Graph(int size);

  // 0-based endpoints; rejects loops and out-of-range vertices.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool has_edge(int u, int v) const {
    return (adj[u] >> v) & 1;
  }
  int degree(int v) const { return __builtin_popcountll(adj[v]); }
  size_t edge_count() const;

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  std::vector<std::pair<int, int>> edges() const;  // sorted, u < v

  bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }
};

bool is_connected(const Graph& g);
// Mask of the component containing v (BFS closure over neighbour masks).
uint64_t component_of(const Graph& g, int v);
std::vector<uint64_t> components(const Graph& g);
// Subgraph induced by the mask, vertices relabelled by ascending bit position.
Graph induced_subgraph(const Graph& g, uint64_t mask);

// Glue h onto g by identifying h's root with vertex v; the other h-vertices
// are appended after g's, in h's vertex order.
Graph coalesce(const Graph& g, int v, const Graph& h, int root);

// ----- shortest-path distances -----

struct DistMatrix {
  // Infinite distance (different components) is stored as kInf.
  static constexpr int kInf = -1;
  int n = 0;
  std::vector<int> d;
  explicit DistMatrix(int size) : n(size), d(static_cast<size_t>(size) * size, kInf) {}
  int at(int i, int j) const { return d[static_cast<size_t>(i) * n + j]; }
  int& at(int i, int j) { return d[static_cast<size_t>(i) * n + j]; }
};

DistMatrix bfs_distances(const Graph& g);
// Largest finite distance, i.e. the max over component diameters; 0 for n=1.
int diameter(const DistMatrix& d);

// ----- graph6 -----

// Throws std::runtime_error with a message naming the defect (bad header
// byte, truncated bit string, vertex count out of range).
Graph parse_graph6(const std::string& line);
std::string to_graph6(const Graph& g);
// One graph per line, '#' comments and blank lines skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

// ----- edge-list text form -----

// "n; u v; u v; ..." with 1-based vertex labels, e.g. "3; 1 2; 2 3" for P_3.
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

// Reads a graph from a file, picking the format from the extension: .g6 means
// graph6 (first non-comment line), anything else the edge-list form.
Graph read_graph_file(const std::string& path);

// ----- canonical forms and isomorphism (n <= 16) -----

// Packed lower-triangle bits of the canonically relabelled adjacency matrix.
struct CanonicalForm {
  int n = 0;
  uint64_t bits[2] = {0, 0};
  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalFormHash {
  size_t operator()(const CanonicalForm& c) const {
    uint64_t h = c.bits[0] * 0x9e3779b97f4a7c15ULL;
    h ^= c.bits[1] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<size_t>(h ^ (uint64_t(c.n) << 56));
  }
};

CanonicalForm canonical_form(const Graph& g);
// Permutation realising the canonical form: perm[new_position] = old vertex.
std::vector<int> canonical_labeling(const Graph& g);
Graph apply_labeling(const Graph& g, const std::vector<int>& perm);
Graph canonical_graph(const Graph& g);
std::string canonical_graph6(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

// ----- isomorphism-class enumeration -----

// All connected graphs on n vertices (n <= 7), one canonical representative
// per class, sorted by canonical form.  Brute force over the 2^(n(n-1)/2)
// labelled graphs with a connectivity pre-filter and canonical dedup.
std::vector<Graph> enumerate_connected(int n);

// All graphs on n vertices (n <= 9) by vertex augmentation: every class on
// n-1 vertices extended by all 2^(n-1) attachments, deduped canonically.
// Feeds the graph6 universe files for the larger survey sizes.
std::vector<Graph> enumerate_all(int n);

}  // namespace cospec
