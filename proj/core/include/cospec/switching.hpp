#pragma once

// Distance-matrix switching: partition-based configurations, the switch
// operation itself, the rational similarity certificate that proves a switched
// pair cospectral for every distance function at once, and the exhaustive
// search that recognises when a given cospectral pair arises this way.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "cospec/distance.hpp"
#include "cospec/graph.hpp"
#include "cospec/matrix.hpp"

namespace cospec {

// One connected piece of the graph outside the switching sets.  Every vertex
// of a component attaches to its associated part with all of it, none of it,
// or exactly the component's half-set; `half` is empty when no vertex of the
// component uses a half attachment.
struct BComponent {
  uint64_t verts = 0;
  int part = -1;        // index into SwitchConfig::parts; -1 when unattached
  uint64_t half = 0;    // subset of parts[part], exactly half its size, or 0

  bool operator==(const BComponent&) const = default;
};

struct SwitchConfig {
  std::vector<uint64_t> parts;            // pairwise disjoint vertex masks
  std::vector<BComponent> comps;
  std::vector<std::pair<int, int>> extra_edges;  // between components on one part

  // Text form with 1-based labels, e.g.
  //   "A: {4,5,6,7}; B: {1}->half{4,5}, {2}->half{4,6}, {3}->none; extra: {1-2}"
  // Multiple parts are listed comma-separated after "A:".
  std::string str() const;
  static SwitchConfig parse(const std::string& text);

  bool operator==(const SwitchConfig&) const = default;
};

struct ValidationReport {
  std::vector<std::string> violations;  // hard failures, empty when usable
  std::vector<std::string> soft;        // connectivity of the part union
  bool ok() const { return violations.empty(); }
  bool ok_strict() const { return ok() && soft.empty(); }
};

// Checks every structural requirement: even part sizes, induced regularity of
// degree >= half the part size, all-or-none joins between parts, component
// attachment types, half-set sizes, extra-edge legality, global connectivity.
ValidationReport validate_config(const Graph& g, const SwitchConfig& c);

// Replaces, for every component vertex attached to exactly its half-set, that
// attachment by the complementary half.  Throws if the config fails hard
// validation against g.
Graph apply_switch(const Graph& g, const SwitchConfig& c);

// Block form of the rational involution: identity outside `blocks`, and
// (2/|b|)J - I on each listed vertex mask b.
struct Similarity {
  int n = 0;
  std::vector<uint64_t> blocks;
  RingMatrix<mpq_class> to_matrix() const;
};

Similarity build_similarity(int n, const SwitchConfig& c);

struct LevelCheck {
  int level;
  bool ok;
  int i = -1, j = -1;  // first differing entry when !ok
};

// Conjugates every distance-level matrix of g1 by S and compares with g2's:
// S M_k(g1) S = M_k(g2) for all k up to the larger diameter.  Passing makes
// the pair cospectral for every function of distance simultaneously.
struct Certificate {
  bool ok = false;
  std::vector<LevelCheck> levels;
  std::string failure;  // empty when ok
};

Certificate certify_pair(const Graph& g1, const Graph& g2, const SwitchConfig& c);
// Same check but with an explicit similarity matrix (used by the coalescing
// extension, whose S is larger than build_similarity's).
Certificate certify_with(const Graph& g1, const Graph& g2,
                         const RingMatrix<mpq_class>& s);

// ----- construction recognition -----

struct MatchOptions {
  // Candidate part-collections examined (both orientations together) before
  // giving up.  Deterministic, so survey reruns stay byte-identical.
  long budget = 2000000;
  int max_parts = 0;             // 0 = unbounded
  bool require_part_union_connected = true;
};

struct MatchResult {
  enum class Status { found, none, budget_exhausted };
  Status status = Status::none;
  SwitchConfig config;   // valid when found
  bool swapped = false;  // config lives on g2 and switches to g1
  long examined = 0;     // candidate collections over both orientations
};

// Searches both orientations for a configuration whose switch maps one graph
// to the other (up to isomorphism) with a passing certificate.  For a fixed
// part collection the component structure is forced, so the enumeration over
// collections is exhaustive.
MatchResult match_construction(const Graph& g1, const Graph& g2,
                               const MatchOptions& opts = {});

// ----- coalescing -----

// Glues `glue` (rooted at `root`) onto every vertex of part `part_index` in
// both graphs and re-certifies.  The extended similarity repeats the part's
// involution block across each class of copied vertices; identity blocks on
// the copies would not commute with the level matrices.
struct CoalescedPair {
  Graph h1, h2;
  Similarity sim;
  Certificate cert;
};

CoalescedPair coalesce_on_part(const Graph& g1, const Graph& g2,
                               const SwitchConfig& c, int part_index,
                               const Graph& glue, int root);

}  // namespace cospec
