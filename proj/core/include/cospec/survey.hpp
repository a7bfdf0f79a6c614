#pragma once

// Exhaustive cospectrality survey over one-per-isomorphism-class universes of
// connected graphs: modular fingerprints bucket the universe, exact bivariate
// and multivariate characteristic polynomials confirm, and every confirmed
// pair is run through construction recognition.  Output is deterministic for
// a fixed seed and budget, independent of thread count.

#include <cstdint>
#include <string>
#include <vector>

#include "cospec/graph.hpp"
#include "cospec/switching.hpp"

namespace cospec {

struct SurveyOptions {
  uint64_t seed = 1;          // drives the fingerprint q samples, recorded
  int fingerprint_rounds = 3;
  long match_budget = 2000000;  // per pair, in candidate part collections
  int threads = 1;
};

// One row per unordered pair cospectral at every q.  Graphs are identified by
// canonical graph6 with a < b, so reports are diffable across runs.
struct PairRecord {
  std::string a, b;
  bool df = false;  // multivariate charpolys equal (cospectral for every f)
  MatchResult::Status construction = MatchResult::Status::none;
  std::string config;    // switch text when found, on graph a unless swapped
  bool swapped = false;  // construction found from b to a
  long examined = 0;     // match search nodes spent on this pair
};

struct SurveySummary {
  int n = 0;
  long long graphs = 0;
  uint64_t seed = 0;
  uint64_t prime = 0;
  std::vector<uint64_t> sample_qs;  // fingerprint evaluation points
  long match_budget = 0;
  long long dq_pairs = 0;
  long long df_pairs = 0;
  long long construction_pairs = 0;
  long long budget_exhausted_pairs = 0;
};

struct SurveyResult {
  SurveySummary summary;
  std::vector<PairRecord> pairs;  // sorted by (a, b)
};

// The universe must hold connected graphs of one order, one representative
// per isomorphism class; throws std::invalid_argument on duplicates (by
// canonical form), a disconnected entry, or mixed orders.
SurveyResult run_survey(const std::vector<Graph>& universe,
                        const SurveyOptions& opts = {});

// Writes summary.json and pairs.csv under dir (created if needed).  Bytes
// depend only on the result contents: no clocks, no machine identifiers.
void write_report(const SurveyResult& r, const std::string& dir);

}  // namespace cospec
