#include "cospec/survey.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cospec/graph.hpp"
#include "cospec/qanalysis.hpp"
#include "cospec/switching.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace cospec;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::filesystem::path fresh_dir(const std::string& tag) {
  auto d = std::filesystem::temp_directory_path() / ("cospec_test_" + tag);
  std::filesystem::remove_all(d);
  return d;
}

}  // namespace

TEST_CASE("the seven-vertex survey reproduces the frozen counts") {
  std::vector<Graph> universe = enumerate_connected(7);
  REQUIRE(universe.size() == 853);
  SurveyResult res = run_survey(universe);

  CHECK(res.summary.n == 7);
  CHECK(res.summary.graphs == 853);
  CHECK(res.summary.dq_pairs == 11);
  CHECK(res.summary.df_pairs == 10);
  CHECK(res.summary.construction_pairs == 10);
  CHECK(res.summary.budget_exhausted_pairs == 0);
  REQUIRE(res.pairs.size() == 11);

  int df_rows = 0, found_rows = 0;
  std::string prev;
  for (const PairRecord& rec : res.pairs) {
    CHECK(rec.a < rec.b);
    CHECK(rec.a + "|" + rec.b > prev);  // sorted and unique
    prev = rec.a + "|" + rec.b;

    Graph a = parse_graph6(rec.a);
    Graph b = parse_graph6(rec.b);
    CHECK(cospectral_all_q(a, b));
    CHECK(cospectral_generalized(a, b) == rec.df);
    if (rec.df) ++df_rows;

    if (rec.construction == MatchResult::Status::found) {
      ++found_rows;
      CHECK(rec.df);  // a switch certifies every distance function at once
      CHECK(rec.examined > 0);
      SwitchConfig c = SwitchConfig::parse(rec.config);
      const Graph& src = rec.swapped ? b : a;
      const Graph& dst = rec.swapped ? a : b;
      CHECK(validate_config(src, c).ok());
      Graph sw = apply_switch(src, c);
      CHECK(are_isomorphic(sw, dst));
      CHECK(certify_pair(src, sw, c).ok);
    } else {
      CHECK(rec.config.empty());
    }
  }
  CHECK(df_rows == 10);
  CHECK(found_rows == 10);
}

TEST_CASE("universes without cospectral pairs yield empty reports") {
  Graph k1(1);
  SurveyResult one = run_survey({k1});
  CHECK(one.summary.graphs == 1);
  CHECK(one.summary.dq_pairs == 0);
  CHECK(one.pairs.empty());

  SurveyResult six = run_survey(enumerate_connected(4));
  CHECK(six.summary.graphs == 6);
  CHECK(six.summary.dq_pairs == 0);

  SurveyResult empty = run_survey({});
  CHECK(empty.summary.graphs == 0);
  CHECK(empty.pairs.empty());
}

TEST_CASE("the survey rejects malformed universes") {
  Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  Graph p3_relabeled = Graph::from_edges(3, {{0, 2}, {2, 1}});
  Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  Graph split = Graph::from_edges(4, {{0, 1}, {2, 3}});

  CHECK_THROWS_AS(run_survey({p3, k3, p3_relabeled}), std::invalid_argument);
  CHECK_THROWS_AS(run_survey({split}), std::invalid_argument);
  CHECK_THROWS_AS(run_survey({k3, Graph::from_edges(2, {{0, 1}})}),
                  std::invalid_argument);
}

TEST_CASE("reports are byte-identical across reruns and thread counts") {
  std::vector<Graph> universe = enumerate_connected(7);
  SurveyOptions opts;
  opts.seed = 99;

  auto da = fresh_dir("survey_a");
  auto db = fresh_dir("survey_b");
  auto dc = fresh_dir("survey_c");
  write_report(run_survey(universe, opts), da.string());
  write_report(run_survey(universe, opts), db.string());
  SurveyOptions threaded = opts;
  threaded.threads = 2;
  write_report(run_survey(universe, threaded), dc.string());

  std::string sa = slurp(da / "summary.json");
  std::string pa = slurp(da / "pairs.csv");
  REQUIRE(!sa.empty());
  REQUIRE(!pa.empty());
  CHECK(sa == slurp(db / "summary.json"));
  CHECK(pa == slurp(db / "pairs.csv"));
  CHECK(sa == slurp(dc / "summary.json"));
  CHECK(pa == slurp(dc / "pairs.csv"));

  // the summary carries the run parameters and the frozen counts
  auto j = nlohmann::json::parse(sa);
  CHECK(j["n"] == 7);
  CHECK(j["graphs"] == 853);
  CHECK(j["seed"] == 99);
  CHECK(j["dq_pairs"] == 11);
  CHECK(j["df_pairs"] == 10);
  CHECK(j["construction_pairs"] == 10);
  CHECK(j["construction_pct_of_dq"] == 91);
  CHECK(j["construction_pct_of_df"] == 100);
  CHECK(j["fingerprint_qs"].size() == 3);

  // csv: header plus one line per pair, configs quoted
  CHECK(pa.substr(0, pa.find('\n')) ==
        "a,b,dq,df,construction,swapped,examined,config");
  CHECK(std::count(pa.begin(), pa.end(), '\n') == 12);

  std::filesystem::remove_all(da);
  std::filesystem::remove_all(db);
  std::filesystem::remove_all(dc);
}
