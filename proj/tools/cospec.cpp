// cospec: command-line front end for the cospectrality toolkit.
//
// Exit codes: 0 success / verified, 2 input error, 3 a requested verification
// or match came back negative, 4 a search or sample budget ran out.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cospec/distance.hpp"
#include "cospec/families.hpp"
#include "cospec/graph.hpp"
#include "cospec/matrix.hpp"
#include "cospec/multipoly.hpp"
#include "cospec/poly.hpp"
#include "cospec/qanalysis.hpp"
#include "cospec/survey.hpp"
#include "cospec/switching.hpp"

using nlohmann::ordered_json;
using namespace cospec;

namespace {

constexpr int kOk = 0, kInput = 2, kVerify = 3, kBudget = 4;

mpq_class parse_rat(const std::string& s) {
  mpq_class q;
  try {
    q = mpq_class(s, 10);
  } catch (const std::invalid_argument&) {
    throw std::runtime_error("not a rational (use p or p/q): " + s);
  }
  if (q.get_den() == 0) throw std::runtime_error("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::vector<mpq_class> parse_rat_list(const std::string& s) {
  std::vector<mpq_class> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_rat(item));
  }
  if (out.empty()) throw std::runtime_error("empty rational list");
  return out;
}

// Config options accept either a path to a text file or the literal text.
std::string config_text(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

// Characteristic polynomial over Z[t_0..t_D], rendered descending in x.
std::string fpoly_str(const std::vector<MultiPoly>& asc) {
  std::string out;
  for (int k = static_cast<int>(asc.size()) - 1; k >= 0; --k) {
    if (asc[k] == MultiPoly()) continue;
    std::string c = asc[k].str();
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += "(" + c + ")";
    } else {
      std::string xs = k == 1 ? "x" : "x^" + std::to_string(k);
      out += c == "1" ? xs : "(" + c + ")*" + xs;
    }
  }
  return out.empty() ? "0" : out;
}

ordered_json graph_json(const Graph& g) {
  return ordered_json{{"graph6", to_graph6(g)}, {"edges", to_edge_list(g)}};
}

void print_graph(const std::string& tag, const Graph& g) {
  std::cout << tag << " graph6: " << to_graph6(g) << "\n"
            << tag << " edges:  " << to_edge_list(g) << "\n";
}

ordered_json cert_json(const Certificate& c) {
  ordered_json levels = ordered_json::array();
  for (const LevelCheck& l : c.levels)
    levels.push_back({{"level", l.level}, {"ok", l.ok}});
  ordered_json j{{"ok", c.ok}, {"levels", levels}};
  if (!c.ok) j["failure"] = c.failure;
  return j;
}

void print_cert(const Certificate& c) {
  for (const LevelCheck& l : c.levels)
    std::cout << "level " << (l.level < 0 ? std::string("inf")
                                          : std::to_string(l.level))
              << ": " << (l.ok ? "ok" : "MISMATCH") << "\n";
  std::cout << "certificate: " << (c.ok ? "pass" : "FAIL " + c.failure) << "\n";
}

// Similarity input: a JSON file with either "blocks" (1-based vertex lists,
// unlisted vertices get identity) or "matrix" (rows of rationals as strings
// or integers); or a switch config whose parts define the blocks.
RingMatrix<mpq_class> load_similarity(const std::string& sim_path,
                                      const std::string& config_arg,
                                      const Graph& g) {
  if (!config_arg.empty()) {
    SwitchConfig c = SwitchConfig::parse(config_text(config_arg));
    return build_similarity(g.n, c).to_matrix();
  }
  std::ifstream in(sim_path);
  if (!in) throw std::runtime_error("cannot open " + sim_path);
  ordered_json j = ordered_json::parse(in);
  if (j.contains("blocks")) {
    Similarity s;
    s.n = g.n;
    for (const auto& blk : j["blocks"]) {
      uint64_t mask = 0;
      for (long v : blk) {
        if (v < 1 || v > g.n)
          throw std::runtime_error("block vertex out of range: " +
                                   std::to_string(v));
        mask |= uint64_t(1) << (v - 1);
      }
      s.blocks.push_back(mask);
    }
    return s.to_matrix();
  }
  if (j.contains("matrix")) {
    const auto& rows = j["matrix"];
    RingMatrix<mpq_class> m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.n; ++i) {
      if (static_cast<int>(rows[i].size()) != m.n)
        throw std::runtime_error("similarity matrix is not square");
      for (int k = 0; k < m.n; ++k) {
        const auto& cell = rows[i][k];
        m.at(i, k) = cell.is_string() ? parse_rat(cell.get<std::string>())
                                      : mpq_class(cell.get<long>());
      }
    }
    return m;
  }
  throw std::runtime_error("similarity file needs \"blocks\" or \"matrix\"");
}

void emit(bool as_json, const ordered_json& j, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact construction, certification and search for distance-matrix"
               " cospectral graph pairs"};
  app.require_subcommand(1);
  int rc = kOk;

  // ----- dist -----
  struct DistArgs {
    std::string graph;
    bool json = false;
  };
  auto dist_a = std::make_shared<DistArgs>();
  {
    CLI::App* sub = app.add_subcommand("dist", "distance matrix and levels");
    sub->add_option("graph", dist_a->graph, "graph file (.g6 or edge list)")
        ->required();
    sub->add_flag("--json", dist_a->json);
    sub->callback([dist_a, &rc] {
      Graph g = read_graph_file(dist_a->graph);
      DistMatrix d = bfs_distances(g);
      int diam = diameter(d);
      if (dist_a->json) {
        ordered_json rows = ordered_json::array();
        for (int i = 0; i < g.n; ++i) {
          ordered_json row = ordered_json::array();
          for (int j = 0; j < g.n; ++j)
            row.push_back(d.at(i, j) == DistMatrix::kInf
                              ? ordered_json(nullptr)
                              : ordered_json(d.at(i, j)));
          rows.push_back(row);
        }
        emit(true,
             {{"n", g.n},
              {"diameter", diam},
              {"connected", is_connected(g)},
              {"dist", rows}},
             "");
        return;
      }
      for (int i = 0; i < g.n; ++i) {
        for (int j = 0; j < g.n; ++j) {
          if (j) std::cout << ' ';
          if (d.at(i, j) == DistMatrix::kInf)
            std::cout << "inf";
          else
            std::cout << d.at(i, j);
        }
        std::cout << "\n";
      }
      std::cout << "diameter: " << diam << "\n";
      rc = kOk;
    });
  }

  // ----- charpoly -----
  struct CharpolyArgs {
    std::string graph, q;
    bool sym_q = false, sym_f = false, json = false;
  };
  auto cp_a = std::make_shared<CharpolyArgs>();
  {
    CLI::App* sub = app.add_subcommand(
        "charpoly", "characteristic polynomial of the distance matrix");
    sub->add_option("graph", cp_a->graph)->required();
    CLI::Option* oq = sub->add_option("--q", cp_a->q, "evaluate at rational q");
    CLI::Option* osq =
        sub->add_flag("--symbolic-q", cp_a->sym_q, "over Z[q] (default)");
    CLI::Option* osf = sub->add_flag("--symbolic-f", cp_a->sym_f,
                                     "over Z[t_0..t_D], one t per distance");
    oq->excludes(osq)->excludes(osf);
    osq->excludes(osf);
    sub->add_flag("--json", cp_a->json);
    sub->callback([cp_a] {
      Graph g = read_graph_file(cp_a->graph);
      std::string text, mode;
      if (!cp_a->q.empty()) {
        mode = "q=" + cp_a->q;
        text = ratpoly_str(charpoly_at(g, parse_rat(cp_a->q)));
      } else if (cp_a->sym_f) {
        mode = "symbolic-f";
        text = fpoly_str(charpoly_berkowitz(generalized_distance_symbolic(g)));
      } else {
        mode = "symbolic-q";
        text = charpoly_q(g).str();
      }
      emit(cp_a->json, {{"mode", mode}, {"charpoly", text}}, text + "\n");
    });
  }

  // ----- cospectral -----
  struct CospecArgs {
    std::string g1, g2, q;
    bool all_q = false, generalized = false, locus = false, json = false;
  };
  auto co_a = std::make_shared<CospecArgs>();
  {
    CLI::App* sub = app.add_subcommand(
        "cospectral", "test cospectrality of two graphs' distance matrices");
    sub->add_option("g1", co_a->g1)->required();
    sub->add_option("g2", co_a->g2)->required();
    CLI::Option* oq = sub->add_option("--q", co_a->q, "at one rational q");
    CLI::Option* oa = sub->add_flag("--all-q", co_a->all_q,
                                    "bivariate equality, i.e. every q (default)");
    CLI::Option* og = sub->add_flag("--generalized", co_a->generalized,
                                    "every function of distance");
    oq->excludes(oa)->excludes(og);
    oa->excludes(og);
    sub->add_flag("--locus", co_a->locus, "also report the q locus");
    sub->add_flag("--json", co_a->json);
    sub->callback([co_a, &rc] {
      Graph a = read_graph_file(co_a->g1), b = read_graph_file(co_a->g2);
      std::string mode;
      bool verdict;
      if (!co_a->q.empty()) {
        mode = "q=" + co_a->q;
        verdict = cospectral_at(a, b, parse_rat(co_a->q));
      } else if (co_a->generalized) {
        mode = "generalized";
        verdict = cospectral_generalized(a, b);
      } else {
        mode = "all-q";
        verdict = cospectral_all_q(a, b);
      }
      ordered_json j{{"mode", mode}, {"cospectral", verdict}};
      std::string text = std::string("cospectral (") + mode + "): " +
                         (verdict ? "true" : "false") + "\n";
      if (co_a->locus) {
        QLocus loc = q_locus(a, b);
        if (loc.identically_zero) {
          j["locus"] = "all q";
          text += "locus: all q\n";
        } else {
          ordered_json roots = ordered_json::array();
          std::string rs;
          for (const mpq_class& r : loc.roots) {
            roots.push_back(r.get_str());
            rs += (rs.empty() ? "" : ", ") + r.get_str();
          }
          j["locus_gcd"] = loc.g.str();
          j["rational_roots"] = roots;
          text += "locus gcd: " + loc.g.str() + "\nrational roots: " + rs + "\n";
        }
      }
      emit(co_a->json, j, text);
      rc = verdict ? kOk : kVerify;
    });
  }

  // ----- qlocus -----
  struct QlocusArgs {
    std::string g1, g2;
    bool json = false;
  };
  auto ql_a = std::make_shared<QlocusArgs>();
  {
    CLI::App* sub = app.add_subcommand(
        "qlocus", "q values where the pair is exponential-distance cospectral");
    sub->add_option("g1", ql_a->g1)->required();
    sub->add_option("g2", ql_a->g2)->required();
    sub->add_flag("--json", ql_a->json);
    sub->callback([ql_a] {
      Graph a = read_graph_file(ql_a->g1), b = read_graph_file(ql_a->g2);
      QLocus loc = q_locus(a, b);
      if (loc.identically_zero) {
        emit(ql_a->json, {{"identically_zero", true}},
             "charpolys agree identically: cospectral for every q\n");
        return;
      }
      ordered_json roots = ordered_json::array();
      std::string rs;
      for (const mpq_class& r : loc.roots) {
        roots.push_back(r.get_str());
        rs += (rs.empty() ? "" : ", ") + r.get_str();
      }
      emit(ql_a->json,
           {{"identically_zero", false},
            {"gcd", loc.g.str()},
            {"rational_roots", roots}},
           "gcd of coefficient differences: " + loc.g.str() +
               "\nrational roots: " + (rs.empty() ? "(none)" : rs) + "\n");
    });
  }

  // ----- switch -----
  struct SwitchArgs {
    std::string graph, config, out;
    bool certify = false, json = false;
  };
  auto sw_a = std::make_shared<SwitchArgs>();
  {
    CLI::App* sub =
        app.add_subcommand("switch", "apply a switching configuration");
    sub->add_option("graph", sw_a->graph)->required();
    sub->add_option("--config", sw_a->config, "config text or file")->required();
    sub->add_flag("--certify", sw_a->certify, "also certify the result");
    sub->add_option("-o,--out", sw_a->out, "write the switched graph6 here");
    sub->add_flag("--json", sw_a->json);
    sub->callback([sw_a, &rc] {
      Graph g = read_graph_file(sw_a->graph);
      SwitchConfig c = SwitchConfig::parse(config_text(sw_a->config));
      ValidationReport v = validate_config(g, c);
      if (!v.ok()) {
        std::string msg = "invalid configuration:";
        for (const std::string& s : v.violations) msg += "\n  " + s;
        throw std::runtime_error(msg);
      }
      Graph h = apply_switch(g, c);
      ordered_json j{{"switched", graph_json(h)}};
      std::string text;
      for (const std::string& s : v.soft) text += "note: " + s + "\n";
      text += "switched graph6: " + to_graph6(h) + "\nswitched edges:  " +
              to_edge_list(h) + "\n";
      if (sw_a->certify) {
        Certificate cert = certify_pair(g, h, c);
        j["certificate"] = cert_json(cert);
        text += cert.ok ? "certificate: pass\n"
                        : "certificate: FAIL " + cert.failure + "\n";
        if (!cert.ok) rc = kVerify;
      }
      if (!sw_a->out.empty()) {
        std::ofstream out(sw_a->out);
        out << to_graph6(h) << "\n";
      }
      emit(sw_a->json, j, text);
    });
  }

  // ----- match -----
  struct MatchArgs {
    std::string g1, g2;
    long budget = 2000000;
    int max_parts = 0;
    bool json = false;
  };
  auto ma_a = std::make_shared<MatchArgs>();
  {
    CLI::App* sub = app.add_subcommand(
        "match", "search for a switching configuration linking two graphs");
    sub->add_option("g1", ma_a->g1)->required();
    sub->add_option("g2", ma_a->g2)->required();
    sub->add_option("--budget", ma_a->budget,
                    "candidate part collections to try before giving up");
    sub->add_option("--max-parts", ma_a->max_parts, "0 = unbounded");
    sub->add_flag("--json", ma_a->json);
    sub->callback([ma_a, &rc] {
      Graph a = read_graph_file(ma_a->g1), b = read_graph_file(ma_a->g2);
      MatchOptions opts;
      opts.budget = ma_a->budget;
      opts.max_parts = ma_a->max_parts;
      MatchResult m = match_construction(a, b, opts);
      ordered_json j{{"examined", m.examined}};
      std::string text;
      switch (m.status) {
        case MatchResult::Status::found:
          j["status"] = "found";
          j["config"] = m.config.str();
          j["swapped"] = m.swapped;
          text = "found" + std::string(m.swapped ? " (from g2 to g1)" : "") +
                 ": " + m.config.str() + "\n";
          rc = kOk;
          break;
        case MatchResult::Status::none:
          j["status"] = "none";
          text = "none: no configuration within the search space\n";
          rc = kVerify;
          break;
        case MatchResult::Status::budget_exhausted:
          j["status"] = "budget";
          text = "budget exhausted after " + std::to_string(m.examined) +
                 " candidates\n";
          rc = kBudget;
          break;
      }
      emit(ma_a->json, j, text);
    });
  }

  // ----- family -----
  struct FamilyArgs {
    std::string which;
    int n = 0;
    bool verify = false, json = false;
  };
  auto fa_a = std::make_shared<FamilyArgs>();
  {
    CLI::App* sub = app.add_subcommand(
        "family", "generate a q = 1/2 cospectral family pair");
    sub->add_option("which", fa_a->which, "double-k4 | k6-minus-edge")
        ->required();
    sub->add_option("--n", fa_a->n, "total vertices, >= 8")->required();
    sub->add_flag("--verify", fa_a->verify,
                  "check q=1/2 cospectrality, the closed form, and the locus");
    sub->add_flag("--json", fa_a->json);
    sub->callback([fa_a, &rc] {
      Family f;
      if (!parse_family(fa_a->which, f))
        throw std::runtime_error("unknown family: " + fa_a->which);
      FamilyPair p = family_pair(f, fa_a->n);
      ordered_json j{{"family", family_name(f)},
                     {"n", p.n},
                     {"g", graph_json(p.g)},
                     {"h", graph_json(p.h)}};
      std::string text;
      if (!fa_a->json) {
        print_graph("G", p.g);
        print_graph("H", p.h);
      }
      if (fa_a->verify) {
        bool at_half = cospectral_at(p.g, p.h, mpq_class(1, 2));
        bool closed = closed_form_charpoly(f, p.n) == charpoly_q(p.h);
        QLocus loc = q_locus(p.g, p.h);
        bool only_half = !loc.identically_zero;
        if (only_half) {
          bool seen_half = false;
          for (const mpq_class& r : loc.roots) {
            if (r > 0 && r < 1) {
              if (r == mpq_class(1, 2))
                seen_half = true;
              else
                only_half = false;
            }
          }
          only_half = only_half && seen_half;
        }
        bool ok = at_half && closed && only_half;
        j["verify"] = {{"cospectral_at_half", at_half},
                       {"closed_form_matches", closed},
                       {"half_only_rational_root_in_01", only_half},
                       {"ok", ok}};
        text += std::string("cospectral at q=1/2: ") +
                (at_half ? "true" : "false") + "\nclosed form matches: " +
                (closed ? "true" : "false") +
                "\n1/2 is the only rational root in (0,1): " +
                (only_half ? "true" : "false") + "\n";
        if (!ok) rc = kVerify;
      }
      emit(fa_a->json, j, text);
    });
  }

  // ----- coalesce -----
  struct CoalesceArgs {
    std::string g1, g2, config, glue, out;
    int part = 1, root = 1;
    bool json = false;
  };
  auto cl_a = std::make_shared<CoalesceArgs>();
  {
    CLI::App* sub = app.add_subcommand(
        "coalesce", "glue a rooted graph onto every vertex of one part");
    sub->add_option("g1", cl_a->g1)->required();
    sub->add_option("g2", cl_a->g2)->required();
    sub->add_option("--config", cl_a->config, "config text or file")->required();
    sub->add_option("--part", cl_a->part, "1-based part index in the config");
    sub->add_option("--glue", cl_a->glue, "rooted graph file")->required();
    sub->add_option("--root", cl_a->root, "1-based root vertex of the glue");
    sub->add_option("-o,--out", cl_a->out, "graph6 output file prefix");
    sub->add_flag("--json", cl_a->json);
    sub->callback([cl_a, &rc] {
      Graph a = read_graph_file(cl_a->g1), b = read_graph_file(cl_a->g2);
      Graph glue = read_graph_file(cl_a->glue);
      SwitchConfig c = SwitchConfig::parse(config_text(cl_a->config));
      CoalescedPair p =
          coalesce_on_part(a, b, c, cl_a->part - 1, glue, cl_a->root - 1);
      ordered_json j{{"g1", graph_json(p.h1)},
                     {"g2", graph_json(p.h2)},
                     {"certificate", cert_json(p.cert)}};
      std::string text;
      if (!cl_a->json) {
        print_graph("G1'", p.h1);
        print_graph("G2'", p.h2);
        print_cert(p.cert);
      }
      if (!p.cert.ok) rc = kVerify;
      if (!cl_a->out.empty()) {
        std::ofstream o1(cl_a->out + "1.g6"), o2(cl_a->out + "2.g6");
        o1 << to_graph6(p.h1) << "\n";
        o2 << to_graph6(p.h2) << "\n";
      }
      emit(cl_a->json, j, text);
    });
  }

  // ----- verify-qsample -----
  struct QsampleArgs {
    std::string g1, g2, sim, config, qs;
    bool json = false;
  };
  auto qs_a = std::make_shared<QsampleArgs>();
  {
    CLI::App* sub = app.add_subcommand(
        "verify-qsample",
        "certify all-q cospectrality from finitely many q samples");
    sub->add_option("g1", qs_a->g1)->required();
    sub->add_option("g2", qs_a->g2)->required();
    CLI::Option* os = sub->add_option("--sim", qs_a->sim, "similarity JSON");
    CLI::Option* oc =
        sub->add_option("--config", qs_a->config, "derive S from this config");
    os->excludes(oc);
    sub->add_option("--q", qs_a->qs, "comma-separated rationals")->required();
    sub->add_flag("--json", qs_a->json);
    sub->callback([qs_a, &rc] {
      Graph a = read_graph_file(qs_a->g1), b = read_graph_file(qs_a->g2);
      if (qs_a->sim.empty() && qs_a->config.empty())
        throw std::runtime_error("need --sim or --config");
      RingMatrix<mpq_class> s = load_similarity(qs_a->sim, qs_a->config, a);
      QSampleReport rep = verify_qsample(a, b, s, parse_rat_list(qs_a->qs));
      const char* status = rep.status == QSampleStatus::certified ? "certified"
                           : rep.status == QSampleStatus::incomplete
                               ? "incomplete"
                               : "refuted";
      ordered_json acc = ordered_json::array();
      for (const mpq_class& q : rep.accepted) acc.push_back(q.get_str());
      ordered_json j{{"status", status},
                     {"required", rep.required},
                     {"accepted", acc}};
      if (!rep.detail.empty()) j["detail"] = rep.detail;
      std::string text = std::string("status: ") + status + " (" +
                         std::to_string(rep.accepted.size()) + "/" +
                         std::to_string(rep.required) +
                         " distinct nonzero samples)\n";
      if (!rep.detail.empty()) text += rep.detail + "\n";
      emit(qs_a->json, j, text);
      rc = rep.status == QSampleStatus::certified ? kOk
           : rep.status == QSampleStatus::incomplete ? kBudget
                                                     : kVerify;
    });
  }

  // ----- probe -----
  struct ProbeArgs {
    std::string g1, g2, sim, config, qs;
    bool json = false;
  };
  auto pr_a = std::make_shared<ProbeArgs>();
  {
    CLI::App* sub = app.add_subcommand(
        "probe", "explore which q values one similarity matrix certifies");
    sub->add_option("g1", pr_a->g1)->required();
    sub->add_option("g2", pr_a->g2)->required();
    CLI::Option* os = sub->add_option("--sim", pr_a->sim, "similarity JSON");
    CLI::Option* oc =
        sub->add_option("--config", pr_a->config, "derive S from this config");
    os->excludes(oc);
    sub->add_option("--q", pr_a->qs, "candidate rationals (default grid)");
    sub->add_flag("--json", pr_a->json);
    sub->callback([pr_a] {
      Graph a = read_graph_file(pr_a->g1), b = read_graph_file(pr_a->g2);
      if (pr_a->sim.empty() && pr_a->config.empty())
        throw std::runtime_error("need --sim or --config");
      RingMatrix<mpq_class> s = load_similarity(pr_a->sim, pr_a->config, a);
      std::vector<mpq_class> cand;
      if (!pr_a->qs.empty()) cand = parse_rat_list(pr_a->qs);
      ProbeReport rep = conjecture_probe(a, b, s, cand);
      ordered_json qs = ordered_json::array();
      std::string list;
      for (const mpq_class& q : rep.intertwined) {
        qs.push_back(q.get_str());
        list += (list.empty() ? "" : ", ") + q.get_str();
      }
      emit(pr_a->json,
           {{"intertwined", qs},
            {"all_levels", rep.all_levels},
            {"counterexample", rep.counterexample}},
           "intertwined at: " + (list.empty() ? "(none)" : list) +
               "\nall levels: " + (rep.all_levels ? "true" : "false") +
               "\nsame-S counterexample: " +
               (rep.counterexample ? "TRUE (two informative q, levels fail)"
                                   : "false") +
               "\n");
    });
  }

  // ----- survey -----
  struct SurveyArgs {
    int n = 0;
    std::string graph6, out;
    uint64_t seed = 1;
    long budget = 2000000;
    int threads = 1;
    bool json = false;
  };
  auto su_a = std::make_shared<SurveyArgs>();
  {
    CLI::App* sub = app.add_subcommand(
        "survey", "exhaustive cospectral-pair survey over a universe");
    CLI::Option* on =
        sub->add_option("--n", su_a->n, "enumerate internally (n <= 7)");
    CLI::Option* og = sub->add_option("--graph6", su_a->graph6,
                                      "universe file, one graph per line");
    on->excludes(og);
    sub->add_option("--out", su_a->out, "report directory")->required();
    sub->add_option("--seed", su_a->seed, "fingerprint sampling seed");
    sub->add_option("--budget", su_a->budget, "match budget per pair (nodes)");
    sub->add_option("--threads", su_a->threads);
    sub->add_flag("--json", su_a->json);
    sub->callback([su_a] {
      std::vector<Graph> universe;
      if (su_a->n > 0) {
        if (su_a->n > 7)
          throw std::runtime_error(
              "internal enumeration stops at n=7; generate a universe file "
              "with `cospec gen` and pass --graph6");
        universe = enumerate_connected(su_a->n);
      } else if (!su_a->graph6.empty()) {
        universe = read_graph6_file(su_a->graph6);
      } else {
        throw std::runtime_error("need --n or --graph6");
      }
      SurveyOptions opts;
      opts.seed = su_a->seed;
      opts.match_budget = su_a->budget;
      opts.threads = su_a->threads;
      SurveyResult res = run_survey(universe, opts);
      write_report(res, su_a->out);
      ordered_json j{{"n", res.summary.n},
                     {"graphs", res.summary.graphs},
                     {"dq_pairs", res.summary.dq_pairs},
                     {"df_pairs", res.summary.df_pairs},
                     {"construction_pairs", res.summary.construction_pairs},
                     {"budget_exhausted_pairs",
                      res.summary.budget_exhausted_pairs},
                     {"out", su_a->out}};
      emit(su_a->json, j,
           "graphs: " + std::to_string(res.summary.graphs) +
               "\nall-q cospectral pairs: " +
               std::to_string(res.summary.dq_pairs) +
               "\ngeneralized cospectral pairs: " +
               std::to_string(res.summary.df_pairs) +
               "\nconstruction-matched pairs: " +
               std::to_string(res.summary.construction_pairs) +
               "\nbudget-exhausted pairs: " +
               std::to_string(res.summary.budget_exhausted_pairs) +
               "\nreport: " + su_a->out + "/summary.json, " + su_a->out +
               "/pairs.csv\n");
    });
  }

  // ----- gen -----
  struct GenArgs {
    int n = 0;
    bool connected = false, json = false;
    std::string out;
  };
  auto ge_a = std::make_shared<GenArgs>();
  {
    CLI::App* sub = app.add_subcommand(
        "gen", "enumerate all graphs on n vertices, one per isomorphism class");
    sub->add_option("--n", ge_a->n, "1..9")->required();
    sub->add_flag("--connected", ge_a->connected, "keep only connected graphs");
    sub->add_option("-o,--out", ge_a->out, "graph6 output file")->required();
    sub->add_flag("--json", ge_a->json);
    sub->callback([ge_a] {
      std::vector<Graph> all = enumerate_all(ge_a->n);
      std::vector<Graph> keep;
      for (const Graph& g : all)
        if (!ge_a->connected || is_connected(g)) keep.push_back(g);
      std::ofstream out(ge_a->out);
      if (!out) throw std::runtime_error("cannot write " + ge_a->out);
      for (const Graph& g : keep) out << to_graph6(g) << "\n";
      emit(ge_a->json,
           {{"n", ge_a->n},
            {"connected_only", ge_a->connected},
            {"count", keep.size()},
            {"out", ge_a->out}},
           std::to_string(keep.size()) + " graphs -> " + ge_a->out + "\n");
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return rc;
}
