// Command line front end. Exit codes: 0 on success, 1 when the requested
// property is false (verification fails, nonexistence is proven, a search
// exhausts or runs out of budget), 2 on usage or domain errors.
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "antimagic/classify.hpp"
#include "antimagic/constructions.hpp"
#include "antimagic/distance_set.hpp"
#include "antimagic/io.hpp"
#include "antimagic/search.hpp"

namespace am = antimagic;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

am::DistanceSet parse_d(const std::string& text) {
  return am::DistanceSet(am::io::parse_distance_csv(text));
}

// ANTIMAGIC_THREADS caps whatever --threads asked for; unset means no cap
int capped_threads(int requested) {
  if (requested < 1) throw std::invalid_argument("--threads must be >= 1");
  const char* env = std::getenv("ANTIMAGIC_THREADS");
  if (!env || !*env) return requested;
  int cap = 0;
  try {
    cap = std::stoi(env);
  } catch (const std::exception&) {
    throw std::invalid_argument("ANTIMAGIC_THREADS is not an integer");
  }
  if (cap < 1) throw std::invalid_argument("ANTIMAGIC_THREADS must be >= 1");
  return std::min(requested, cap);
}

const char* verdict_name(am::SearchVerdict v) {
  switch (v) {
    case am::SearchVerdict::Found: return "Found";
    case am::SearchVerdict::ExhaustedNone: return "ExhaustedNone";
    default: return "Aborted";
  }
}

int report_unsupported(const am::ConstructionOutcome& out) {
  switch (out.reason) {
    case am::UnsupportedReason::KnownNonexistent:
      std::cerr << "no labeling exists: " << out.detail << "\n";
      return kExitFalse;
    case am::UnsupportedReason::NotCovered:
      std::cerr << "not covered: " << out.detail << "\n";
      return kExitUsage;
    default:
      std::cerr << "out of range: " << out.detail << "\n";
      return kExitUsage;
  }
}

struct ConstructArgs {
  std::string family, d_text, spec_path;
  int n = 0;
  std::string out_labeling = "labeling.json";
  std::string out_weights = "weights.csv";
  std::string out_graph, emit, out_dot = "graph.dot";
};

int cmd_construct(const ConstructArgs& a) {
  am::DistanceSet d = parse_d(a.d_text);

  am::OrientedGraph g;
  am::ConstructionOutcome out;
  if (a.family == "uni") {
    if (a.n < 3) throw std::invalid_argument("--n must be >= 3");
    g = am::build_unidirectional_cycle(a.n);
    out = am::construct_uni(a.n, d);
  } else if (a.family == "theta") {
    if (a.n < 3) throw std::invalid_argument("--n must be >= 3");
    g = am::build_theta_cycle(a.n);
    out = am::construct_theta(a.n, d);
  } else {
    if (a.spec_path.empty())
      throw std::invalid_argument("--family tworeg needs --spec");
    am::TwoRegularSpec spec =
        am::io::spec_from_json_string(am::io::read_text_file(a.spec_path));
    g = am::build_union(spec);
    out = am::construct_tworeg(spec, d);
  }

  if (!out.ok()) return report_unsupported(out);

  am::WeightReport rep = am::weigh(g, *out.labeling, d);
  am::io::write_text_file(a.out_labeling,
                          am::io::labeling_to_json_string(*out.labeling));
  am::io::write_text_file(a.out_weights, am::io::weights_csv(*out.labeling, rep));
  if (!a.out_graph.empty())
    am::io::write_text_file(a.out_graph, am::io::graph_to_json_string(g));
  if (a.emit == "dot")
    am::io::write_text_file(a.out_dot, am::io::to_dot(g, &*out.labeling));
  std::cout << "antimagic: " << (rep.antimagic ? "true" : "false") << "\n"
            << "labeling: " << a.out_labeling << "\n"
            << "weights: " << a.out_weights << "\n";
  return rep.antimagic ? kExitOk : kExitFalse;
}

int cmd_verify(const std::string& graph_path, const std::string& labeling_path,
               const std::string& d_text) {
  am::OrientedGraph g =
      am::io::graph_from_json_string(am::io::read_text_file(graph_path));
  am::Labeling f =
      am::io::labeling_from_json_string(am::io::read_text_file(labeling_path));
  am::DistanceSet d = parse_d(d_text);
  am::WeightReport rep = am::weigh(g, f, d);
  std::cout << am::io::weights_csv(f, rep);
  std::cout << "antimagic: " << (rep.antimagic ? "true" : "false") << "\n";
  if (!rep.antimagic && rep.witness)
    std::cout << "witness: v_" << rep.witness->first + 1 << " and v_"
              << rep.witness->second + 1 << " share weight "
              << rep.weights[rep.witness->first] << "\n";
  return rep.antimagic ? kExitOk : kExitFalse;
}

struct SearchArgs {
  std::string graph_path, orientation, family, spec_path, d_text, out_labeling;
  int n = 0;
  std::string method = "backtrack";
  int64_t budget_nodes = -1, budget_millis = -1;
  bool unlimited = false;
  int threads = 1;
  bool canonical = false;
};

int cmd_search(const SearchArgs& a) {
  int sources = (!a.graph_path.empty()) + (!a.orientation.empty()) +
                (!a.family.empty()) + (!a.spec_path.empty());
  if (sources != 1)
    throw std::invalid_argument(
        "give exactly one of --graph, --orientation, --family, --spec");

  am::OrientedGraph g;
  if (!a.graph_path.empty()) {
    g = am::io::graph_from_json_string(am::io::read_text_file(a.graph_path));
  } else if (!a.orientation.empty()) {
    g = am::build_oriented_cycle(am::parse_orientation_bits(a.orientation));
  } else if (!a.spec_path.empty()) {
    g = am::build_union(
        am::io::spec_from_json_string(am::io::read_text_file(a.spec_path)));
  } else {
    if (a.n < 3) throw std::invalid_argument("--n must be >= 3");
    if (a.family == "uni")
      g = am::build_unidirectional_cycle(a.n);
    else if (a.family == "theta")
      g = am::build_theta_cycle(a.n);
    else
      throw std::invalid_argument("--family must be uni or theta");
  }

  am::DistanceSet d = parse_d(a.d_text);

  am::SearchBudget budget = am::SearchBudget::defaults();
  if (a.unlimited) budget = am::SearchBudget::unlimited();
  if (a.budget_nodes >= 0) budget.max_nodes = a.budget_nodes;
  if (a.budget_millis >= 0) budget.max_millis = a.budget_millis;

  am::SearchOptions opts;
  opts.threads = capped_threads(a.threads);
  opts.canonical = a.canonical;

  am::SearchOutcome out =
      a.method == "exhaustive" ? am::exhaustive_search(g, d, budget, opts)
                               : am::backtrack_search(g, d, budget, opts);

  std::cout << "verdict: " << verdict_name(out.verdict) << "\n"
            << "nodes: " << out.nodes << "\n"
            << "millis: " << out.millis << "\n";
  if (out.verdict == am::SearchVerdict::Found) {
    std::string text = am::io::labeling_to_json_string(*out.labeling);
    if (a.out_labeling.empty())
      std::cout << text;
    else
      am::io::write_text_file(a.out_labeling, text);
    return kExitOk;
  }
  return kExitFalse;
}

struct SweepArgs {
  std::string family, out_path = "sweep.csv", universe = "all";
  int n_max = 6;
  int64_t budget_nodes = -1, budget_millis = -1;
  int threads = 1;
  bool canonical = false;
};

int cmd_sweep(const SweepArgs& a) {
  am::SearchBudget budget = am::SearchBudget::defaults();
  if (a.budget_nodes >= 0) budget.max_nodes = a.budget_nodes;
  if (a.budget_millis >= 0) budget.max_millis = a.budget_millis;
  am::SearchOptions opts;
  opts.threads = capped_threads(a.threads);
  opts.canonical = a.canonical;

  am::SweepResult res;
  if (a.family == "singleton") {
    res = am::sweep_singleton(a.n_max, budget, opts);
  } else {
    am::OrientationUniverse uni = a.universe == "uni"
                                      ? am::OrientationUniverse::UniOnly
                                      : am::OrientationUniverse::All;
    res = am::sweep_pairs(a.n_max, uni, budget, opts);
  }
  am::io::write_text_file(a.out_path, am::io::sweep_csv(res));
  std::cout << "rows: " << res.rows.size() << "\n"
            << "mismatches: " << res.mismatches << "\n"
            << "unknowns: " << res.unknowns << "\n"
            << "table: " << a.out_path << "\n";
  return res.mismatches == 0 ? kExitOk : kExitFalse;
}

int cmd_fixtures(const std::string& out_dir, bool canonical,
                 int64_t budget_nodes, int64_t budget_millis) {
  am::SearchBudget budget = am::SearchBudget::defaults();
  if (budget_nodes >= 0) budget.max_nodes = budget_nodes;
  if (budget_millis >= 0) budget.max_millis = budget_millis;
  // generation always runs the canonical single-thread search so reruns are
  // byte identical; the flag is accepted for interface stability
  (void)canonical;
  std::vector<am::FixtureWitness> fixtures;
  try {
    fixtures = am::generate_fixtures(budget);
  } catch (const std::runtime_error& e) {
    std::cerr << "fixture generation failed: " << e.what() << "\n";
    return kExitFalse;
  }
  std::filesystem::create_directories(out_dir);
  for (const am::FixtureWitness& fw : fixtures) {
    std::string path = out_dir + "/" + fw.name + ".json";
    am::io::write_text_file(path, am::io::fixture_to_json_string(fw));
    std::cout << fw.name << ": " << path << "\n";
  }
  return kExitOk;
}

int cmd_export_dot(const std::string& graph_path,
                   const std::string& labeling_path,
                   const std::string& out_path) {
  am::OrientedGraph g =
      am::io::graph_from_json_string(am::io::read_text_file(graph_path));
  std::string dot;
  if (!labeling_path.empty()) {
    am::Labeling f = am::io::labeling_from_json_string(
        am::io::read_text_file(labeling_path));
    if (f.order() != g.order())
      throw std::invalid_argument("labeling size disagrees with graph order");
    dot = am::io::to_dot(g, &f);
  } else {
    dot = am::io::to_dot(g);
  }
  am::io::write_text_file(out_path, dot);
  std::cout << "dot: " << out_path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"D-antimagic labelings of oriented cycles and their unions"};
  app.require_subcommand(1);

  ConstructArgs ca;
  CLI::App* construct = app.add_subcommand(
      "construct", "build a labeling from the known constructions");
  construct->add_option("--family", ca.family, "uni | theta | tworeg")
      ->required()
      ->check(CLI::IsMember({"uni", "theta", "tworeg"}));
  construct->add_option("--n", ca.n, "cycle order (uni/theta)");
  construct->add_option("--d", ca.d_text, "distance set, e.g. 0,3")->required();
  construct->add_option("--spec", ca.spec_path, "two-regular spec JSON");
  construct->add_option("--out-labeling", ca.out_labeling, "labeling JSON path");
  construct->add_option("--out-weights", ca.out_weights, "weight CSV path");
  construct->add_option("--out-graph", ca.out_graph, "also write the graph JSON");
  construct->add_option("--emit", ca.emit, "extra format (dot)")
      ->check(CLI::IsMember({"dot"}));
  construct->add_option("--out-dot", ca.out_dot, "DOT path for --emit dot");

  std::string v_graph, v_labeling, v_d;
  CLI::App* verify =
      app.add_subcommand("verify", "weigh a labeling and check distinctness");
  verify->add_option("--graph", v_graph, "graph JSON path")->required();
  verify->add_option("--labeling", v_labeling, "labeling JSON path")->required();
  verify->add_option("--d", v_d, "distance set, e.g. 0,3")->required();

  SearchArgs sa;
  CLI::App* search =
      app.add_subcommand("search", "look for a labeling by search");
  search->add_option("--graph", sa.graph_path, "graph JSON path");
  search->add_option("--orientation", sa.orientation,
                     "cycle orientation bits, e.g. 110100");
  search->add_option("--family", sa.family, "uni | theta (with --n)");
  search->add_option("--n", sa.n, "cycle order for --family");
  search->add_option("--spec", sa.spec_path, "two-regular spec JSON");
  search->add_option("--d", sa.d_text, "distance set")->required();
  search->add_option("--method", sa.method, "backtrack | exhaustive")
      ->check(CLI::IsMember({"backtrack", "exhaustive"}));
  search->add_option("--budget-nodes", sa.budget_nodes, "node budget");
  search->add_option("--budget-millis", sa.budget_millis, "time budget (ms)");
  search->add_flag("--unlimited", sa.unlimited,
                   "drop default budgets (small n only)");
  search->add_option("--threads", sa.threads, "worker threads");
  search->add_flag("--canonical", sa.canonical,
                   "deterministic lexicographically-smallest witness");
  search->add_option("--out-labeling", sa.out_labeling,
                     "write the witness here instead of stdout");

  SweepArgs wa;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "tabulate verdicts against the characterizations");
  sweep->add_option("--family", wa.family, "singleton | pairs")
      ->required()
      ->check(CLI::IsMember({"singleton", "pairs"}));
  sweep->add_option("--n-max", wa.n_max, "largest cycle order")->required();
  sweep->add_option("--out", wa.out_path, "CSV output path");
  sweep->add_option("--universe", wa.universe,
                    "pairs only: all orientations or uni only")
      ->check(CLI::IsMember({"all", "uni"}));
  sweep->add_option("--budget-nodes", wa.budget_nodes, "per-instance nodes");
  sweep->add_option("--budget-millis", wa.budget_millis,
                    "per-instance time (ms)");
  sweep->add_option("--threads", wa.threads, "worker threads");
  sweep->add_flag("--canonical", wa.canonical, "deterministic witnesses");

  std::string f_out_dir = "data/fixtures";
  bool f_canonical = false;
  int64_t f_nodes = -1, f_millis = -1;
  CLI::App* fixtures = app.add_subcommand(
      "fixtures", "regenerate the bundled search-witness fixtures");
  fixtures->add_option("--out-dir", f_out_dir, "output directory");
  fixtures->add_flag("--canonical", f_canonical,
                     "byte-identical reruns (always on)");
  fixtures->add_option("--budget-nodes", f_nodes, "per-instance nodes");
  fixtures->add_option("--budget-millis", f_millis, "per-instance time (ms)");

  std::string e_graph, e_labeling, e_out = "graph.dot";
  CLI::App* export_dot =
      app.add_subcommand("export-dot", "write a Graphviz file for a graph");
  export_dot->add_option("--graph", e_graph, "graph JSON path")->required();
  export_dot->add_option("--labeling", e_labeling, "optional labeling JSON");
  export_dot->add_option("--out", e_out, "DOT output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // help/version
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(ca);
    if (verify->parsed()) return cmd_verify(v_graph, v_labeling, v_d);
    if (search->parsed()) return cmd_search(sa);
    if (sweep->parsed()) return cmd_sweep(wa);
    if (fixtures->parsed())
      return cmd_fixtures(f_out_dir, f_canonical, f_nodes, f_millis);
    if (export_dot->parsed()) return cmd_export_dot(e_graph, e_labeling, e_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFalse;
  }
  return kExitUsage;
}
