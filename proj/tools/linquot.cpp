#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include "linquot/compose.hpp"
#include "linquot/graph.hpp"
#include "linquot/json_io.hpp"
#include "linquot/kernels.hpp"
#include "linquot/ordering_cache.hpp"
#include "linquot/quotients.hpp"
#include "linquot/repro.hpp"
#include "linquot/search.hpp"

namespace {

using linquot::json;

constexpr int kConfirmed = 0;
constexpr int kRefuted = 1;
constexpr int kBudget = 2;
constexpr int kInvalid = 3;

struct Options {
  std::optional<std::size_t> n;
  std::optional<unsigned> s;
  std::optional<std::size_t> a;
  std::optional<std::size_t> b;
  std::string family;
  std::string graph_file;
  std::string ideal_file;
  std::string ordering_file;
  std::string plan_file;
  std::string repro_case;
  std::string criterion = "colon";
  std::string strategy = "backtrack";
  std::uint64_t budget_nodes = linquot::SearchBudget{}.max_nodes;
  double budget_seconds = linquot::SearchBudget{}.max_seconds;
  std::string cache_dir;
  std::string json_out;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  bool find_gap = false;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument("'" + path + "': " + e.what());
  }
}

// JSON goes to --json-out when given, else to stdout.
void emit(const Options& o, const json& doc) {
  if (o.json_out.empty()) {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream out(o.json_out);
  if (!out) throw std::invalid_argument("cannot write '" + o.json_out + "'");
  out << doc.dump(2) << '\n';
}

std::size_t need(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw std::invalid_argument(std::string("missing ") + flag);
  return *v;
}

linquot::Graph family_graph(const Options& o) {
  const std::size_t n = need(o.n, "--n");
  if (o.family == "cycle") return linquot::cycle(n);
  if (o.family == "anticycle") return linquot::anticycle(n);
  if (o.family == "star") return linquot::star_f(n);
  if (o.family == "h") return linquot::h_n(n);
  if (o.family == "g") return linquot::g_n(n);
  if (o.family == "h-family") {
    return linquot::h_family(n, need(o.a, "--a"), need(o.b, "--b")).graph;
  }
  throw std::invalid_argument("unknown family '" + o.family + "'");
}

linquot::Graph input_graph(const Options& o) {
  if (!o.graph_file.empty()) return read_json(o.graph_file).get<linquot::Graph>();
  if (o.family.empty()) throw std::invalid_argument("give --graph FILE or --family");
  return family_graph(o);
}

linquot::MonomialIdeal input_ideal(const Options& o) {
  if (!o.ideal_file.empty()) {
    auto ideal = read_json(o.ideal_file).get<linquot::MonomialIdeal>();
    return o.s ? linquot::power(ideal, *o.s) : ideal;
  }
  return linquot::power(linquot::edge_ideal(input_graph(o)), o.s.value_or(1));
}

linquot::SearchConfig search_config(const Options& o) {
  linquot::SearchConfig cfg;
  cfg.strategy = linquot::parse_strategy(o.strategy);
  cfg.budget.max_nodes = o.budget_nodes;
  cfg.budget.max_seconds = o.budget_seconds;
  cfg.seed = o.seed;
  return cfg;
}

std::optional<linquot::OrderingCache> cache_of(const Options& o) {
  if (o.cache_dir.empty()) return std::nullopt;
  return linquot::OrderingCache(o.cache_dir);
}

int run_graph(const Options& o) {
  json doc;
  if (o.family == "h-family" && o.graph_file.empty()) {
    const auto member = linquot::h_family(need(o.n, "--n"), need(o.a, "--a"), need(o.b, "--b"));
    doc = json{{"graph", member.graph}, {"perm", member.perm}};
  } else {
    doc = input_graph(o);
  }
  if (o.find_gap) {
    const auto g = doc.contains("graph") ? doc["graph"].get<linquot::Graph>()
                                         : doc.get<linquot::Graph>();
    const auto gap = linquot::find_gap(g);
    doc = json{{"graph", doc}, {"gap", nullptr}};
    if (gap) doc["gap"] = json::array({gap->first, gap->second});
  }
  emit(o, doc);
  return kConfirmed;
}

int run_ideal(const Options& o) {
  emit(o, input_ideal(o));
  return kConfirmed;
}

int run_verify(const Options& o) {
  const auto og = o.ordering_file.empty()
                      ? linquot::OrderedGenerators::lex(input_ideal(o))
                      : linquot::ordering_from_json(read_json(o.ordering_file));
  const auto cert = linquot::verify(og, linquot::parse_criterion(o.criterion));
  emit(o, cert);
  if (!o.json_out.empty()) {
    std::cout << (cert.verdict ? "linear quotients" : "not linear quotients") << " ("
              << og.size() << " generators)\n";
  }
  return cert.verdict ? kConfirmed : kRefuted;
}

int run_search(const Options& o) {
  const auto ideal = input_ideal(o);
  const auto cache = cache_of(o);
  const auto result =
      linquot::find_ordering_cached(ideal, search_config(o), cache ? &*cache : nullptr);
  json doc = linquot::search_result_to_json(result);
  doc["certificate"] = nullptr;
  if (result.ordering) doc["certificate"] = linquot::verify_colon(*result.ordering);
  emit(o, doc);
  if (!o.json_out.empty()) {
    std::cout << linquot::to_string(result.status) << " after " << result.nodes << " nodes ("
              << ideal.size() << " generators, kernel " << result.kernel << ")\n";
  }
  switch (result.status) {
    case linquot::SearchStatus::found:
      return kConfirmed;
    case linquot::SearchStatus::none_exists:
      return kRefuted;
    case linquot::SearchStatus::budget_exhausted:
      return kBudget;
  }
  return kBudget;
}

int run_compose(const Options& o) {
  const auto cache = cache_of(o);
  linquot::CompositePlan plan;
  try {
    if (!o.plan_file.empty()) {
      plan = linquot::plan_from_json(read_json(o.plan_file));
    } else {
      linquot::PlanOptions opts{search_config(o), cache ? &*cache : nullptr};
      plan = linquot::paper_orderings(need(o.n, "--n"), o.s.value_or(2), opts);
    }
  } catch (const linquot::SearchFailure& e) {
    std::cerr << e.what() << '\n';
    return e.result().status == linquot::SearchStatus::none_exists ? kRefuted : kBudget;
  }
  try {
    const auto result = linquot::compose(plan, o.threads);
    emit(o, json{{"plan", linquot::plan_to_json(plan)},
                 {"ordering", linquot::ordering_to_json(result.ordering)},
                 {"certificate", result.certificate}});
    if (!o.json_out.empty()) {
      std::cout << (result.certificate.verdict ? "linear quotients" : "not linear quotients")
                << " (" << result.ordering.size() << " generators)\n";
    }
    return result.certificate.verdict ? kConfirmed : kRefuted;
  } catch (const linquot::CompositeError& e) {
    std::cerr << e.what() << '\n';
    return kRefuted;
  }
}

int run_reproduce(const Options& o) {
  std::vector<linquot::ReproCase> cases;
  if (o.repro_case == "all") {
    cases = linquot::all_repro_cases();
  } else {
    cases.push_back(linquot::parse_repro_case(o.repro_case));
  }
  const auto cache = cache_of(o);
  linquot::ReproParams params;
  params.n = o.n;
  params.s = o.s;
  params.a = o.a;
  params.b = o.b;
  params.search = search_config(o);
  params.cache = cache ? &*cache : nullptr;
  params.threads = o.threads;

  int code = kConfirmed;
  json docs = json::array();
  for (const auto c : cases) {
    const auto rep = linquot::run_case(c, params);
    std::cout << "== " << linquot::to_string(c) << ": " << rep.claim << '\n';
    for (const auto& line : rep.lines) std::cout << "   " << line << '\n';
    std::cout << "   outcome: " << linquot::to_string(rep.outcome) << '\n';
    code = std::max(code, linquot::exit_code(rep.outcome));
    docs.push_back(rep.document);
  }
  if (!o.json_out.empty()) {
    std::ofstream out(o.json_out);
    if (!out) throw std::invalid_argument("cannot write '" + o.json_out + "'");
    out << (docs.size() == 1 ? docs[0] : docs).dump(2) << '\n';
  }
  return code;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--json-out", o.json_out, "Write JSON output to PATH");
}

void add_graph_source(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "cycle|anticycle|star|h|g|h-family");
  cmd->add_option("--n", o.n, "Number of vertices");
  cmd->add_option("--a", o.a, "h-family parameter a");
  cmd->add_option("--b", o.b, "h-family parameter b");
  cmd->add_option("--graph", o.graph_file, "Graph JSON file");
}

void add_ideal_source(CLI::App* cmd, Options& o) {
  add_graph_source(cmd, o);
  cmd->add_option("--ideal", o.ideal_file, "Ideal JSON file");
  cmd->add_option("--s", o.s, "Power");
}

void add_search(CLI::App* cmd, Options& o) {
  cmd->add_option("--strategy", o.strategy, "greedy|backtrack|exhaustive");
  cmd->add_option("--budget-nodes", o.budget_nodes, "Node budget");
  cmd->add_option("--budget-seconds", o.budget_seconds, "Wall-clock budget");
  cmd->add_option("--seed", o.seed, "Candidate shuffle seed (0 keeps lex order)");
  cmd->add_option("--cache-dir", o.cache_dir, "Ordering cache directory")
      ->envname("LINQUOT_CACHE");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear-quotient orderings of monomial ideals"};
  app.require_subcommand(1);
  Options o;

  auto* graph = app.add_subcommand("graph", "Build a graph");
  add_graph_source(graph, o);
  graph->add_flag("--find-gap", o.find_gap, "Also report a gap");
  add_common(graph, o);

  auto* ideal = app.add_subcommand("ideal", "Build a power of an edge ideal");
  add_ideal_source(ideal, o);
  add_common(ideal, o);

  auto* verify = app.add_subcommand("verify", "Check an ordering for linear quotients");
  add_ideal_source(verify, o);
  verify->add_option("--ordering", o.ordering_file, "Ordering JSON (default: descending lex)");
  verify->add_option("--criterion", o.criterion, "colon|works");
  add_common(verify, o);

  auto* search = app.add_subcommand("search", "Search for a linear-quotient ordering");
  add_ideal_source(search, o);
  add_search(search, o);
  add_common(search, o);

  auto* compose = app.add_subcommand("compose", "Build and verify a composite ordering");
  compose->add_option("--n", o.n, "Number of vertices");
  compose->add_option("--s", o.s, "Power (default 2)");
  compose->add_option("--plan", o.plan_file, "Composite plan JSON");
  compose->add_option("--threads", o.threads, "Block verification threads")
      ->check(CLI::PositiveNumber);
  add_search(compose, o);
  add_common(compose, o);

  auto* reproduce = app.add_subcommand("reproduce", "Run a named check");
  reproduce->add_option("--case", o.repro_case, "Case name or 'all'")->required();
  reproduce->add_option("--n", o.n, "Number of vertices");
  reproduce->add_option("--s", o.s, "Power");
  reproduce->add_option("--a", o.a, "h-family parameter a");
  reproduce->add_option("--b", o.b, "h-family parameter b");
  reproduce->add_option("--threads", o.threads, "Block verification threads")
      ->check(CLI::PositiveNumber);
  add_search(reproduce, o);
  add_common(reproduce, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalid;
  }

  try {
    if (*graph) return run_graph(o);
    if (*ideal) return run_ideal(o);
    if (*verify) return run_verify(o);
    if (*search) return run_search(o);
    if (*compose) return run_compose(o);
    return run_reproduce(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
  } catch (const std::length_error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
  } catch (const json::exception& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
  }
  return kInvalid;
}
