#include "linquot/repro.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

#include "linquot/json_io.hpp"

namespace linquot {
namespace {

struct CaseInfo {
  ReproCase which;
  const char* name;
  const char* claim;
};

constexpr CaseInfo kCases[] = {
    {ReproCase::igif_lex, "igif-lex",
     "descending lex order on the minimal generators of I_G*I_F has linear quotients"},
    {ReproCase::igif2_lex, "igif2-lex",
     "descending lex order on the minimal generators of I_G*I_F^2 has linear quotients"},
    {ReproCase::ig2if_lex, "ig2if-lex",
     "descending lex order on the minimal generators of I_G^2*I_F has linear quotients"},
    {ReproCase::if_power_lex, "if-power-lex",
     "descending lex order on the minimal generators of I_F^s has linear quotients"},
    {ReproCase::cor2, "cor2",
     "I_{H_n}^2 has linear quotients: lex blocks for I_F^2 and I_G*I_F followed by an "
     "ordering of I_G^2"},
    {ReproCase::lem_main_s2, "lem-main-s2",
     "I_{H_n}^2 has linear quotients by the composite ordering"},
    {ReproCase::lem_main_s3, "lem-main-s3",
     "I_{H_n}^3 has linear quotients by the composite ordering"},
    {ReproCase::lex_counterexample, "lex-counterexample",
     "descending lex order on the minimal generators of I_{G_n}^2 is not a linear-quotient "
     "order"},
    {ReproCase::gap_g5, "gap-g5",
     "G_5 has the gap ({1,3},{2,5}), and I_{G_5}^2 has no linear-quotient ordering"},
    {ReproCase::rmk0_search, "rmk0-search", "I_{G_n}^3 has linear quotients (found by search)"},
    {ReproCase::binomial_decomp, "binomial-decomp",
     "the minimal generators of I_{H_n}^s are the union of those of I_G^i*I_F^j, i + j = s"},
    {ReproCase::h_family_normalize, "h-family-normalize",
     "each anticycle with {a,b}, {a+1,b+1} removed and {b,b+1} added, b = a +- 2, is a "
     "dihedral relabelling of H_n"},
};

const CaseInfo& info(ReproCase c) {
  for (const auto& ci : kCases) {
    if (ci.which == c) return ci;
  }
  throw std::logic_error("unknown repro case");
}

class InvalidInput : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::size_t need_n(const ReproParams& p, std::size_t fallback, std::size_t min) {
  const std::size_t n = p.n.value_or(fallback);
  if (n < min) throw InvalidInput("n must be at least " + std::to_string(min));
  return n;
}

json ordering_check(const std::string& label, const OrderedGenerators& og,
                    const QuotientCertificate& cert, bool expected) {
  return json{{"kind", "ordering"},
              {"label", label},
              {"ordering", ordering_to_json(og)},
              {"certificate", cert},
              {"expected_verdict", expected}};
}

std::string describe(const QuotientCertificate& cert, std::size_t size) {
  std::string out = std::string(cert.verdict ? "linear quotients" : "NOT linear quotients") +
                    " (" + std::to_string(size) + " generators)";
  if (cert.failure) {
    out += "; first failure at i=" + std::to_string(cert.failure->i) +
           ", j=" + std::to_string(cert.failure->j) +
           ", non-variable colon generator " + to_string(cert.failure->witness);
  }
  return out;
}

// G = anticycle(n-1) and F = star_f(n), both in n variables.
struct Family {
  MonomialIdeal ig;
  MonomialIdeal if_;
};

Family family(std::size_t n) {
  const Graph g = anticycle(n - 1);
  return {edge_ideal(Graph(n, std::vector<Edge>(g.edges().begin(), g.edges().end()))),
          edge_ideal(star_f(n))};
}

void lex_case(ReproReport& rep, const std::string& label, const MonomialIdeal& ideal) {
  const auto og = OrderedGenerators::lex(ideal);
  const auto cert = verify_colon(og);
  rep.lines.push_back(label + ": " + describe(cert, og.size()));
  rep.document["checks"].push_back(ordering_check(label, og, cert, true));
  rep.outcome = cert.verdict ? Outcome::confirmed : Outcome::refuted;
}

void composite_case(ReproReport& rep, std::size_t n, unsigned s, const ReproParams& p,
                    bool lex_blocks_only_check) {
  PlanOptions opts{p.search, p.cache};
  CompositePlan plan;
  try {
    plan = paper_orderings(n, s, opts);
  } catch (const SearchFailure& e) {
    rep.lines.push_back(e.what());
    rep.document["search"] = search_result_to_json(e.result());
    rep.outcome = e.result().status == SearchStatus::none_exists ? Outcome::refuted
                                                                  : Outcome::budget_exhausted;
    return;
  }
  std::optional<CompositeResult> composed;
  try {
    composed = compose(plan, p.threads);
  } catch (const CompositeError& e) {
    rep.lines.push_back(e.what());
    rep.outcome = Outcome::refuted;
    return;
  }
  const CompositeResult& result = *composed;
  bool ok = result.certificate.verdict;
  for (std::size_t k = 0; k < plan.sub_orderings.size(); ++k) {
    const unsigned j = s - static_cast<unsigned>(k);
    const std::string label = "block x_n-degree " + std::to_string(j) +
                              (k + 1 == plan.sub_orderings.size() ? " (searched)" : " (lex)");
    rep.lines.push_back(label + ": " + describe(result.sub_certificates[k],
                                                plan.sub_orderings[k].size()));
    rep.document["checks"].push_back(
        ordering_check(label, plan.sub_orderings[k], result.sub_certificates[k], true));
    ok = ok && result.sub_certificates[k].verdict;
  }
  if (lex_blocks_only_check) {
    rep.lines.push_back("lex blocks I_F^2 and I_G*I_F verified individually");
  }
  rep.lines.push_back("composite ordering of I_{H_" + std::to_string(n) + "}^" +
                      std::to_string(s) + ": " +
                      describe(result.certificate, result.ordering.size()));
  rep.document["checks"].push_back(
      ordering_check("composite", result.ordering, result.certificate, true));
  rep.outcome = ok ? Outcome::confirmed : Outcome::refuted;
}

void run(ReproReport& rep, const ReproParams& p) {
  switch (rep.which) {
    case ReproCase::igif_lex: {
      const std::size_t n = need_n(p, 7, 6);
      const auto f = family(n);
      lex_case(rep, "lex I_G*I_F", product(f.ig, f.if_));
      break;
    }
    case ReproCase::igif2_lex: {
      const std::size_t n = need_n(p, 7, 6);
      const auto f = family(n);
      lex_case(rep, "lex I_G*I_F^2", product(f.ig, power(f.if_, 2)));
      break;
    }
    case ReproCase::ig2if_lex: {
      const std::size_t n = need_n(p, 7, 6);
      const auto f = family(n);
      lex_case(rep, "lex I_G^2*I_F", product(power(f.ig, 2), f.if_));
      break;
    }
    case ReproCase::if_power_lex: {
      const std::size_t n = need_n(p, 7, 6);
      const unsigned s = p.s.value_or(2);
      if (s < 1) throw InvalidInput("s must be at least 1");
      lex_case(rep, "lex I_F^" + std::to_string(s), power(family(n).if_, s));
      break;
    }
    case ReproCase::cor2:
      composite_case(rep, need_n(p, 6, 6), 2, p, true);
      break;
    case ReproCase::lem_main_s2:
      composite_case(rep, need_n(p, 6, 6), 2, p, false);
      break;
    case ReproCase::lem_main_s3:
      composite_case(rep, need_n(p, 7, 6), 3, p, false);
      break;
    case ReproCase::lex_counterexample: {
      const std::size_t n = need_n(p, 6, 5);
      const auto og = OrderedGenerators::lex(power(edge_ideal(g_n(n)), 2));
      const auto cert = verify_colon(og);
      rep.lines.push_back("lex I_{G_" + std::to_string(n) + "}^2: " + describe(cert, og.size()));
      rep.document["checks"].push_back(ordering_check("lex I_{G_n}^2", og, cert, false));
      rep.outcome = cert.verdict ? Outcome::refuted : Outcome::confirmed;
      break;
    }
    case ReproCase::gap_g5: {
      const Graph g = g_n(5);
      const auto gap = find_gap(g);
      const auto ideal = power(edge_ideal(g), 2);
      SearchConfig cfg = p.search;
      cfg.strategy = Strategy::exhaustive;
      const auto search = find_ordering(ideal, cfg);
      if (gap) {
        rep.lines.push_back("gap in G_5: {" + std::to_string(gap->first.u) + "," +
                            std::to_string(gap->first.v) + "} and {" +
                            std::to_string(gap->second.u) + "," + std::to_string(gap->second.v) +
                            "}");
        rep.document["checks"].push_back(
            {{"kind", "gap"}, {"graph", g}, {"edges", json::array({gap->first, gap->second})}});
      } else {
        rep.lines.push_back("G_5 is gap-free");
      }
      rep.lines.push_back("exhaustive search over I_{G_5}^2: " +
                          std::string(to_string(search.status)) + " after " +
                          std::to_string(search.nodes) + " nodes");
      if (search.status == SearchStatus::none_exists) {
        rep.document["checks"].push_back({{"kind", "no_ordering"}, {"ideal", ideal}});
      }
      rep.document["search"] = search_result_to_json(search);
      if (search.status == SearchStatus::budget_exhausted) {
        rep.outcome = Outcome::budget_exhausted;
      } else {
        const bool ok = gap && search.status == SearchStatus::none_exists;
        rep.outcome = ok ? Outcome::confirmed : Outcome::refuted;
      }
      break;
    }
    case ReproCase::rmk0_search: {
      const std::size_t n = need_n(p, 6, 5);
      const unsigned s = p.s.value_or(3);
      if (s < 1) throw InvalidInput("s must be at least 1");
      const auto ideal = power(edge_ideal(g_n(n)), s);
      const auto search = find_ordering_cached(ideal, p.search, p.cache);
      rep.lines.push_back("search over I_{G_" + std::to_string(n) + "}^" + std::to_string(s) +
                          " (" + std::to_string(ideal.size()) + " generators): " +
                          to_string(search.status) + " after " + std::to_string(search.nodes) +
                          " nodes, " + std::to_string(search.seconds) + " s");
      rep.document["search"] = search_result_to_json(search);
      if (search.ordering) {
        const auto cert = verify_colon(*search.ordering);
        rep.document["checks"].push_back(
            ordering_check("searched I_{G_n}^s", *search.ordering, cert, true));
      }
      rep.outcome = search.status == SearchStatus::found       ? Outcome::confirmed
                    : search.status == SearchStatus::none_exists ? Outcome::refuted
                                                                 : Outcome::budget_exhausted;
      break;
    }
    case ReproCase::binomial_decomp: {
      const std::size_t n = need_n(p, 6, 6);
      const unsigned s = p.s.value_or(2);
      if (s < 2) throw InvalidInput("s must be at least 2");
      const Graph g = anticycle(n - 1);
      const Graph f = star_f(n);
      const auto summands = binomial_decomposition(g, f, s);
      std::vector<Monomial> pooled;
      json summand_json = json::array();
      for (const auto& part : summands) {
        pooled.insert(pooled.end(), part.generators().begin(), part.generators().end());
        summand_json.push_back(part);
      }
      const auto joined = minimalize(pooled);
      const Graph h = h_n(n);
      const auto direct = power(edge_ideal(h), s);
      const bool same_graph = graph_union(g, f) == h;
      const bool equal = joined == direct && pooled.size() == direct.size();
      rep.lines.push_back("E(H_n) = E(G) u E(F): " + std::string(same_graph ? "yes" : "no"));
      rep.lines.push_back(std::to_string(summands.size()) + " summands with " +
                          std::to_string(pooled.size()) + " generators in total; I_{H_n}^" +
                          std::to_string(s) + " has " + std::to_string(direct.size()) +
                          (equal ? " (equal)" : " (DIFFERENT)"));
      rep.document["checks"].push_back({{"kind", "set_equality"},
                                        {"graph", h},
                                        {"s", s},
                                        {"summands", summand_json}});
      rep.outcome = equal && same_graph ? Outcome::confirmed : Outcome::refuted;
      break;
    }
    case ReproCase::h_family_normalize: {
      const std::size_t n = need_n(p, 7, 7);
      if (p.a.has_value() != p.b.has_value()) throw InvalidInput("give both a and b, or neither");
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      if (p.a) {
        pairs.emplace_back(*p.a, *p.b);
      } else {
        for (std::size_t a = 1; a <= n; ++a) {
          pairs.emplace_back(a, (a + 1) % n + 1);
          pairs.emplace_back(a, (a + n - 3) % n + 1);
        }
      }
      const Graph target = h_n(n);
      bool ok = true;
      for (const auto& [a, b] : pairs) {
        HFamilyMember member;
        try {
          member = h_family(n, a, b);
        } catch (const std::invalid_argument& e) {
          throw InvalidInput(e.what());
        }
        const bool maps = relabel(member.graph, member.perm) == target;
        const bool pinned = member.perm[a - 1] == n - 2 && member.perm[b - 1] == n;
        ok = ok && maps;
        rep.lines.push_back("(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + "): " +
                            (maps ? "relabels onto H_n" : "DOES NOT relabel onto H_n") +
                            (pinned ? ", a->n-2 and b->n" : ", via a reflection"));
        rep.document["checks"].push_back({{"kind", "relabel"},
                                          {"a", a},
                                          {"b", b},
                                          {"graph", member.graph},
                                          {"perm", member.perm},
                                          {"target", target}});
      }
      rep.outcome = ok ? Outcome::confirmed : Outcome::refuted;
      break;
    }
  }
}

// Plain depth-first search over prefixes, used only to re-check refutations.
bool has_ordering_naive(std::vector<Monomial>& rest, PrefixState& state) {
  if (rest.empty()) return true;
  for (std::size_t k = 0; k < rest.size(); ++k) {
    PrefixState next = state;
    if (!incremental_colon_check(next, rest[k])) continue;
    std::vector<Monomial> remaining;
    for (std::size_t q = 0; q < rest.size(); ++q) {
      if (q != k) remaining.push_back(rest[q]);
    }
    if (has_ordering_naive(remaining, next)) return true;
  }
  return false;
}

std::string replay_check(const json& check) {
  const auto kind = check.at("kind").get<std::string>();
  if (kind == "ordering") {
    const auto og = ordering_from_json(check.at("ordering"));
    const auto cert = certificate_from_json(check.at("certificate"), og.n());
    const auto replay = replay_certificate(og.order(), cert);
    if (!replay.accepted) return check.at("label").get<std::string>() + ": " + replay.reason;
    if (cert.verdict != check.at("expected_verdict").get<bool>()) {
      return check.at("label").get<std::string>() + ": verdict differs from the claim";
    }
    return "";
  }
  if (kind == "gap") {
    const auto g = check.at("graph").get<Graph>();
    const auto& e = check.at("edges");
    const Edge first(e[0][0].get<std::size_t>(), e[0][1].get<std::size_t>());
    const Edge second(e[1][0].get<std::size_t>(), e[1][1].get<std::size_t>());
    return is_gap(g, first, second) ? "" : "recorded edges are not a gap";
  }
  if (kind == "relabel") {
    const auto g = check.at("graph").get<Graph>();
    const auto perm = check.at("perm").get<std::vector<std::size_t>>();
    const auto target = check.at("target").get<Graph>();
    return relabel(g, perm) == target ? "" : "relabelled graph differs from the target";
  }
  if (kind == "set_equality") {
    const auto h = check.at("graph").get<Graph>();
    const auto s = check.at("s").get<unsigned>();
    std::vector<Monomial> pooled;
    for (const auto& part : check.at("summands")) {
      const auto ideal = part.get<MonomialIdeal>();
      pooled.insert(pooled.end(), ideal.generators().begin(), ideal.generators().end());
    }
    const auto direct = power(edge_ideal(h), s);
    return minimalize(pooled) == direct ? "" : "summand union differs from the power";
  }
  if (kind == "no_ordering") {
    const auto ideal = check.at("ideal").get<MonomialIdeal>();
    if (ideal.size() > 12) return "refutation too large to replay";
    std::vector<Monomial> rest(ideal.generators().begin(), ideal.generators().end());
    PrefixState state(ideal.n());
    return has_ordering_naive(rest, state) ? "an ordering exists after all" : "";
  }
  return "unknown check kind '" + kind + "'";
}

}  // namespace

const std::vector<ReproCase>& all_repro_cases() {
  static const std::vector<ReproCase> cases = [] {
    std::vector<ReproCase> out;
    for (const auto& ci : kCases) out.push_back(ci.which);
    return out;
  }();
  return cases;
}

const char* to_string(ReproCase c) { return info(c).name; }

ReproCase parse_repro_case(const std::string& name) {
  for (const auto& ci : kCases) {
    if (name == ci.name) return ci.which;
  }
  throw std::invalid_argument("unknown case '" + name + "'");
}

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::confirmed:
      return 0;
    case Outcome::refuted:
      return 1;
    case Outcome::budget_exhausted:
      return 2;
    case Outcome::invalid_input:
      return 3;
  }
  return 3;
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::confirmed:
      return "confirmed";
    case Outcome::refuted:
      return "refuted";
    case Outcome::budget_exhausted:
      return "budget_exhausted";
    case Outcome::invalid_input:
      return "invalid_input";
  }
  return "?";
}

ReproReport run_case(ReproCase c, const ReproParams& p) {
  ReproReport rep;
  rep.which = c;
  rep.claim = info(c).claim;
  json params = json::object();
  if (p.n) params["n"] = *p.n;
  if (p.s) params["s"] = *p.s;
  if (p.a) params["a"] = *p.a;
  if (p.b) params["b"] = *p.b;
  rep.document = json{{"case", info(c).name},
                      {"claim", rep.claim},
                      {"parameters", params},
                      {"checks", json::array()}};
  try {
    run(rep, p);
  } catch (const std::invalid_argument& e) {
    rep.outcome = Outcome::invalid_input;
    rep.lines.push_back(std::string("invalid input: ") + e.what());
  }
  rep.document["outcome"] = to_string(rep.outcome);
  rep.document["confirmed"] = rep.outcome == Outcome::confirmed;
  rep.document["summary"] = rep.lines;
  return rep;
}

std::string replay_case_document(const json& document) {
  for (const auto& check : document.at("checks")) {
    std::string problem;
    try {
      problem = replay_check(check);
    } catch (const std::exception& e) {
      problem = std::string("malformed check: ") + e.what();
    }
    if (!problem.empty()) return problem;
  }
  return "";
}

}  // namespace linquot
