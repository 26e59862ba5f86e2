#include <doctest.h>

#include <stdexcept>

#include "linquot/compose.hpp"
#include "oracle.hpp"

using namespace linquot;

namespace {

CompositePlan searched_plan(const Graph& g0, const Graph& f0, unsigned s, bool& ok) {
  CompositePlan plan{f0.n(), s, g0, f0, {}};
  ok = true;
  for (const auto& summand : binomial_decomposition(g0, f0, s)) {
    SearchConfig cfg;
    cfg.budget.max_nodes = 20000;
    auto r = find_ordering(summand, cfg);
    if (!r.ordering) {
      ok = false;
      return plan;
    }
    plan.sub_orderings.push_back(std::move(*r.ordering));
  }
  return plan;
}

CompositeHypothesis violated(const CompositePlan& plan) {
  try {
    compose(plan);
  } catch (const CompositeError& e) {
    return e.hypothesis();
  }
  FAIL("compose accepted the plan");
  return CompositeHypothesis::shape;
}

}  // namespace

TEST_CASE("binomial decomposition of squares and cubes") {
  const auto parts2 = binomial_decomposition(anticycle(5), star_f(6), 2);
  REQUIRE(parts2.size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    for (const auto& g : parts2[k].generators()) CHECK(g.exponent(6) == 2 - k);
  }
  CHECK(binomial_decomposition(anticycle(6), star_f(7), 3).size() == 4);
  for (std::size_t n = 6; n <= 9; ++n) {
    for (unsigned s : {2u, 3u}) {
      std::vector<Monomial> pooled;
      for (const auto& part : binomial_decomposition(anticycle(n - 1), star_f(n), s)) {
        pooled.insert(pooled.end(), part.generators().begin(), part.generators().end());
      }
      const auto direct = oracle::power(oracle::to_exps(edge_ideal(h_n(n)).generators()), s);
      CHECK(oracle::as_set(pooled) == direct);
      CHECK(pooled.size() == direct.size());
    }
  }
}

TEST_CASE("plans for the H_n powers") {
  const auto p2 = paper_orderings(6, 2);
  REQUIRE(p2.sub_orderings.size() == 3);
  CHECK(verify_colon(p2.sub_orderings[1]).verdict);
  const auto p3 = paper_orderings(7, 3);
  CHECK(verify_colon(p3.sub_orderings[1]).verdict);
  CHECK(verify_colon(p3.sub_orderings[2]).verdict);
  CHECK_THROWS_AS(paper_orderings(5, 2), std::invalid_argument);
  CHECK_THROWS_AS(paper_orderings(6, 1), std::invalid_argument);
}

TEST_CASE("composite orderings verify") {
  for (const auto& [n, s] : {std::pair{6u, 2u}, {7u, 3u}, {7u, 2u}}) {
    const auto plan = paper_orderings(n, s);
    for (const unsigned threads : {1u, 3u}) {
      const auto r = compose(plan, threads);
      CHECK(r.certificate.verdict);
      CHECK(replay_certificate(r.ordering.order(), r.certificate).accepted);
      CHECK(r.ordering.ideal() == power(edge_ideal(h_n(n)), s));
    }
  }
}

TEST_CASE("compose reports the violated hypothesis") {
  const auto good = paper_orderings(6, 2);

  auto plan = good;
  plan.g0 = Graph(5, {Edge(4, 5)});
  CHECK(violated(plan) == CompositeHypothesis::adjacency);

  plan = good;
  plan.s = 1;
  CHECK(violated(plan) == CompositeHypothesis::shape);

  plan = good;
  plan.f0 = Graph(6, {Edge(1, 2)});
  CHECK(violated(plan) == CompositeHypothesis::shape);

  plan = good;
  plan.sub_orderings.pop_back();
  CHECK(violated(plan) == CompositeHypothesis::shape);

  plan = good;
  std::swap(plan.sub_orderings[0], plan.sub_orderings[1]);
  CHECK(violated(plan) == CompositeHypothesis::stratification);

  plan = good;
  plan.sub_orderings[2] = OrderedGenerators::lex(plan.sub_orderings[2].ideal());
  CHECK(violated(plan) == CompositeHypothesis::sub_ordering_fails);

  plan = good;
  plan.sub_orderings[0] = OrderedGenerators::from_sequence(
      {plan.sub_orderings[0].order().begin(), plan.sub_orderings[0].order().end() - 1});
  CHECK(violated(plan) == CompositeHypothesis::summand_mismatch);
}

TEST_CASE("property: random sub-star composites keep linear quotients") {
  oracle::Rng rng(71);
  int composed = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 6 + trial % 3;
    std::vector<Edge> star;
    for (std::size_t leaf = 1; leaf <= n - 3; ++leaf) {
      if (rng() % 2) star.emplace_back(leaf, n);
    }
    if (star.empty()) star.emplace_back(1 + rng() % (n - 3), n);
    const Graph f0(n, star);
    std::vector<Edge> g_edges;
    const Graph g = anticycle(n - 1);
    for (const auto& e : g.edges()) {
      if (rng() % 2 && (f0.degree(e.u) > 0 || f0.degree(e.v) > 0)) g_edges.push_back(e);
    }
    if (g_edges.empty()) continue;
    const Graph g0(n - 1, g_edges);
    REQUIRE(star_adjacency_condition(g0, f0));
    bool ok = false;
    const auto plan = searched_plan(g0, f0, 2, ok);
    if (!ok) continue;
    const auto r = compose(plan);
    CHECK(r.certificate.verdict);
    for (std::size_t k = 0; k < plan.sub_orderings.size(); ++k) {
      for (const auto& g : plan.sub_orderings[k].order()) CHECK(g.exponent(n) == 2 - k);
    }
    ++composed;
  }
  CHECK(composed >= 30);
}
