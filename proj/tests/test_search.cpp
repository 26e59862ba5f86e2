#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "linquot/graph.hpp"
#include "linquot/search.hpp"
#include "oracle.hpp"

using namespace linquot;

namespace {

Monomial m(std::size_t n, std::initializer_list<std::size_t> idx) {
  return Monomial::from_indices(n, idx);
}

MonomialIdeal ideal(std::vector<Monomial> gens) { return minimalize(gens); }

SearchConfig with(Strategy s) {
  SearchConfig cfg;
  cfg.strategy = s;
  return cfg;
}

}  // namespace

TEST_CASE("strategy names") {
  CHECK(parse_strategy("greedy") == Strategy::greedy);
  CHECK(parse_strategy("backtrack") == Strategy::backtrack);
  CHECK(parse_strategy("exhaustive") == Strategy::exhaustive);
  CHECK_THROWS_AS(parse_strategy("dfs"), std::invalid_argument);
  CHECK(std::string(to_string(SearchStatus::none_exists)) == "none_exists");
}

TEST_CASE("triangle has an ordering") {
  const auto r = find_ordering(ideal({m(3, {1, 2}), m(3, {1, 3}), m(3, {2, 3})}));
  CHECK(r.status == SearchStatus::found);
  REQUIRE(r.ordering.has_value());
  CHECK(verify_colon(*r.ordering).verdict);
  CHECK(r.nodes > 0);
}

TEST_CASE("two disjoint edges have none") {
  const auto i = ideal({m(4, {1, 2}), m(4, {3, 4})});
  CHECK(find_ordering(i, with(Strategy::exhaustive)).status == SearchStatus::none_exists);
  CHECK(find_ordering(i, with(Strategy::backtrack)).status == SearchStatus::none_exists);
  CHECK(find_ordering(i, with(Strategy::greedy)).status == SearchStatus::budget_exhausted);
}

TEST_CASE("exhaustive mode refuses large ideals") {
  const auto big = power(edge_ideal(h_n(6)), 2);
  CHECK_THROWS_AS(find_ordering(big, with(Strategy::exhaustive)), std::invalid_argument);
}

TEST_CASE("node budget is reported as exhaustion") {
  SearchConfig cfg;
  cfg.budget.max_nodes = 3;
  const auto r = find_ordering(power(edge_ideal(g_n(6)), 2), cfg);
  CHECK(r.status == SearchStatus::budget_exhausted);
  CHECK_FALSE(r.ordering.has_value());
}

TEST_CASE("hint must be a permutation of the generators") {
  const auto i = ideal({m(3, {1, 2}), m(3, {1, 3}), m(3, {2, 3})});
  SearchConfig cfg;
  cfg.hint = std::vector{m(3, {1, 2}), m(3, {1, 3}), m(3, {2, 3})};
  const auto r = find_ordering(i, cfg);
  REQUIRE(r.ordering.has_value());
  CHECK(r.ordering->order().front() == m(3, {1, 2}));
  cfg.hint = std::vector{m(3, {1, 2})};
  CHECK_THROWS_AS(find_ordering(i, cfg), std::invalid_argument);
}

TEST_CASE("squares and cubes of the families are found") {
  for (const auto& g : {h_n(6), g_n(6), g_n(7)}) {
    for (unsigned s : {2u, 3u}) {
      const auto r = find_ordering(power(edge_ideal(g), s));
      CHECK(r.status == SearchStatus::found);
      REQUIRE(r.ordering.has_value());
      CHECK(verify_colon(*r.ordering).verdict);
      CHECK(verify_works(*r.ordering).verdict);
    }
  }
}

TEST_CASE("square of the G_5 edge ideal has no ordering") {
  const auto i = power(edge_ideal(g_n(5)), 2);
  CHECK(find_ordering(i, with(Strategy::exhaustive)).status == SearchStatus::none_exists);
  CHECK_FALSE(oracle::some_ordering_exists(oracle::to_exps(i.generators())));
}

TEST_CASE("prefix state on fixed prefixes") {
  PrefixState empty(4);
  CHECK(empty.accepts(m(4, {3, 4})));
  PrefixState a(3);
  REQUIRE(incremental_colon_check(a, m(3, {2, 3})));
  CHECK(a.accepts(m(3, {1, 3})));
  PrefixState b(4);
  REQUIRE(incremental_colon_check(b, m(4, {1, 2})));
  CHECK_FALSE(b.accepts(m(4, {3, 4})));
  CHECK_FALSE(incremental_colon_check(b, m(4, {3, 4})));
  CHECK(b.prefix().size() == 1);
}

TEST_CASE("property: search verdicts match the all-permutations oracle") {
  oracle::Rng rng(61);
  int instances = 0;
  int with_ordering = 0;
  while (instances < 600) {
    const std::size_t n = 2 + instances % 5;
    const auto gens = oracle::random_ideal(rng, n, 9, 2);
    if (gens.size() > 7) continue;
    const auto i = minimalize(oracle::to_monomials(gens));
    const bool exists = oracle::some_ordering_exists(gens);
    for (const auto s : {Strategy::exhaustive, Strategy::backtrack}) {
      const auto r = find_ordering(i, with(s));
      CHECK(r.status == (exists ? SearchStatus::found : SearchStatus::none_exists));
      if (r.ordering) CHECK(oracle::linear_quotients(oracle::to_exps(r.ordering->order())));
    }
    SearchConfig shuffled;
    shuffled.seed = 1 + instances;
    CHECK((find_ordering(i, shuffled).status == SearchStatus::found) == exists);
    with_ordering += exists;
    ++instances;
  }
  CHECK(with_ordering > 50);
  CHECK(with_ordering < 550);
}

TEST_CASE("property: prefix checks agree with the oracle step by step") {
  oracle::Rng rng(62);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 2 + trial % 5;
    auto gens = oracle::random_ideal(rng, n, 8, 2);
    std::shuffle(gens.begin(), gens.end(), rng);
    PrefixState state(n);
    std::vector<oracle::Exps> accepted;
    for (const auto& g : gens) {
      auto extended = accepted;
      extended.push_back(g);
      const bool ok = oracle::linear_quotients(extended);
      CHECK(incremental_colon_check(state, oracle::to_monomial(g)) == ok);
      if (ok) accepted = extended;
      CHECK(state.prefix().size() == accepted.size());
    }
  }
}

TEST_CASE("property: found orderings replay through the prefix check") {
  for (const auto& g : {h_n(6), h_n(7), g_n(6)}) {
    const auto r = find_ordering(power(edge_ideal(g), 2));
    REQUIRE(r.ordering.has_value());
    PrefixState state(g.n());
    for (const auto& x : r.ordering->order()) CHECK(incremental_colon_check(state, x));
  }
}

TEST_CASE("property: fixed seed and config give identical orderings") {
  const auto i = power(edge_ideal(g_n(7)), 2);
  for (const std::uint64_t seed : {0ull, 5ull, 99ull}) {
    SearchConfig cfg;
    cfg.seed = seed;
    const auto a = find_ordering(i, cfg);
    const auto b = find_ordering(i, cfg);
    REQUIRE(a.ordering.has_value());
    REQUIRE(b.ordering.has_value());
    CHECK(std::equal(a.ordering->order().begin(), a.ordering->order().end(),
                     b.ordering->order().begin(), b.ordering->order().end()));
    CHECK(a.nodes == b.nodes);
  }
}
