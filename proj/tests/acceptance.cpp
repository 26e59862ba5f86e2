// Acceptance checks, one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "linquot/compose.hpp"
#include "linquot/graph.hpp"
#include "linquot/quotients.hpp"
#include "linquot/search.hpp"
#include "oracle.hpp"

using namespace linquot;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

MonomialIdeal anticycle_ideal(std::size_t n) {
  const Graph g = anticycle(n - 1);
  return edge_ideal(Graph(n, std::vector<Edge>(g.edges().begin(), g.edges().end())));
}

Outcome lex_positives() {
  Outcome o;
  const auto t0 = Clock::now();
  int checked = 0;
  for (std::size_t n = 6; n <= 10; ++n) {
    const auto ig = anticycle_ideal(n);
    const auto if_ = edge_ideal(star_f(n));
    const std::vector<std::pair<std::string, MonomialIdeal>> ideals{
        {"I_F", if_},
        {"I_F^2", power(if_, 2)},
        {"I_F^3", power(if_, 3)},
        {"I_G*I_F", product(ig, if_)},
        {"I_G*I_F^2", product(ig, power(if_, 2))},
        {"I_G^2*I_F", product(power(ig, 2), if_)},
    };
    for (const auto& [name, ideal] : ideals) {
      if (!verify_colon(OrderedGenerators::lex(ideal)).verdict) {
        fail(o, name + " at n=" + std::to_string(n) + " rejected");
      }
      ++checked;
    }
  }
  const double secs = since(t0);
  if (secs >= 10.0) fail(o, "took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = std::to_string(checked) + " lex orderings accepted in " + std::to_string(secs) + " s";
  return o;
}

Outcome composites() {
  Outcome o;
  const auto t0 = Clock::now();
  PlanOptions opts;
  opts.search.budget.max_nodes = 10'000'000;
  std::size_t largest = 0;
  for (std::size_t n = 6; n <= 9; ++n) {
    for (unsigned s : {2u, 3u}) {
      const std::string tag = "n=" + std::to_string(n) + ", s=" + std::to_string(s);
      try {
        const auto r = compose(paper_orderings(n, s, opts));
        if (!r.certificate.verdict) fail(o, tag + " rejected");
        if (!replay_certificate(r.ordering.order(), r.certificate).accepted) {
          fail(o, tag + " certificate does not replay");
        }
        largest = std::max(largest, r.ordering.size());
      } catch (const std::exception& e) {
        fail(o, tag + ": " + e.what());
      }
    }
  }
  if (o.pass) {
    o.detail = "8 composite orderings verified (largest " + std::to_string(largest) +
               " generators) in " + std::to_string(since(t0)) + " s";
  }
  return o;
}

Outcome lex_negative() {
  Outcome o;
  const auto t0 = Clock::now();
  for (std::size_t n = 5; n <= 10; ++n) {
    const auto og = OrderedGenerators::lex(power(edge_ideal(g_n(n)), 2));
    const auto cert = verify_colon(og);
    if (cert.verdict || !cert.failure || cert.failure->witness.degree() < 2 ||
        !replay_certificate(og.order(), cert).accepted) {
      fail(o, "n=" + std::to_string(n) + " not rejected with a valid witness");
    }
  }
  const double secs = since(t0);
  if (secs >= 5.0) fail(o, "took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = "6 lex orderings rejected with witnesses in " + std::to_string(secs) + " s";
  return o;
}

Outcome gap_check() {
  Outcome o;
  const Graph g = g_n(5);
  const auto gap = find_gap(g);
  if (!gap) {
    fail(o, "no gap found");
  } else if (!is_gap(g, gap->first, gap->second)) {
    fail(o, "returned edges are not a gap");
  } else {
    o.detail = "gap {" + std::to_string(gap->first.u) + "," + std::to_string(gap->first.v) +
               "}, {" + std::to_string(gap->second.u) + "," + std::to_string(gap->second.v) + "}";
  }
  return o;
}

Outcome search_reproduction() {
  Outcome o;
  SearchConfig cfg;
  cfg.budget.max_seconds = 300.0;
  const std::vector<std::pair<std::string, MonomialIdeal>> targets{
      {"I_{H_6}^2", power(edge_ideal(h_n(6)), 2)},
      {"I_{G_6}^2", power(edge_ideal(g_n(6)), 2)},
      {"I_{G_6}^3", power(edge_ideal(g_n(6)), 3)},
  };
  std::string detail;
  for (const auto& [name, ideal] : targets) {
    const auto r = find_ordering(ideal, cfg);
    if (r.status != SearchStatus::found || !verify_colon(*r.ordering).verdict) {
      fail(o, name + ": " + to_string(r.status));
      continue;
    }
    detail += (detail.empty() ? "" : "; ") + name + " found after " + std::to_string(r.nodes) +
              " nodes";
  }
  if (o.pass) o.detail = detail;
  return o;
}

Outcome binomial() {
  Outcome o;
  for (std::size_t n = 6; n <= 9; ++n) {
    for (unsigned s : {2u, 3u}) {
      std::vector<Monomial> pooled;
      for (const auto& part : binomial_decomposition(anticycle(n - 1), star_f(n), s)) {
        pooled.insert(pooled.end(), part.generators().begin(), part.generators().end());
      }
      const auto direct = oracle::power(oracle::to_exps(edge_ideal(h_n(n)).generators()), s);
      if (oracle::as_set(pooled) != direct || pooled.size() != direct.size()) {
        fail(o, "n=" + std::to_string(n) + ", s=" + std::to_string(s) + " differs");
      }
    }
  }
  if (o.pass) o.detail = "8 decompositions equal the direct powers";
  return o;
}

Outcome criterion_equivalence() {
  Outcome o;
  oracle::Rng rng(7001);
  int random_pairs = 0;
  for (; random_pairs < 10000; ++random_pairs) {
    auto gens = oracle::random_ideal(rng, 2 + random_pairs % 5, 8, 2);
    std::shuffle(gens.begin(), gens.end(), rng);
    const auto og = OrderedGenerators::from_sequence(oracle::to_monomials(gens));
    if (verify_colon(og).verdict != verify_works(og).verdict) fail(o, "random pair disagrees");
  }
  int ideals = 0;
  long orderings = 0;
  for (std::size_t r = 1; r <= 6; ++r) {
    int of_size = 0;
    while (of_size < 10) {
      auto gens = oracle::random_ideal(rng, 3 + of_size % 3, r + 3, 2);
      if (gens.size() != r) continue;
      std::sort(gens.begin(), gens.end());
      do {
        const auto og = OrderedGenerators::from_sequence(oracle::to_monomials(gens));
        if (verify_colon(og).verdict != verify_works(og).verdict) fail(o, "exhaustive disagrees");
        ++orderings;
      } while (std::next_permutation(gens.begin(), gens.end()));
      ++of_size;
      ++ideals;
    }
  }
  if (o.pass) {
    o.detail = std::to_string(random_pairs) + " random pairs and all " + std::to_string(orderings) +
               " orderings of " + std::to_string(ideals) + " ideals agree";
  }
  return o;
}

Outcome projection_properties() {
  Outcome o;
  oracle::Rng rng(7002);
  int samples = 0;
  long projections_checked = 0;
  while (samples < 10000) {
    const std::size_t n = 2 + rng() % 7;
    const int d = 1 + static_cast<int>(rng() % 4);
    auto e1 = oracle::random_exps_of_degree(rng, n, d);
    auto e2 = oracle::random_exps_of_degree(rng, n, d);
    if (e1 == e2) continue;
    if (oracle::lex_greater(e2, e1)) std::swap(e1, e2);
    const auto q12 = oracle::quotient(e1, e2);
    for (const auto& p : projections(oracle::to_monomial(e1), oracle::to_monomial(e2))) {
      const auto e3 = oracle::to_exps(p);
      const auto q32 = oracle::quotient(e3, e2);
      if (!oracle::lex_greater(e3, e2) || oracle::deg(q32) != 1 || !oracle::divides(q32, q12)) {
        fail(o, "violation");
      }
      ++projections_checked;
    }
    ++samples;
  }
  if (o.pass) {
    o.detail = std::to_string(samples) + " pairs, " + std::to_string(projections_checked) +
               " projections, 0 violations";
  }
  return o;
}

Outcome oracle_completeness() {
  Outcome o;
  oracle::Rng rng(7003);
  int instances = 0;
  int positive = 0;
  SearchConfig cfg;
  cfg.strategy = Strategy::exhaustive;
  while (instances < 500) {
    const auto gens = oracle::random_ideal(rng, 2 + instances % 5, 9, 2);
    if (gens.size() > 7) continue;
    const bool exists = oracle::some_ordering_exists(gens);
    const auto r = find_ordering(minimalize(oracle::to_monomials(gens)), cfg);
    const auto want = exists ? SearchStatus::found : SearchStatus::none_exists;
    if (r.status != want) fail(o, "instance " + std::to_string(instances) + " disagrees");
    positive += exists;
    ++instances;
  }
  if (o.pass) {
    o.detail = std::to_string(instances) + " instances agree (" + std::to_string(positive) +
               " with an ordering)";
  }
  return o;
}

Outcome h_family_normalization() {
  Outcome o;
  int pairs = 0;
  for (std::size_t n = 7; n <= 10; ++n) {
    const auto target = oracle::edges_of(h_n(n));
    for (std::size_t a = 1; a <= n; ++a) {
      for (const std::size_t b : {(a + 1) % n + 1, (a + n - 3) % n + 1}) {
        const auto member = h_family(n, a, b);
        if (oracle::edges_of(relabel(member.graph, member.perm)) != target) {
          fail(o, "n=" + std::to_string(n) + " (" + std::to_string(a) + "," + std::to_string(b) +
                      ") does not map onto H_n");
        }
        ++pairs;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " (n, a, b) triples map exactly onto H_n";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"lex orderings with linear quotients", lex_positives},
      {"composite orderings of I_{H_n}^s", composites},
      {"lex ordering of I_{G_n}^2 rejected", lex_negative},
      {"gap in G_5", gap_check},
      {"search finds orderings", search_reproduction},
      {"binomial decomposition", binomial},
      {"colon and works criteria agree", criterion_equivalence},
      {"projection properties", projection_properties},
      {"exhaustive search matches the permutation oracle", oracle_completeness},
      {"h_family normalization", h_family_normalization},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::printf("%s criterion %zu: %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
                o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed;
}
