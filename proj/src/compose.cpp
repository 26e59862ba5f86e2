#include "linquot/compose.hpp"

#include <algorithm>
#include <future>

namespace linquot {
namespace {

// g0 lives on [n-1]; its edge ideal is taken in the ring of f0.
MonomialIdeal lifted_edge_ideal(const Graph& g0, std::size_t n) {
  return edge_ideal(Graph(n, std::vector<Edge>(g0.edges().begin(), g0.edges().end())));
}

void check_shape(const Graph& g0, const Graph& f0, unsigned s) {
  if (s < 2) throw CompositeError(CompositeHypothesis::shape, "power s must be at least 2");
  const auto center = star_center(f0);
  if (!center || *center != f0.n()) {
    throw CompositeError(CompositeHypothesis::shape, "f0 must be a star centered at n");
  }
  if (g0.n() + 1 != f0.n()) {
    throw CompositeError(CompositeHypothesis::shape, "g0 must live on [n-1]");
  }
  if (g0.edge_count() == 0) throw CompositeError(CompositeHypothesis::shape, "g0 has no edges");
}

}  // namespace

const char* to_string(CompositeHypothesis h) {
  switch (h) {
    case CompositeHypothesis::shape:
      return "shape";
    case CompositeHypothesis::adjacency:
      return "adjacency";
    case CompositeHypothesis::summand_mismatch:
      return "summand_mismatch";
    case CompositeHypothesis::stratification:
      return "stratification";
    case CompositeHypothesis::degree_uniformity:
      return "degree_uniformity";
    case CompositeHypothesis::sub_ordering_fails:
      return "sub_ordering_fails";
    case CompositeHypothesis::coverage:
      return "coverage";
  }
  return "?";
}

CompositeError::CompositeError(CompositeHypothesis h, const std::string& detail)
    : std::runtime_error(std::string("composite hypothesis '") + to_string(h) +
                         "' violated: " + detail),
      hypothesis_(h) {}

std::vector<MonomialIdeal> binomial_decomposition(const Graph& g0, const Graph& f0, unsigned s) {
  check_shape(g0, f0, s);
  const std::size_t n = f0.n();
  const auto ig = lifted_edge_ideal(g0, n);
  const auto if_ = edge_ideal(f0);
  std::vector<MonomialIdeal> out;
  out.reserve(s + 1);
  for (unsigned k = 0; k <= s; ++k) {
    const unsigned j = s - k;
    if (k == 0) {
      out.push_back(power(if_, s));
    } else if (j == 0) {
      out.push_back(power(ig, s));
    } else {
      out.push_back(product(power(ig, k), power(if_, j)));
    }
  }
  return out;
}

CompositeResult compose(const CompositePlan& plan, unsigned threads) {
  const unsigned s = plan.s;
  check_shape(plan.g0, plan.f0, s);
  const std::size_t n = plan.f0.n();
  if (plan.n != n) throw CompositeError(CompositeHypothesis::shape, "plan n disagrees with f0");
  if (plan.sub_orderings.size() != s + 1) {
    throw CompositeError(CompositeHypothesis::shape, "expected s + 1 sub-orderings");
  }
  if (!star_adjacency_condition(plan.g0, plan.f0)) {
    throw CompositeError(CompositeHypothesis::adjacency,
                         "an edge of g0 shares no vertex with the star");
  }

  const auto summands = binomial_decomposition(plan.g0, plan.f0, s);
  for (unsigned k = 0; k <= s; ++k) {
    const unsigned j = s - k;
    const auto& block = plan.sub_orderings[k];
    for (const auto& g : block.order()) {
      if (g.n() != n || g.exponent(n) != j) {
        throw CompositeError(CompositeHypothesis::stratification,
                             to_string(g) + " placed in block of x_n-degree " + std::to_string(j));
      }
      if (g.degree() != 2ull * s) {
        throw CompositeError(CompositeHypothesis::degree_uniformity,
                             to_string(g) + " does not have degree " + std::to_string(2 * s));
      }
    }
    if (block.ideal() != summands[k]) {
      throw CompositeError(CompositeHypothesis::summand_mismatch,
                           "block of x_n-degree " + std::to_string(j) +
                               " does not order the matching summand");
    }
  }

  std::vector<QuotientCertificate> certs(s + 1);
  if (threads > 1) {
    std::vector<std::future<QuotientCertificate>> pending;
    for (unsigned k = 0; k <= s; ++k) {
      pending.push_back(std::async(std::launch::async,
                                   [&, k] { return verify_colon(plan.sub_orderings[k]); }));
    }
    for (unsigned k = 0; k <= s; ++k) certs[k] = pending[k].get();
  } else {
    for (unsigned k = 0; k <= s; ++k) certs[k] = verify_colon(plan.sub_orderings[k]);
  }
  for (unsigned k = 0; k <= s; ++k) {
    if (!certs[k].verdict) {
      throw CompositeError(CompositeHypothesis::sub_ordering_fails,
                           "block of x_n-degree " + std::to_string(s - k) +
                               " is not a linear-quotient ordering");
    }
  }

  std::vector<Monomial> concatenated;
  for (const auto& block : plan.sub_orderings) {
    concatenated.insert(concatenated.end(), block.order().begin(), block.order().end());
  }
  const auto full = power(edge_ideal(graph_union(plan.g0, plan.f0)), s);
  if (full.size() != concatenated.size()) {
    throw CompositeError(CompositeHypothesis::coverage,
                         "blocks hold " + std::to_string(concatenated.size()) +
                             " generators, the power has " + std::to_string(full.size()));
  }
  std::optional<OrderedGenerators> ordering;
  try {
    ordering.emplace(full, std::move(concatenated));
  } catch (const std::invalid_argument& e) {
    throw CompositeError(CompositeHypothesis::coverage, e.what());
  }
  auto cert = verify_colon(*ordering);
  return {std::move(*ordering), std::move(certs), std::move(cert)};
}

CompositePlan paper_orderings(std::size_t n, unsigned s, const PlanOptions& options) {
  if (n < 6) throw std::invalid_argument("paper_orderings requires n >= 6");
  if (s < 2) throw std::invalid_argument("paper_orderings requires s >= 2");
  CompositePlan plan{n, s, anticycle(n - 1), star_f(n), {}};
  auto summands = binomial_decomposition(plan.g0, plan.f0, s);
  for (unsigned k = 0; k < s; ++k) plan.sub_orderings.push_back(OrderedGenerators::lex(summands[k]));

  auto found = find_ordering_cached(summands[s], options.search, options.cache);
  if (!found.ordering) {
    throw SearchFailure(found, std::string("no ordering of the pure anticycle power: search ") +
                                   to_string(found.status));
  }
  plan.sub_orderings.push_back(std::move(*found.ordering));
  return plan;
}

}  // namespace linquot
