#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linquot/graph.hpp"
#include "linquot/ordering_cache.hpp"
#include "linquot/quotients.hpp"
#include "linquot/search.hpp"

namespace linquot {

/// Inputs of the composite construction for (I_{g0} + I_{f0})^s.
///
/// g0 is a graph on [n-1], f0 a star on [n] centered at n. sub_orderings[k]
/// orders the generators of I_{g0}^k * I_{f0}^(s-k), so the list runs
/// O_s, O_{s-1}, ..., O_0 with O_j the block of x_n-degree j.
struct CompositePlan {
  std::size_t n = 0;
  unsigned s = 0;
  Graph g0;
  Graph f0;
  std::vector<OrderedGenerators> sub_orderings;
};

/// [I_F^s, I_G * I_F^(s-1), ..., I_G^s] for G = g0 and F = f0, i.e. the
/// summands in order of descending x_n-degree.
std::vector<MonomialIdeal> binomial_decomposition(const Graph& g0, const Graph& f0, unsigned s);

/// Which requirement of the construction a plan violates.
enum class CompositeHypothesis {
  shape,               // s, vertex counts, star centered at n, block count
  adjacency,           // some edge of g0 misses every edge of f0
  summand_mismatch,    // a block does not order the matching summand
  stratification,      // a generator in block O_j has x_n-degree != j
  degree_uniformity,   // generators not all of degree 2s
  sub_ordering_fails,  // a block is not a linear-quotient ordering
  coverage,            // blocks do not partition the generators of the power
};

const char* to_string(CompositeHypothesis h);

class CompositeError : public std::runtime_error {
 public:
  CompositeError(CompositeHypothesis h, const std::string& detail);
  CompositeHypothesis hypothesis() const { return hypothesis_; }

 private:
  CompositeHypothesis hypothesis_;
};

struct CompositeResult {
  OrderedGenerators ordering;
  std::vector<QuotientCertificate> sub_certificates;  // parallel to plan.sub_orderings
  QuotientCertificate certificate;                    // of the concatenated ordering
};

/// Checks every precondition (throwing CompositeError on the first violated
/// one), concatenates O_s, ..., O_0 and verifies the result. `threads` > 1
/// verifies the blocks concurrently.
CompositeResult compose(const CompositePlan& plan, unsigned threads = 1);

struct PlanOptions {
  SearchConfig search;
  const OrderingCache* cache = nullptr;
};

/// G = anticycle(n-1), F = star_f(n); O_j descending lex for j >= 1 and O_0 a
/// searched ordering of I_G^s. Throws SearchFailure if the search ends
/// without an ordering.
CompositePlan paper_orderings(std::size_t n, unsigned s, const PlanOptions& options = {});

class SearchFailure : public std::runtime_error {
 public:
  SearchFailure(SearchResult result, const std::string& what)
      : std::runtime_error(what), result_(std::move(result)) {}
  const SearchResult& result() const { return result_; }

 private:
  SearchResult result_;
};

}  // namespace linquot
