#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linquot/quotients.hpp"

namespace linquot {

enum class Strategy { greedy, backtrack, exhaustive };

const char* to_string(Strategy s);
Strategy parse_strategy(const std::string& text);

struct SearchBudget {
  std::uint64_t max_nodes = 10'000'000;
  double max_seconds = 300.0;
};

struct SearchConfig {
  Strategy strategy = Strategy::backtrack;
  SearchBudget budget;
  /// 0 keeps the candidate order; anything else shuffles it deterministically.
  std::uint64_t seed = 0;
  /// Candidate order to try, a permutation of the generators. Default is
  /// descending lex.
  std::optional<std::vector<Monomial>> hint;
  /// Largest generator count exhaustive mode accepts.
  std::size_t exhaustive_cap = 12;
};

enum class SearchStatus { found, none_exists, budget_exhausted };

const char* to_string(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::budget_exhausted;
  std::optional<OrderedGenerators> ordering;  // set iff status == found
  std::uint64_t nodes = 0;  // candidate-extension attempts
  double seconds = 0.0;
  std::string kernel;  // name of the kernel table used
};

/// Searches for a linear-quotient ordering of `ideal`.
///
/// Depth-first over prefixes that have linear quotients, trying candidates
/// in the configured order. A prefix is extended only by generators whose
/// colon against it is generated by variables, and is abandoned as soon as
/// some unplaced generator has a pending quotient that no variable reachable
/// from the ideal could ever divide. Both prunings keep the search complete,
/// so a finished tree proves that no ordering exists.
///
/// Greedy mode never backtracks over an accepted generator; a dead end is
/// reported as budget_exhausted. Found orderings are re-verified with
/// verify_colon before return. Requires n <= 64 and exponents <= 255.
SearchResult find_ordering(const MonomialIdeal& ideal, const SearchConfig& cfg = {});

/// The colon condition evaluated one generator at a time.
class PrefixState {
 public:
  explicit PrefixState(std::size_t n) : n_(n) {}

  std::size_t n() const { return n_; }
  std::span<const Monomial> prefix() const { return prefix_; }

  /// True iff (prefix) : candidate is generated by variables. Empty prefix
  /// accepts anything.
  bool accepts(const Monomial& candidate) const;

 private:
  friend bool incremental_colon_check(PrefixState&, const Monomial&);
  std::size_t n_;
  std::vector<Monomial> prefix_;
};

/// Appends `candidate` and returns true if the prefix keeps linear quotients;
/// otherwise leaves the state untouched and returns false.
bool incremental_colon_check(PrefixState& state, const Monomial& candidate);

}  // namespace linquot
