#include "linquot/search.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "linquot/kernels.hpp"

namespace linquot {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::greedy:
      return "greedy";
    case Strategy::backtrack:
      return "backtrack";
    case Strategy::exhaustive:
      return "exhaustive";
  }
  return "?";
}

Strategy parse_strategy(const std::string& text) {
  if (text == "greedy") return Strategy::greedy;
  if (text == "backtrack") return Strategy::backtrack;
  if (text == "exhaustive") return Strategy::exhaustive;
  throw std::invalid_argument("unknown strategy '" + text + "'");
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::none_exists:
      return "none_exists";
    case SearchStatus::budget_exhausted:
      return "budget_exhausted";
  }
  return "?";
}

namespace {

using kernels::QuotientSummary;

// Per-candidate bookkeeping for the prefix currently on the search stack.
//
// For an unplaced candidate m, `linear[m]` collects the variables x_k with
// q : m == x_k for some placed q, and `pending[m]` holds the supports of the
// non-variable quotients q : m that no such variable divided when q was
// placed. `unsat[m]` counts the entries of pending[m] still disjoint from
// linear[m]; m may be appended exactly when unsat[m] == 0.
class Engine {
 public:
  Engine(std::vector<Monomial> candidates, std::size_t n)
      : cands_(std::move(candidates)),
        rows_(n, cands_),
        r_(cands_.size()),
        reachable_(r_, 0),
        linear_(r_, 0),
        unsat_(r_, 0),
        pending_(r_),
        placed_(r_, false),
        scratch_(r_) {
    const auto& kt = kernels::active_kernels();
    for (std::size_t q = 0; q < r_; ++q) {
      kt.fixed_over_rows(rows_.data(), r_, rows_.stride(), rows_.row(q), scratch_.data());
      for (std::size_t m = 0; m < r_; ++m) {
        if (m != q && scratch_[m].degree == 1) reachable_[m] |= scratch_[m].support;
      }
    }
  }

  std::size_t size() const { return r_; }
  std::size_t depth() const { return order_.size(); }
  bool placed(std::size_t c) const { return placed_[c]; }
  bool ready(std::size_t c) const { return !placed_[c] && unsat_[c] == 0; }
  const std::vector<std::size_t>& order() const { return order_; }
  const std::vector<Monomial>& candidates() const { return cands_; }

  // Places q. Returns false if some unplaced candidate became unplaceable;
  // the caller must then undo().
  bool append(std::size_t q) {
    kernels::active_kernels().fixed_over_rows(rows_.data(), r_, rows_.stride(), rows_.row(q),
                                              scratch_.data());
    marks_.push_back(log_.size());
    placed_[q] = true;
    order_.push_back(q);
    bool alive = true;
    for (std::size_t m = 0; m < r_; ++m) {
      if (placed_[m]) continue;
      const QuotientSummary s = scratch_[m];
      if (s.degree == 1) {
        const std::uint64_t fresh = s.support & ~linear_[m];
        if (fresh == 0) continue;
        log_.push_back({m, linear_[m], unsat_[m], false});
        for (const std::uint64_t mask : pending_[m]) {
          if ((mask & linear_[m]) == 0 && (mask & fresh) != 0) --unsat_[m];
        }
        linear_[m] |= fresh;
      } else if ((s.support & linear_[m]) == 0) {
        log_.push_back({m, linear_[m], unsat_[m], true});
        pending_[m].push_back(s.support);
        ++unsat_[m];
        if ((s.support & reachable_[m]) == 0) alive = false;
      }
    }
    return alive;
  }

  void undo() {
    const std::size_t mark = marks_.back();
    marks_.pop_back();
    while (log_.size() > mark) {
      const Change& c = log_.back();
      linear_[c.candidate] = c.linear;
      unsat_[c.candidate] = c.unsat;
      if (c.pushed) pending_[c.candidate].pop_back();
      log_.pop_back();
    }
    placed_[order_.back()] = false;
    order_.pop_back();
  }

 private:
  struct Change {
    std::size_t candidate;
    std::uint64_t linear;
    std::uint32_t unsat;
    bool pushed;
  };

  std::vector<Monomial> cands_;
  kernels::PackedRows rows_;
  std::size_t r_;
  std::vector<std::uint64_t> reachable_;
  std::vector<std::uint64_t> linear_;
  std::vector<std::uint32_t> unsat_;
  std::vector<std::vector<std::uint64_t>> pending_;
  std::vector<bool> placed_;
  std::vector<std::size_t> order_;
  std::vector<Change> log_;
  std::vector<std::size_t> marks_;
  std::vector<QuotientSummary> scratch_;
};

std::vector<Monomial> candidate_order(const MonomialIdeal& ideal, const SearchConfig& cfg) {
  std::vector<Monomial> cands;
  if (cfg.hint) {
    cands = *cfg.hint;
    std::unordered_set<Monomial, MonomialHash> seen;
    for (const auto& m : cands) {
      if (!ideal.contains_generator(m) || !seen.insert(m).second) {
        throw std::invalid_argument("search hint is not a permutation of the generators");
      }
    }
    if (cands.size() != ideal.size()) {
      throw std::invalid_argument("search hint is not a permutation of the generators");
    }
  } else {
    cands.assign(ideal.generators().begin(), ideal.generators().end());
  }
  if (cfg.seed != 0) {
    std::mt19937_64 rng(cfg.seed);
    std::shuffle(cands.begin(), cands.end(), rng);
  }
  return cands;
}

}  // namespace

SearchResult find_ordering(const MonomialIdeal& ideal, const SearchConfig& cfg) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  if (ideal.size() == 0) throw std::invalid_argument("find_ordering: ideal has no generators");
  if (cfg.budget.max_nodes == 0 || !(cfg.budget.max_seconds > 0)) {
    throw std::invalid_argument("find_ordering: budget must be positive");
  }
  if (cfg.strategy == Strategy::exhaustive && ideal.size() > cfg.exhaustive_cap) {
    throw std::invalid_argument("find_ordering: exhaustive mode is capped at " +
                                std::to_string(cfg.exhaustive_cap) + " generators");
  }

  Engine engine(candidate_order(ideal, cfg), ideal.n());
  SearchResult result;
  result.kernel = std::string(kernels::active_kernels().name);
  const auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };

  // next[d] is the first candidate index still to try at depth d.
  std::vector<std::size_t> next{0};
  const bool may_backtrack = cfg.strategy != Strategy::greedy;
  bool exhausted = false;
  while (engine.depth() < engine.size()) {
    std::size_t& cursor = next.back();
    while (cursor < engine.size() && !engine.ready(cursor)) ++cursor;
    if (cursor == engine.size()) {
      if (!may_backtrack || next.size() == 1) {
        exhausted = may_backtrack;
        break;
      }
      next.pop_back();
      engine.undo();
      continue;
    }
    const std::size_t c = cursor++;
    if (++result.nodes > cfg.budget.max_nodes ||
        ((result.nodes & 0xfff) == 0 && elapsed() > cfg.budget.max_seconds)) {
      --result.nodes;
      break;
    }
    if (engine.append(c)) {
      next.push_back(0);
    } else {
      engine.undo();
    }
  }

  result.seconds = elapsed();
  if (engine.depth() == engine.size()) {
    std::vector<Monomial> seq;
    seq.reserve(engine.size());
    for (auto c : engine.order()) seq.push_back(engine.candidates()[c]);
    OrderedGenerators og(ideal, std::move(seq));
    if (!verify_colon(og).verdict) {
      throw std::logic_error("find_ordering: search produced an ordering that fails verification");
    }
    result.status = SearchStatus::found;
    result.ordering = std::move(og);
  } else {
    result.status = exhausted ? SearchStatus::none_exists : SearchStatus::budget_exhausted;
  }
  return result;
}

bool PrefixState::accepts(const Monomial& candidate) const {
  if (candidate.n() != n_) throw std::invalid_argument("PrefixState: candidate with wrong n");
  std::vector<Monomial> quotients;
  quotients.reserve(prefix_.size());
  std::vector<bool> is_var(n_, false);
  for (const auto& p : prefix_) {
    quotients.push_back(colon(p, candidate));
    const auto& q = quotients.back();
    if (q.degree() == 1) {
      for (std::size_t k = 0; k < n_; ++k) {
        if (q.exponents()[k] != 0) is_var[k] = true;
      }
    }
  }
  return std::all_of(quotients.begin(), quotients.end(), [&](const Monomial& q) {
    for (std::size_t k = 0; k < n_; ++k) {
      if (q.exponents()[k] != 0 && is_var[k]) return true;
    }
    return false;
  });
}

bool incremental_colon_check(PrefixState& state, const Monomial& candidate) {
  if (!state.accepts(candidate)) return false;
  state.prefix_.push_back(candidate);
  return true;
}

}  // namespace linquot
