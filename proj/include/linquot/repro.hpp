#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "linquot/compose.hpp"

namespace linquot {

/// Named, checkable claims about edge ideals of anticycle-derived graphs.
enum class ReproCase {
  igif_lex,            // lex order on I_G*I_F has linear quotients
  igif2_lex,           // lex order on I_G*I_F^2 has linear quotients
  ig2if_lex,           // lex order on I_G^2*I_F has linear quotients
  if_power_lex,        // lex order on I_F^s has linear quotients
  cor2,                // I_{H_n}^2 via the composite ordering with lex blocks
  lem_main_s2,         // composite ordering of I_{H_n}^2
  lem_main_s3,         // composite ordering of I_{H_n}^3
  lex_counterexample,  // lex order on I_{G_n}^2 is not a linear-quotient order
  gap_g5,              // G_5 has the gap ({1,3},{2,5}); so I_{G_5}^2 has no ordering
  rmk0_search,         // search finds an ordering of I_{G_n}^3
  binomial_decomp,     // I_{H_n}^s is the sum of the I_G^i * I_F^j
  h_family_normalize,  // every modified anticycle relabels onto H_n
};

const std::vector<ReproCase>& all_repro_cases();
const char* to_string(ReproCase c);
ReproCase parse_repro_case(const std::string& name);

struct ReproParams {
  std::optional<std::size_t> n;
  std::optional<unsigned> s;
  std::optional<std::size_t> a;
  std::optional<std::size_t> b;
  SearchConfig search;
  const OrderingCache* cache = nullptr;
  unsigned threads = 1;
};

enum class Outcome { confirmed, refuted, budget_exhausted, invalid_input };

/// 0 confirmed, 1 refuted, 2 budget exhausted, 3 invalid input.
int exit_code(Outcome o);
const char* to_string(Outcome o);

struct ReproReport {
  ReproCase which = ReproCase::igif_lex;
  std::string claim;
  Outcome outcome = Outcome::invalid_input;
  std::vector<std::string> lines;  // human-readable summary
  nlohmann::json document;         // full JSON output, certificates included
};

/// Runs one case. Invalid parameters produce Outcome::invalid_input rather
/// than an exception.
ReproReport run_case(ReproCase c, const ReproParams& params);

/// Independently re-checks the evidence embedded in a case document: replays
/// every quotient certificate against its ordering, re-tests gaps and graph
/// relabellings, and recomputes set equalities. Returns an empty string on
/// success, else the first problem found.
std::string replay_case_document(const nlohmann::json& document);

}  // namespace linquot
