#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "linquot/search.hpp"

namespace linquot {

/// Stable key of an ideal: FNV-1a of its canonical JSON, as 16 hex digits.
std::string ideal_key(const MonomialIdeal& ideal);

/// Directory of found orderings, one `<key>.json` file per ideal holding the
/// ideal, the ordering, and its colon certificate.
class OrderingCache {
 public:
  explicit OrderingCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// LINQUOT_CACHE if set and non-empty.
  static std::optional<OrderingCache> from_environment();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const MonomialIdeal& ideal) const;

  /// Cached ordering for `ideal`, re-verified. Missing, unreadable, mismatched
  /// or failing entries yield nullopt.
  std::optional<OrderedGenerators> load(const MonomialIdeal& ideal) const;
  void store(const OrderedGenerators& ordering) const;

 private:
  std::filesystem::path dir_;
};

/// find_ordering behind an optional cache. Cache hits report zero nodes.
SearchResult find_ordering_cached(const MonomialIdeal& ideal, const SearchConfig& cfg,
                                  const OrderingCache* cache);

}  // namespace linquot
