#include "linquot/ordering_cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "linquot/json_io.hpp"
#include "linquot/kernels.hpp"

namespace linquot {

std::string ideal_key(const MonomialIdeal& ideal) {
  const std::string text = json(ideal).dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<OrderingCache> OrderingCache::from_environment() {
  const char* dir = std::getenv("LINQUOT_CACHE");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return OrderingCache(dir);
}

std::filesystem::path OrderingCache::path_for(const MonomialIdeal& ideal) const {
  return dir_ / (ideal_key(ideal) + ".json");
}

std::optional<OrderedGenerators> OrderingCache::load(const MonomialIdeal& ideal) const {
  std::ifstream in(path_for(ideal));
  if (!in) return std::nullopt;
  try {
    const json j = json::parse(in);
    if (j.at("ideal").get<MonomialIdeal>() != ideal) return std::nullopt;
    auto og = ordering_from_json(j.at("ordering"));
    if (og.ideal() != ideal || !verify_colon(og).verdict) return std::nullopt;
    return og;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void OrderingCache::store(const OrderedGenerators& ordering) const {
  std::filesystem::create_directories(dir_);
  const json j{{"ideal", ordering.ideal()},
               {"ordering", ordering_to_json(ordering)},
               {"certificate", verify_colon(ordering)}};
  const auto target = path_for(ordering.ideal());
  const auto tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, target);
}

SearchResult find_ordering_cached(const MonomialIdeal& ideal, const SearchConfig& cfg,
                                  const OrderingCache* cache) {
  if (cache != nullptr) {
    if (auto hit = cache->load(ideal)) {
      SearchResult r;
      r.status = SearchStatus::found;
      r.ordering = std::move(hit);
      r.kernel = std::string(kernels::active_kernels().name);
      return r;
    }
  }
  auto result = find_ordering(ideal, cfg);
  if (cache != nullptr && result.ordering) cache->store(*result.ordering);
  return result;
}

}  // namespace linquot
