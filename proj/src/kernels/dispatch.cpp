#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "linquot/kernels.hpp"

namespace linquot::kernels {

std::vector<const KernelTable*> available_kernels() {
  std::vector<const KernelTable*> out;
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2")) out.push_back(&detail::avx2_kernels());
#endif
#if defined(__aarch64__)
  out.push_back(&detail::neon_kernels());
#endif
  return out;
}

const KernelTable& active_kernels() {
  static const KernelTable& chosen = [&]() -> const KernelTable& {
    const auto vector = available_kernels();
    if (const char* forced = std::getenv("LINQUOT_KERNEL")) {
      const std::string_view want(forced);
      if (want == "scalar") return scalar_kernels();
      for (const auto* table : vector) {
        if (table->name == want) return *table;
      }
    }
    return vector.empty() ? scalar_kernels() : *vector.front();
  }();
  return chosen;
}

void rows_over_fixed(const PackedRows& rows, const std::uint8_t* fixed,
                     std::span<QuotientSummary> out) {
  if (out.size() < rows.size()) throw std::invalid_argument("rows_over_fixed: output too small");
  active_kernels().rows_over_fixed(rows.data(), rows.size(), rows.stride(), fixed, out.data());
}

void fixed_over_rows(const std::uint8_t* fixed, const PackedRows& rows,
                     std::span<QuotientSummary> out) {
  if (out.size() < rows.size()) throw std::invalid_argument("fixed_over_rows: output too small");
  active_kernels().fixed_over_rows(rows.data(), rows.size(), rows.stride(), fixed, out.data());
}

}  // namespace linquot::kernels
