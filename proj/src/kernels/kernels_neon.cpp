#include <arm_neon.h>

#include "linquot/kernels.hpp"

namespace linquot::kernels::detail {
namespace {

constexpr std::uint8_t kLaneBits[16] = {1, 2, 4, 8, 16, 32, 64, 128,
                                        1, 2, 4, 8, 16, 32, 64, 128};

inline void accumulate(uint8x16_t q, std::size_t lane_offset, QuotientSummary& s) {
  const uint8x16_t bits = vandq_u8(vcgtq_u8(q, vdupq_n_u8(0)), vld1q_u8(kLaneBits));
  const std::uint64_t lo = vaddv_u8(vget_low_u8(bits));
  const std::uint64_t hi = vaddv_u8(vget_high_u8(bits));
  s.support |= (lo | (hi << 8)) << lane_offset;
  s.degree += vaddlvq_u8(q);
}

inline QuotientSummary summarize(const std::uint8_t* a, const std::uint8_t* b,
                                 std::size_t stride) {
  QuotientSummary s;
  for (std::size_t off = 0; off < stride; off += 16) {
    accumulate(vqsubq_u8(vld1q_u8(a + off), vld1q_u8(b + off)), off, s);
  }
  return s;
}

void rows_over_fixed_neon(const std::uint8_t* rows, std::size_t count, std::size_t stride,
                          const std::uint8_t* fixed, QuotientSummary* out) {
  for (std::size_t r = 0; r < count; ++r) out[r] = summarize(rows + r * stride, fixed, stride);
}

void fixed_over_rows_neon(const std::uint8_t* rows, std::size_t count, std::size_t stride,
                          const std::uint8_t* fixed, QuotientSummary* out) {
  for (std::size_t r = 0; r < count; ++r) out[r] = summarize(fixed, rows + r * stride, stride);
}

}  // namespace

const KernelTable& neon_kernels() {
  static const KernelTable table{"neon", &rows_over_fixed_neon, &fixed_over_rows_neon};
  return table;
}

}  // namespace linquot::kernels::detail
