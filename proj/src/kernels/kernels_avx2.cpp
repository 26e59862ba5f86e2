#include <immintrin.h>

#include "linquot/kernels.hpp"

namespace linquot::kernels::detail {
namespace {

#define LINQUOT_AVX2 __attribute__((target("avx2")))

LINQUOT_AVX2 inline std::uint32_t horizontal_sum(__m256i sad) {
  const __m128i folded =
      _mm_add_epi64(_mm256_castsi256_si128(sad), _mm256_extracti128_si256(sad, 1));
  return static_cast<std::uint32_t>(_mm_cvtsi128_si64(folded) + _mm_extract_epi64(folded, 1));
}

// Saturating byte subtraction is exactly the monomial quotient exponent.
LINQUOT_AVX2 inline QuotientSummary summarize(const std::uint8_t* a, const std::uint8_t* b,
                                              std::size_t stride) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i q0 = _mm256_subs_epu8(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a)),
                                      _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b)));
  const auto zeros0 = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(q0, zero)));
  QuotientSummary s;
  s.support = ~zeros0;
  __m256i sad = _mm256_sad_epu8(q0, zero);
  if (stride == 64) {
    const __m256i q1 =
        _mm256_subs_epu8(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + 32)),
                         _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + 32)));
    const auto zeros1 =
        static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(q1, zero)));
    s.support |= std::uint64_t{static_cast<std::uint32_t>(~zeros1)} << 32;
    sad = _mm256_add_epi64(sad, _mm256_sad_epu8(q1, zero));
  }
  s.support &= stride == 64 ? ~std::uint64_t{0} : 0xffffffffull;
  s.degree = horizontal_sum(sad);
  return s;
}

LINQUOT_AVX2 void rows_over_fixed_avx2(const std::uint8_t* rows, std::size_t count,
                                       std::size_t stride, const std::uint8_t* fixed,
                                       QuotientSummary* out) {
  for (std::size_t r = 0; r < count; ++r) out[r] = summarize(rows + r * stride, fixed, stride);
}

LINQUOT_AVX2 void fixed_over_rows_avx2(const std::uint8_t* rows, std::size_t count,
                                       std::size_t stride, const std::uint8_t* fixed,
                                       QuotientSummary* out) {
  for (std::size_t r = 0; r < count; ++r) out[r] = summarize(fixed, rows + r * stride, stride);
}

#undef LINQUOT_AVX2

}  // namespace

const KernelTable& avx2_kernels() {
  static const KernelTable table{"avx2", &rows_over_fixed_avx2, &fixed_over_rows_avx2};
  return table;
}

}  // namespace linquot::kernels::detail
