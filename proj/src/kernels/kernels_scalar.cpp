#include <algorithm>
#include <cstdlib>
#include <new>
#include <stdexcept>

#include "linquot/kernels.hpp"

namespace linquot::kernels {
namespace {

inline QuotientSummary summarize(const std::uint8_t* a, const std::uint8_t* b,
                                 std::size_t stride) {
  QuotientSummary s;
  for (std::size_t k = 0; k < stride; ++k) {
    const unsigned q = a[k] > b[k] ? a[k] - b[k] : 0u;
    if (q != 0) s.support |= std::uint64_t{1} << k;
    s.degree += q;
  }
  return s;
}

void rows_over_fixed_scalar(const std::uint8_t* rows, std::size_t count, std::size_t stride,
                            const std::uint8_t* fixed, QuotientSummary* out) {
  for (std::size_t r = 0; r < count; ++r) out[r] = summarize(rows + r * stride, fixed, stride);
}

void fixed_over_rows_scalar(const std::uint8_t* rows, std::size_t count, std::size_t stride,
                            const std::uint8_t* fixed, QuotientSummary* out) {
  for (std::size_t r = 0; r < count; ++r) out[r] = summarize(fixed, rows + r * stride, stride);
}

}  // namespace

void PackedRows::AlignedFree::operator()(std::uint8_t* p) const { std::free(p); }

std::size_t PackedRows::stride_for(std::size_t n) {
  if (n > kMaxVariables) throw std::length_error("packed rows support at most 64 variables");
  return n <= 32 ? 32 : 64;
}

PackedRows::PackedRows(std::size_t n, std::span<const Monomial> monomials)
    : n_(n), count_(monomials.size()), stride_(stride_for(n)) {
  const std::size_t bytes = std::max<std::size_t>(count_ * stride_, stride_);
  auto* raw = static_cast<std::uint8_t*>(std::aligned_alloc(64, (bytes + 63) / 64 * 64));
  if (raw == nullptr) throw std::bad_alloc();
  data_.reset(raw);
  std::fill(raw, raw + bytes, std::uint8_t{0});
  for (std::size_t r = 0; r < count_; ++r) {
    const auto& m = monomials[r];
    if (m.n() != n) throw std::invalid_argument("PackedRows: monomial with wrong n");
    for (std::size_t k = 0; k < n; ++k) {
      const auto e = m.exponents()[k];
      if (e > kMaxPackedExponent) throw std::length_error("PackedRows: exponent exceeds 255");
      raw[r * stride_ + k] = static_cast<std::uint8_t>(e);
    }
  }
}

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", &rows_over_fixed_scalar, &fixed_over_rows_scalar};
  return table;
}

}  // namespace linquot::kernels
