#pragma once

// Packed exponent rows and the data-parallel quotient kernels behind the
// ordering search.
//
// A row holds one monomial as unsigned 8-bit exponents, zero padded to a
// stride of 32 or 64 bytes, so one or two 256-bit registers cover a monomial
// in up to 64 variables. Every kernel has a scalar reference version; vector
// versions must produce bit-identical output.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "linquot/monomial.hpp"

namespace linquot::kernels {

inline constexpr std::size_t kMaxVariables = 64;
inline constexpr Monomial::Exponent kMaxPackedExponent = 255;

/// Support and degree of a monomial quotient a : b.
struct QuotientSummary {
  std::uint64_t support = 0;  // bit k-1 set iff x_k divides the quotient
  std::uint32_t degree = 0;

  friend bool operator==(const QuotientSummary&, const QuotientSummary&) = default;
};

class PackedRows {
 public:
  PackedRows() = default;
  /// Throws std::length_error if n > 64 or an exponent exceeds 255.
  PackedRows(std::size_t n, std::span<const Monomial> monomials);

  std::size_t n() const { return n_; }
  std::size_t size() const { return count_; }
  std::size_t stride() const { return stride_; }
  const std::uint8_t* data() const { return data_.get(); }
  const std::uint8_t* row(std::size_t k) const { return data_.get() + k * stride_; }

  /// Stride a ring with n variables packs to.
  static std::size_t stride_for(std::size_t n);

 private:
  struct AlignedFree {
    void operator()(std::uint8_t* p) const;
  };
  std::size_t n_ = 0;
  std::size_t count_ = 0;
  std::size_t stride_ = 32;
  std::unique_ptr<std::uint8_t[], AlignedFree> data_;
};

/// out[k] = summary of rows[k] : fixed.
using RowsOverFixedFn = void (*)(const std::uint8_t* rows, std::size_t count, std::size_t stride,
                                 const std::uint8_t* fixed, QuotientSummary* out);
/// out[k] = summary of fixed : rows[k]; same argument order as RowsOverFixedFn.
using FixedOverRowsFn = RowsOverFixedFn;

struct KernelTable {
  std::string_view name;
  RowsOverFixedFn rows_over_fixed;
  FixedOverRowsFn fixed_over_rows;
};

const KernelTable& scalar_kernels();
/// Vector implementations compiled into this build, usable on this CPU.
std::vector<const KernelTable*> available_kernels();
/// Best available table. The LINQUOT_KERNEL environment variable (scalar,
/// avx2, neon) overrides the choice when that table is available.
const KernelTable& active_kernels();

// Convenience wrappers over the active table.
void rows_over_fixed(const PackedRows& rows, const std::uint8_t* fixed,
                     std::span<QuotientSummary> out);
void fixed_over_rows(const std::uint8_t* fixed, const PackedRows& rows,
                     std::span<QuotientSummary> out);

namespace detail {
#if defined(__x86_64__) || defined(_M_X64)
const KernelTable& avx2_kernels();
#endif
#if defined(__aarch64__)
const KernelTable& neon_kernels();
#endif
}  // namespace detail

}  // namespace linquot::kernels
