#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace linquot {

/// A monic monomial x_1^e_1 * ... * x_n^e_n in a polynomial ring with n variables.
///
/// Variables are addressed 1-based (x_1 .. x_n) in every public accessor that
/// takes a variable index; exponents() exposes the raw 0-based vector.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  /// The unit monomial 1 in n variables.
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}

  /// x_index^power in n variables.
  static Monomial variable(std::size_t n, std::size_t index, Exponent power = 1);
  /// Product of the listed variables (repetition allowed), e.g. {1, 1, 3} -> x1^2*x3.
  static Monomial from_indices(std::size_t n, std::initializer_list<std::size_t> indices);
  static Monomial from_indices(std::size_t n, std::span<const std::size_t> indices);

  std::size_t n() const { return exps_.size(); }
  Exponent exponent(std::size_t index) const;
  std::span<const Exponent> exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;
  /// Bit k-1 set iff x_k divides this monomial. Requires n <= 64.
  std::uint64_t support_mask() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

std::uint64_t degree(const Monomial& m);
bool divides(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial mul(const Monomial& a, const Monomial& b);
/// a : b = a / gcd(a, b).
Monomial colon(const Monomial& a, const Monomial& b);

/// Lexicographic order with x_n > x_{n-1} > ... > x_1.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

/// Orders monomials largest-first under lex_compare.
struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return lex_compare(a, b) == std::strong_ordering::greater;
  }
};

/// Variable indices of m in ascending order, repeated by multiplicity.
std::vector<std::size_t> sorted_indices(const Monomial& m);

/// Number of largest sorted positions on which m1 and m2 coincide before the
/// first disagreement. Requires deg m1 == deg m2 >= 1 and m1 lex-greater than m2.
std::size_t agreement_order(const Monomial& m1, const Monomial& m2);

/// Monomials x_{i_{s-t}} * m2 / x_{j_l} for 1 <= l <= s - t, deduplicated and
/// listed in descending lex order; i and j are the sorted indices of m1 and m2
/// and t is their agreement order.
std::vector<Monomial> projections(const Monomial& m1, const Monomial& m2);

/// `x3^2*x6` style, ascending variable index; the unit renders as `1`.
std::string to_string(const Monomial& m);
/// Inverse of to_string. Accepts optional whitespace around factors.
Monomial parse_monomial(std::string_view text, std::size_t n);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace linquot
