#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "linquot/monomial.hpp"

namespace linquot {

/// A monomial ideal, stored as its minimal generating set.
///
/// Generators are kept in descending lex order; two ideals compare equal iff
/// their generator sets are equal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  std::size_t n() const { return n_; }
  std::span<const Monomial> generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool contains_generator(const Monomial& m) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  friend MonomialIdeal minimalize(std::span<const Monomial>);
  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

/// Divisibility-minimal subset of `monomials`. Throws on empty input or mixed n.
MonomialIdeal minimalize(std::span<const Monomial> monomials);

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// s-fold product, minimalized after every multiplication. Requires s >= 1.
MonomialIdeal power(const MonomialIdeal& a, unsigned s);

/// Minimal generators of (prefix) : m.
MonomialIdeal colon_generators(std::span<const Monomial> prefix, const Monomial& m);

}  // namespace linquot
