#include "linquot/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace linquot {

bool MonomialIdeal::contains_generator(const Monomial& m) const {
  return std::binary_search(gens_.begin(), gens_.end(), m, LexGreater{});
}

MonomialIdeal minimalize(std::span<const Monomial> monomials) {
  if (monomials.empty()) throw std::invalid_argument("minimalize: empty generator set");
  const std::size_t n = monomials.front().n();
  for (const auto& m : monomials) {
    if (m.n() != n) throw std::invalid_argument("minimalize: generators with mixed n");
  }

  std::vector<Monomial> pool(monomials.begin(), monomials.end());
  std::sort(pool.begin(), pool.end(), LexGreater{});
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

  // Only a strictly lower-degree monomial can properly divide another one.
  std::vector<std::size_t> by_degree(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) by_degree[i] = i;
  std::stable_sort(by_degree.begin(), by_degree.end(), [&](std::size_t a, std::size_t b) {
    return pool[a].degree() < pool[b].degree();
  });

  std::vector<bool> keep(pool.size(), false);
  std::vector<std::size_t> kept_lower;  // kept indices of degree < current
  std::size_t level_begin = 0;
  for (std::size_t k = 0; k < by_degree.size(); ++k) {
    const auto& m = pool[by_degree[k]];
    if (k > 0 && pool[by_degree[k - 1]].degree() != m.degree()) {
      for (std::size_t q = level_begin; q < k; ++q) {
        if (keep[by_degree[q]]) kept_lower.push_back(by_degree[q]);
      }
      level_begin = k;
    }
    keep[by_degree[k]] = std::none_of(kept_lower.begin(), kept_lower.end(),
                                      [&](std::size_t q) { return divides(pool[q], m); });
  }

  MonomialIdeal out;
  out.n_ = n;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (keep[i]) out.gens_.push_back(std::move(pool[i]));
  }
  return out;
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.n() != b.n()) throw std::invalid_argument("product: ideals with different n");
  if (a.size() == 0 || b.size() == 0) throw std::invalid_argument("product: empty ideal");
  std::vector<Monomial> products;
  products.reserve(a.size() * b.size());
  for (const auto& x : a.generators()) {
    for (const auto& y : b.generators()) products.push_back(mul(x, y));
  }
  return minimalize(products);
}

MonomialIdeal power(const MonomialIdeal& a, unsigned s) {
  if (s == 0) throw std::invalid_argument("power: exponent must be at least 1");
  MonomialIdeal out = a;
  for (unsigned k = 1; k < s; ++k) out = product(out, a);
  return out;
}

MonomialIdeal colon_generators(std::span<const Monomial> prefix, const Monomial& m) {
  if (prefix.empty()) throw std::invalid_argument("colon_generators: empty prefix");
  std::vector<Monomial> quotients;
  quotients.reserve(prefix.size());
  for (const auto& p : prefix) quotients.push_back(colon(p, m));
  return minimalize(quotients);
}

}  // namespace linquot
