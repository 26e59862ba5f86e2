#pragma once

// Independent reference implementations on plain integer vectors, plus small
// random generators for property tests. Nothing here calls into the library's
// algebra so that tests compare two separate computations.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "linquot/graph.hpp"
#include "linquot/monomial.hpp"

namespace oracle {

using Exps = std::vector<int>;

inline Exps to_exps(const linquot::Monomial& m) {
  return Exps(m.exponents().begin(), m.exponents().end());
}

inline linquot::Monomial to_monomial(const Exps& e) {
  return linquot::Monomial(std::vector<linquot::Monomial::Exponent>(e.begin(), e.end()));
}

inline std::vector<Exps> to_exps(std::span<const linquot::Monomial> ms) {
  std::vector<Exps> out;
  for (const auto& m : ms) out.push_back(to_exps(m));
  return out;
}

inline int deg(const Exps& a) { return std::accumulate(a.begin(), a.end(), 0); }

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

inline Exps quotient(const Exps& a, const Exps& b) {
  Exps q(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) q[k] = std::max(a[k] - b[k], 0);
  return q;
}

inline Exps times(const Exps& a, const Exps& b) {
  Exps q(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) q[k] = a[k] + b[k];
  return q;
}

// Lex with the last variable most significant: compare from the top index.
inline bool lex_greater(const Exps& a, const Exps& b) {
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] > b[k];
  }
  return false;
}

// Elements not divisible by any other element; duplicates collapse.
inline std::set<Exps> minimal(const std::vector<Exps>& ms) {
  std::set<Exps> unique(ms.begin(), ms.end());
  std::set<Exps> out;
  for (const auto& m : unique) {
    bool keep = true;
    for (const auto& o : unique) {
      if (o != m && divides(o, m)) {
        keep = false;
        break;
      }
    }
    if (keep) out.insert(m);
  }
  return out;
}

inline std::set<Exps> as_set(std::span<const linquot::Monomial> ms) {
  const auto e = to_exps(ms);
  return std::set<Exps>(e.begin(), e.end());
}

// Every s-fold product, then minimal elements.
inline std::set<Exps> power(const std::vector<Exps>& gens, unsigned s) {
  std::vector<Exps> products;
  std::vector<std::size_t> pick(s, 0);
  const std::size_t n = gens.front().size();
  while (true) {
    Exps p(n, 0);
    for (auto idx : pick) p = times(p, gens[idx]);
    products.push_back(p);
    std::size_t pos = s;
    while (pos > 0 && pick[pos - 1] == gens.size() - 1) --pos;
    if (pos == 0) break;
    const std::size_t v = pick[pos - 1] + 1;
    for (std::size_t q = pos - 1; q < s; ++q) pick[q] = v;
  }
  return minimal(products);
}

// The colon ideal (M_1..M_{i-1}) : M_i is generated by variables exactly when
// its minimal generators all have degree 1.
inline bool linear_quotients(const std::vector<Exps>& order) {
  for (std::size_t i = 1; i < order.size(); ++i) {
    std::vector<Exps> qs;
    for (std::size_t j = 0; j < i; ++j) qs.push_back(quotient(order[j], order[i]));
    for (const auto& q : minimal(qs)) {
      if (deg(q) != 1) return false;
    }
  }
  return true;
}

inline bool some_ordering_exists(std::vector<Exps> gens) {
  std::sort(gens.begin(), gens.end());
  do {
    if (linear_quotients(gens)) return true;
  } while (std::next_permutation(gens.begin(), gens.end()));
  return false;
}

// Graph edges as (u, v) pairs with u < v.
using EdgeSet = std::set<std::pair<std::size_t, std::size_t>>;

inline EdgeSet edges_of(const linquot::Graph& g) {
  EdgeSet out;
  for (const auto& e : g.edges()) out.emplace(e.u, e.v);
  return out;
}

inline bool cyclically_adjacent(std::size_t u, std::size_t v, std::size_t n) {
  const std::size_t d = u > v ? u - v : v - u;
  return d == 1 || d == n - 1;
}

inline EdgeSet anticycle_edges(std::size_t n) {
  EdgeSet out;
  for (std::size_t u = 1; u <= n; ++u) {
    for (std::size_t v = u + 1; v <= n; ++v) {
      if (!cyclically_adjacent(u, v, n)) out.emplace(u, v);
    }
  }
  return out;
}

using Rng = std::mt19937_64;

// Random exponent vector with entries in [0, max_exp] and degree >= 1.
inline Exps random_exps(Rng& rng, std::size_t n, int max_exp) {
  std::uniform_int_distribution<int> d(0, max_exp);
  Exps e(n);
  do {
    for (auto& x : e) x = d(rng);
  } while (deg(e) == 0);
  return e;
}

// Random exponent vector of exactly the given degree.
inline Exps random_exps_of_degree(Rng& rng, std::size_t n, int degree) {
  std::uniform_int_distribution<std::size_t> d(0, n - 1);
  Exps e(n, 0);
  for (int k = 0; k < degree; ++k) ++e[d(rng)];
  return e;
}

// Minimal generating set of 1..max_gens random monomials.
inline std::vector<Exps> random_ideal(Rng& rng, std::size_t n, std::size_t max_gens,
                                      int max_exp) {
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  std::vector<Exps> raw;
  const std::size_t r = count(rng);
  for (std::size_t k = 0; k < r; ++k) raw.push_back(random_exps(rng, n, max_exp));
  const auto m = minimal(raw);
  return std::vector<Exps>(m.begin(), m.end());
}

inline std::vector<linquot::Monomial> to_monomials(const std::vector<Exps>& es) {
  std::vector<linquot::Monomial> out;
  for (const auto& e : es) out.push_back(to_monomial(e));
  return out;
}

}  // namespace oracle
