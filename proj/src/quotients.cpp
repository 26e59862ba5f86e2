#include "linquot/quotients.hpp"

#include <algorithm>
#include <stdexcept>

namespace linquot {
namespace {

std::vector<Monomial> colons_against(std::span<const Monomial> order, std::size_t i) {
  std::vector<Monomial> out;
  out.reserve(i);
  for (std::size_t k = 0; k < i; ++k) out.push_back(colon(order[k], order[i]));
  return out;
}

// Failure record at 0-based index i, which is known to fail.
FailureWitness failure_at(std::span<const Monomial> order, std::size_t i) {
  const auto colons = colons_against(order, i);
  std::vector<Monomial> variables;
  for (const auto& c : colons) {
    if (c.degree() == 1) variables.push_back(c);
  }
  const auto covered = [&](const Monomial& c) {
    return std::any_of(variables.begin(), variables.end(),
                       [&](const Monomial& v) { return divides(v, c); });
  };
  for (std::size_t j = 0; j < i; ++j) {
    if (covered(colons[j])) continue;
    const auto minimal = minimalize(colons);
    for (const auto& g : minimal.generators()) {
      if (g.degree() >= 2 && divides(g, colons[j])) return {i + 1, j + 1, g};
    }
    throw std::logic_error("failure_at: uncovered quotient without a minimal divisor");
  }
  throw std::logic_error("failure_at: index does not fail");
}

}  // namespace

OrderedGenerators::OrderedGenerators(MonomialIdeal ideal, std::vector<Monomial> order)
    : ideal_(std::move(ideal)), order_(std::move(order)) {
  if (order_.size() != ideal_.size()) {
    throw std::invalid_argument("ordering has " + std::to_string(order_.size()) +
                                " entries but the ideal has " + std::to_string(ideal_.size()) +
                                " minimal generators");
  }
  index_.reserve(order_.size());
  for (std::size_t k = 0; k < order_.size(); ++k) {
    if (!ideal_.contains_generator(order_[k])) {
      throw std::invalid_argument("ordering entry " + to_string(order_[k]) +
                                  " is not a minimal generator");
    }
    if (!index_.emplace(order_[k], k).second) {
      throw std::invalid_argument("ordering repeats " + to_string(order_[k]));
    }
  }
}

OrderedGenerators OrderedGenerators::from_sequence(std::vector<Monomial> order) {
  auto ideal = minimalize(order);
  return OrderedGenerators(std::move(ideal), std::move(order));
}

OrderedGenerators OrderedGenerators::lex(const MonomialIdeal& ideal) {
  std::vector<Monomial> order(ideal.generators().begin(), ideal.generators().end());
  return OrderedGenerators(ideal, std::move(order));
}

std::optional<std::size_t> OrderedGenerators::position(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const char* to_string(Criterion c) { return c == Criterion::colon ? "colon" : "works"; }

Criterion parse_criterion(const std::string& text) {
  if (text == "colon") return Criterion::colon;
  if (text == "works") return Criterion::works;
  throw std::invalid_argument("unknown criterion '" + text + "' (expected colon or works)");
}

QuotientCertificate verify_colon(const OrderedGenerators& og) {
  QuotientCertificate cert;
  cert.criterion = Criterion::colon;
  cert.verdict = true;
  const auto order = og.order();
  for (std::size_t i = 1; i < order.size(); ++i) {
    auto q = minimalize(colons_against(order, i));
    const bool linear = std::all_of(q.generators().begin(), q.generators().end(),
                                    [](const Monomial& g) { return g.degree() == 1; });
    if (!linear) {
      cert.verdict = false;
      cert.failure = failure_at(order, i);
      break;
    }
    // Ascending variable index reads better than lex order here.
    std::vector<Monomial> gens(q.generators().rbegin(), q.generators().rend());
    cert.colon_evidence.push_back({i + 1, std::move(gens)});
  }
  return cert;
}

QuotientCertificate verify_works(const OrderedGenerators& og) {
  QuotientCertificate cert;
  cert.criterion = Criterion::works;
  cert.verdict = true;
  const auto order = og.order();
  for (std::size_t i = 1; i < order.size(); ++i) {
    const auto colons = colons_against(order, i);
    for (std::size_t j = 0; j < i; ++j) {
      std::optional<std::size_t> witness;
      if (colons[j].degree() == 1) {
        witness = j;
      } else {
        for (std::size_t h = 0; h < i; ++h) {
          if (colons[h].degree() == 1 && divides(colons[h], colons[j])) {
            witness = h;
            break;
          }
        }
      }
      if (!witness) {
        cert.verdict = false;
        cert.failure = failure_at(order, i);
        return cert;
      }
      cert.works_evidence.push_back({i + 1, j + 1, *witness + 1});
    }
  }
  return cert;
}

QuotientCertificate verify(const OrderedGenerators& og, Criterion criterion) {
  return criterion == Criterion::colon ? verify_colon(og) : verify_works(og);
}

bool works(const Monomial& m1, const Monomial& m2, const Monomial& m3,
           const OrderedGenerators& og) {
  const auto p1 = og.position(m1);
  const auto p2 = og.position(m2);
  if (!p1 || !p2) throw std::invalid_argument("works: m1 and m2 must belong to the ordering");
  if (*p1 >= *p2) throw std::invalid_argument("works: m1 must precede m2");
  const auto p3 = og.position(m3);
  if (!p3 || *p3 >= *p2) return false;
  const auto q = colon(m3, m2);
  return q.degree() == 1 && divides(q, colon(m1, m2));
}

// ---------------------------------------------------------------------------
// Replay. Works directly on exponent vectors.

namespace {

using Exps = std::vector<Monomial::Exponent>;

Exps quotient(const Monomial& a, const Monomial& b) {
  Exps out(a.n());
  for (std::size_t k = 0; k < out.size(); ++k) {
    const auto x = a.exponents()[k];
    const auto y = b.exponents()[k];
    out[k] = x > y ? x - y : 0;
  }
  return out;
}

std::uint64_t total(const Exps& e) {
  std::uint64_t s = 0;
  for (auto x : e) s += x;
  return s;
}

bool below(const Exps& a, const Exps& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

Exps as_exps(const Monomial& m) { return Exps(m.exponents().begin(), m.exponents().end()); }

ReplayResult reject(std::string why) { return {false, std::move(why)}; }

// Whether every quotient at 0-based i is divisible by a degree-1 quotient.
bool index_is_linear(std::span<const Monomial> order, std::size_t i) {
  std::vector<Exps> qs;
  for (std::size_t k = 0; k < i; ++k) qs.push_back(quotient(order[k], order[i]));
  for (const auto& q : qs) {
    bool hit = false;
    for (const auto& v : qs) {
      if (total(v) == 1 && below(v, q)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

ReplayResult replay_failure(std::span<const Monomial> order, const FailureWitness& f) {
  if (f.i < 2 || f.i > order.size() || f.j < 1 || f.j >= f.i) {
    return reject("failure indices out of range");
  }
  const std::size_t i = f.i - 1;
  if (f.witness.n() != order[i].n()) return reject("failure witness has wrong n");
  std::vector<Exps> qs;
  for (std::size_t k = 0; k < i; ++k) qs.push_back(quotient(order[k], order[i]));
  const Exps w = as_exps(f.witness);
  if (total(w) < 2) return reject("failure witness is not a non-variable monomial");
  if (!below(w, qs[f.j - 1])) return reject("failure witness does not divide M_j : M_i");
  if (std::find(qs.begin(), qs.end(), w) == qs.end()) {
    return reject("failure witness is not a quotient at index i");
  }
  for (const auto& q : qs) {
    if (q != w && below(q, w)) return reject("failure witness is not a minimal generator");
  }
  for (std::size_t k = 1; k < i; ++k) {
    if (!index_is_linear(order, k)) return reject("an earlier index already fails");
  }
  const auto covered = [&](const Exps& q) {
    return std::any_of(qs.begin(), qs.end(),
                       [&](const Exps& v) { return total(v) == 1 && below(v, q); });
  };
  if (covered(qs[f.j - 1])) return reject("M_j : M_i is covered by a variable quotient");
  for (std::size_t j = 0; j + 1 < f.j; ++j) {
    if (!covered(qs[j])) return reject("a smaller j already lacks a working generator");
  }
  return {true, ""};
}

}  // namespace

ReplayResult replay_certificate(std::span<const Monomial> order, const QuotientCertificate& cert) {
  if (!cert.verdict) {
    if (!cert.failure) return reject("negative verdict without a failure witness");
    return replay_failure(order, *cert.failure);
  }
  if (cert.failure) return reject("positive verdict carries a failure witness");
  const std::size_t r = order.size();

  if (cert.criterion == Criterion::colon) {
    if (cert.colon_evidence.size() != (r == 0 ? 0 : r - 1)) {
      return reject("colon evidence does not cover every index");
    }
    for (std::size_t e = 0; e < cert.colon_evidence.size(); ++e) {
      const auto& ev = cert.colon_evidence[e];
      if (ev.i != e + 2) return reject("colon evidence out of sequence");
      const std::size_t i = ev.i - 1;
      std::vector<Exps> qs;
      for (std::size_t k = 0; k < i; ++k) qs.push_back(quotient(order[k], order[i]));
      std::vector<Exps> recorded;
      for (const auto& g : ev.generators) {
        if (g.n() != order[i].n()) return reject("recorded generator has wrong n");
        Exps x = as_exps(g);
        if (total(x) != 1) return reject("recorded colon generator is not a variable");
        if (std::find(qs.begin(), qs.end(), x) == qs.end()) {
          return reject("recorded variable is not a quotient at index " + std::to_string(ev.i));
        }
        if (std::find(recorded.begin(), recorded.end(), x) != recorded.end()) {
          return reject("recorded variable repeated");
        }
        recorded.push_back(std::move(x));
      }
      for (const auto& q : qs) {
        const bool hit = std::any_of(recorded.begin(), recorded.end(),
                                     [&](const Exps& v) { return below(v, q); });
        if (!hit) return reject("quotient at index " + std::to_string(ev.i) + " not covered");
      }
    }
    return {true, ""};
  }

  if (cert.works_evidence.size() != r * (r - (r == 0 ? 0 : 1)) / 2) {
    return reject("works evidence does not cover every pair");
  }
  std::size_t e = 0;
  for (std::size_t i = 1; i < r; ++i) {
    for (std::size_t j = 0; j < i; ++j, ++e) {
      const auto& ev = cert.works_evidence[e];
      if (ev.i != i + 1 || ev.j != j + 1) return reject("works evidence out of sequence");
      if (ev.h < 1 || ev.h > i) return reject("witness h does not precede i");
      const Exps qh = quotient(order[ev.h - 1], order[i]);
      const Exps qj = quotient(order[j], order[i]);
      if (total(qh) != 1) return reject("M_h : M_i is not a variable");
      if (!below(qh, qj)) return reject("M_h : M_i does not divide M_j : M_i");
    }
  }
  return {true, ""};
}

}  // namespace linquot
