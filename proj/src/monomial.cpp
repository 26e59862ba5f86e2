#include "linquot/monomial.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace linquot {
namespace {

void require_same_n(const Monomial& a, const Monomial& b, const char* op) {
  if (a.n() != b.n()) {
    throw std::invalid_argument(std::string(op) + ": monomials live in rings with " +
                                std::to_string(a.n()) + " and " + std::to_string(b.n()) +
                                " variables");
  }
}

void require_index(std::size_t n, std::size_t index) {
  if (index < 1 || index > n) {
    throw std::out_of_range("variable index " + std::to_string(index) + " outside 1.." +
                            std::to_string(n));
  }
}

Monomial::Exponent checked_add(Monomial::Exponent a, Monomial::Exponent b) {
  if (a > std::numeric_limits<Monomial::Exponent>::max() - b) {
    throw std::overflow_error("monomial exponent overflow");
  }
  return a + b;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::size_t parse_number(std::string_view digits, std::string_view whole) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
    throw std::invalid_argument("malformed monomial '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Monomial Monomial::variable(std::size_t n, std::size_t index, Exponent power) {
  require_index(n, index);
  Monomial m(n);
  m.exps_[index - 1] = power;
  return m;
}

Monomial Monomial::from_indices(std::size_t n, std::initializer_list<std::size_t> indices) {
  return from_indices(n, std::span<const std::size_t>(indices.begin(), indices.size()));
}

Monomial Monomial::from_indices(std::size_t n, std::span<const std::size_t> indices) {
  Monomial m(n);
  for (std::size_t index : indices) {
    require_index(n, index);
    m.exps_[index - 1] = checked_add(m.exps_[index - 1], 1);
  }
  return m;
}

Monomial::Exponent Monomial::exponent(std::size_t index) const {
  require_index(n(), index);
  return exps_[index - 1];
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::uint64_t Monomial::support_mask() const {
  if (n() > 64) throw std::length_error("support_mask requires at most 64 variables");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::uint64_t degree(const Monomial& m) { return m.degree(); }

bool divides(const Monomial& a, const Monomial& b) {
  require_same_n(a, b, "divides");
  auto ea = a.exponents();
  auto eb = b.exponents();
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i] > eb[i]) return false;
  }
  return true;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_n(a, b, "gcd");
  std::vector<Monomial::Exponent> out(a.n());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::min(a.exponents()[i], b.exponents()[i]);
  }
  return Monomial(std::move(out));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_n(a, b, "lcm");
  std::vector<Monomial::Exponent> out(a.n());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::max(a.exponents()[i], b.exponents()[i]);
  }
  return Monomial(std::move(out));
}

Monomial mul(const Monomial& a, const Monomial& b) {
  require_same_n(a, b, "mul");
  std::vector<Monomial::Exponent> out(a.n());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = checked_add(a.exponents()[i], b.exponents()[i]);
  }
  return Monomial(std::move(out));
}

Monomial colon(const Monomial& a, const Monomial& b) {
  require_same_n(a, b, "colon");
  std::vector<Monomial::Exponent> out(a.n());
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto ea = a.exponents()[i];
    auto eb = b.exponents()[i];
    out[i] = ea > eb ? ea - eb : 0;
  }
  return Monomial(std::move(out));
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  require_same_n(a, b, "lex_compare");
  auto ea = a.exponents();
  auto eb = b.exponents();
  for (std::size_t i = ea.size(); i-- > 0;) {
    if (ea[i] != eb[i]) return ea[i] <=> eb[i];
  }
  return std::strong_ordering::equal;
}

std::vector<std::size_t> sorted_indices(const Monomial& m) {
  if (m.is_one()) throw std::invalid_argument("sorted_indices: degree-zero monomial");
  std::vector<std::size_t> out;
  out.reserve(m.degree());
  for (std::size_t i = 0; i < m.n(); ++i) {
    out.insert(out.end(), m.exponents()[i], i + 1);
  }
  return out;
}

std::size_t agreement_order(const Monomial& m1, const Monomial& m2) {
  require_same_n(m1, m2, "agreement_order");
  if (m1.degree() != m2.degree()) {
    throw std::invalid_argument("agreement_order: monomials of different degree");
  }
  if (lex_compare(m1, m2) != std::strong_ordering::greater) {
    throw std::invalid_argument("agreement_order: first monomial must be lex-greater");
  }
  auto i = sorted_indices(m1);
  auto j = sorted_indices(m2);
  std::size_t t = 0;
  for (std::size_t pos = i.size(); pos-- > 0 && i[pos] == j[pos];) ++t;
  return t;
}

std::vector<Monomial> projections(const Monomial& m1, const Monomial& m2) {
  const std::size_t t = agreement_order(m1, m2);
  const auto i = sorted_indices(m1);
  const auto j = sorted_indices(m2);
  const std::size_t s = i.size();
  const std::size_t incoming = i[s - t - 1];

  std::vector<Monomial> out;
  for (std::size_t l = 0; l < s - t; ++l) {
    std::vector<Monomial::Exponent> e(m2.exponents().begin(), m2.exponents().end());
    e[j[l] - 1] -= 1;
    e[incoming - 1] += 1;
    out.emplace_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), LexGreater{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.n(); ++i) {
    const auto e = m.exponents()[i];
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out.empty() ? "1" : out;
}

Monomial parse_monomial(std::string_view text, std::size_t n) {
  const std::string_view whole = text;
  text = trim(text);
  Monomial::Exponent zero = 0;
  std::vector<Monomial::Exponent> exps(n, zero);
  if (text == "1") return Monomial(std::move(exps));

  while (true) {
    auto star = text.find('*');
    auto factor = trim(text.substr(0, star));
    if (factor.size() < 2 || factor.front() != 'x') {
      throw std::invalid_argument("malformed monomial '" + std::string(whole) + "'");
    }
    factor.remove_prefix(1);
    auto caret = factor.find('^');
    std::size_t index = parse_number(factor.substr(0, caret), whole);
    std::size_t power = caret == std::string_view::npos
                            ? 1
                            : parse_number(factor.substr(caret + 1), whole);
    require_index(n, index);
    if (power > std::numeric_limits<Monomial::Exponent>::max()) {
      throw std::overflow_error("monomial exponent overflow");
    }
    exps[index - 1] = checked_add(exps[index - 1], static_cast<Monomial::Exponent>(power));
    if (star == std::string_view::npos) break;
    text = text.substr(star + 1);
  }
  return Monomial(std::move(exps));
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace linquot
