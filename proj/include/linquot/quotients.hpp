#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "linquot/ideal.hpp"

namespace linquot {

/// A proposed linear-quotient ordering: a permutation of an ideal's minimal
/// generators.
class OrderedGenerators {
 public:
  /// Throws std::invalid_argument unless `order` lists every minimal
  /// generator of `ideal` exactly once.
  OrderedGenerators(MonomialIdeal ideal, std::vector<Monomial> order);
  /// Ordering given by a generator sequence; the ideal is their minimalization.
  static OrderedGenerators from_sequence(std::vector<Monomial> order);
  /// Descending lex order (x_n > ... > x_1), largest generator first.
  static OrderedGenerators lex(const MonomialIdeal& ideal);

  const MonomialIdeal& ideal() const { return ideal_; }
  std::span<const Monomial> order() const { return order_; }
  std::size_t size() const { return order_.size(); }
  std::size_t n() const { return ideal_.n(); }
  /// 0-based position of m in the ordering.
  std::optional<std::size_t> position(const Monomial& m) const;

 private:
  MonomialIdeal ideal_;
  std::vector<Monomial> order_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

enum class Criterion { colon, works };

const char* to_string(Criterion c);
Criterion parse_criterion(const std::string& text);

// Indices in certificates are 1-based positions in the ordering.

/// Minimal generators of (M_1, ..., M_{i-1}) : M_i.
struct ColonEvidence {
  std::size_t i = 0;
  std::vector<Monomial> generators;
};

/// M_h works for the pair (M_j, M_i).
struct WorksEvidence {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t h = 0;
};

/// First failing index i, the smallest j < i for which no h works, and a
/// non-variable minimal generator of the colon ideal at i dividing M_j : M_i.
struct FailureWitness {
  std::size_t i = 0;
  std::size_t j = 0;
  Monomial witness;
};

struct QuotientCertificate {
  Criterion criterion = Criterion::colon;
  bool verdict = false;
  std::vector<ColonEvidence> colon_evidence;  // criterion == colon
  std::vector<WorksEvidence> works_evidence;  // criterion == works
  std::optional<FailureWitness> failure;
};

/// Checks each colon ideal (M_1..M_{i-1}) : M_i for generation by variables.
QuotientCertificate verify_colon(const OrderedGenerators& og);

/// Checks that every pair j < i has some h < i (possibly h == j) with
/// M_h : M_i a variable dividing M_j : M_i.
QuotientCertificate verify_works(const OrderedGenerators& og);

QuotientCertificate verify(const OrderedGenerators& og, Criterion criterion);

/// Whether m3 works in og with respect to m1 and m2: m3 precedes m2, m3 : m2
/// is a variable, and that variable divides m1 : m2. Throws unless m1 and m2
/// both occur in og with m1 preceding m2.
bool works(const Monomial& m1, const Monomial& m2, const Monomial& m3,
           const OrderedGenerators& og);

struct ReplayResult {
  bool accepted = false;
  std::string reason;
};

/// Re-validates a certificate against a raw generator sequence from scratch,
/// without using the verifiers above.
ReplayResult replay_certificate(std::span<const Monomial> order, const QuotientCertificate& cert);

}  // namespace linquot
