#pragma once

// JSON forms of the library's values (nlohmann::json, found by ADL).
//
//   Monomial            [e_1, ..., e_n]
//   MonomialIdeal       {"n": n, "generators": [monomial, ...]}   descending lex
//   Graph               {"n": n, "edges": [[u, v], ...]}           u < v, sorted
//   OrderedGenerators   {"n": n, "generators": [monomial, ...]}   in ordering order
//   QuotientCertificate {"criterion", "verdict", "evidence", "failure"}
//   CompositePlan       {"n", "s", "g0", "f0", "sub_orderings"}

#include <json.hpp>

#include "linquot/compose.hpp"
#include "linquot/graph.hpp"
#include "linquot/quotients.hpp"
#include "linquot/search.hpp"

namespace linquot {

using nlohmann::json;

void to_json(json& j, const Monomial& m);
void from_json(const json& j, Monomial& m);

void to_json(json& j, const MonomialIdeal& ideal);
/// Minimalizes whatever generators it is given.
void from_json(const json& j, MonomialIdeal& ideal);

void to_json(json& j, const Graph& g);
void from_json(const json& j, Graph& g);

void to_json(json& j, const Edge& e);

json ordering_to_json(const OrderedGenerators& og);
OrderedGenerators ordering_from_json(const json& j);

void to_json(json& j, const QuotientCertificate& cert);
QuotientCertificate certificate_from_json(const json& j, std::size_t n);

/// {"n", "s", "g0": graph, "f0": graph, "sub_orderings": [{"j", "generators"}, ...]}
json plan_to_json(const CompositePlan& plan);
CompositePlan plan_from_json(const json& j);

json search_result_to_json(const SearchResult& result);

/// Generators rendered as `x1*x3` strings, in the given order.
json monomial_strings(std::span<const Monomial> monomials);

}  // namespace linquot
