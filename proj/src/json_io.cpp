#include "linquot/json_io.hpp"

#include <stdexcept>

namespace linquot {
namespace {

std::vector<Monomial> monomials_from(const json& arr, std::size_t n) {
  if (!arr.is_array()) throw std::invalid_argument("expected an array of exponent vectors");
  std::vector<Monomial> out;
  out.reserve(arr.size());
  for (const auto& item : arr) {
    auto m = item.get<Monomial>();
    if (m.n() != n) {
      throw std::invalid_argument("exponent vector of length " + std::to_string(m.n()) +
                                  ", expected " + std::to_string(n));
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

void to_json(json& j, const Monomial& m) {
  j = json::array();
  for (auto e : m.exponents()) j.push_back(e);
}

void from_json(const json& j, Monomial& m) {
  if (!j.is_array()) throw std::invalid_argument("monomial must be an array of exponents");
  std::vector<Monomial::Exponent> exps;
  exps.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<long long>() >= 0)) {
      throw std::invalid_argument("exponents must be nonnegative integers");
    }
    exps.push_back(e.get<Monomial::Exponent>());
  }
  m = Monomial(std::move(exps));
}

void to_json(json& j, const MonomialIdeal& ideal) {
  j = json{{"n", ideal.n()}, {"generators", json::array()}};
  for (const auto& g : ideal.generators()) j["generators"].push_back(g);
}

void from_json(const json& j, MonomialIdeal& ideal) {
  const auto n = j.at("n").get<std::size_t>();
  ideal = minimalize(monomials_from(j.at("generators"), n));
}

void to_json(json& j, const Edge& e) { j = json::array({e.u, e.v}); }

void to_json(json& j, const Graph& g) {
  j = json{{"n", g.n()}, {"edges", json::array()}};
  for (const auto& e : g.edges()) j["edges"].push_back(e);
}

void from_json(const json& j, Graph& g) {
  const auto n = j.at("n").get<std::size_t>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be [u, v]");
    edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  }
  g = Graph(n, std::move(edges));
}

json ordering_to_json(const OrderedGenerators& og) {
  json j{{"n", og.n()}, {"generators", json::array()}};
  for (const auto& g : og.order()) j["generators"].push_back(g);
  return j;
}

OrderedGenerators ordering_from_json(const json& j) {
  const auto n = j.at("n").get<std::size_t>();
  return OrderedGenerators::from_sequence(monomials_from(j.at("generators"), n));
}

void to_json(json& j, const QuotientCertificate& cert) {
  j = json{{"criterion", to_string(cert.criterion)},
           {"verdict", cert.verdict},
           {"evidence", json::array()},
           {"failure", nullptr}};
  if (cert.criterion == Criterion::colon) {
    for (const auto& ev : cert.colon_evidence) {
      j["evidence"].push_back({{"i", ev.i}, {"generators", ev.generators}});
    }
  } else {
    for (const auto& ev : cert.works_evidence) {
      j["evidence"].push_back({{"i", ev.i}, {"j", ev.j}, {"h", ev.h}});
    }
  }
  if (cert.failure) {
    j["failure"] = {{"i", cert.failure->i},
                    {"j", cert.failure->j},
                    {"witness", cert.failure->witness},
                    {"witness_text", to_string(cert.failure->witness)}};
  }
}

QuotientCertificate certificate_from_json(const json& j, std::size_t n) {
  QuotientCertificate cert;
  cert.criterion = parse_criterion(j.at("criterion").get<std::string>());
  cert.verdict = j.at("verdict").get<bool>();
  for (const auto& ev : j.at("evidence")) {
    if (cert.criterion == Criterion::colon) {
      cert.colon_evidence.push_back(
          {ev.at("i").get<std::size_t>(), monomials_from(ev.at("generators"), n)});
    } else {
      cert.works_evidence.push_back({ev.at("i").get<std::size_t>(), ev.at("j").get<std::size_t>(),
                                     ev.at("h").get<std::size_t>()});
    }
  }
  const auto& f = j.at("failure");
  if (!f.is_null()) {
    auto w = f.at("witness").get<Monomial>();
    if (w.n() != n) throw std::invalid_argument("failure witness has wrong length");
    cert.failure = FailureWitness{f.at("i").get<std::size_t>(), f.at("j").get<std::size_t>(),
                                  std::move(w)};
  }
  return cert;
}

json plan_to_json(const CompositePlan& plan) {
  json j{{"n", plan.n}, {"s", plan.s}, {"g0", plan.g0}, {"f0", plan.f0},
         {"sub_orderings", json::array()}};
  for (std::size_t k = 0; k < plan.sub_orderings.size(); ++k) {
    json block = ordering_to_json(plan.sub_orderings[k]);
    block["j"] = plan.s - k;
    j["sub_orderings"].push_back(std::move(block));
  }
  return j;
}

CompositePlan plan_from_json(const json& j) {
  CompositePlan plan;
  plan.n = j.at("n").get<std::size_t>();
  plan.s = j.at("s").get<unsigned>();
  plan.g0 = j.at("g0").get<Graph>();
  plan.f0 = j.at("f0").get<Graph>();
  std::size_t k = 0;
  for (const auto& block : j.at("sub_orderings")) {
    if (block.contains("j") && block.at("j").get<std::size_t>() + k != plan.s) {
      throw std::invalid_argument("sub_orderings must be listed by descending j");
    }
    plan.sub_orderings.push_back(ordering_from_json(block));
    ++k;
  }
  return plan;
}

json search_result_to_json(const SearchResult& result) {
  json j{{"status", to_string(result.status)},
         {"nodes", result.nodes},
         {"seconds", result.seconds},
         {"kernel", result.kernel},
         {"ordering", nullptr}};
  if (result.ordering) j["ordering"] = ordering_to_json(*result.ordering);
  return j;
}

json monomial_strings(std::span<const Monomial> monomials) {
  json out = json::array();
  for (const auto& m : monomials) out.push_back(to_string(m));
  return out;
}

}  // namespace linquot
