#pragma once

#include "diagonalis/multipoly.hpp"
#include "diagonalis/rational.hpp"
#include "diagonalis/unipoly.hpp"

#include <nlohmann/json.hpp>

namespace diagonalis {

using json = nlohmann::json;

/// Rationals serialize as "num/den" strings, UniPolys as arrays of those
/// (index = degree).
json ring_to_json(const Rational& q);
json ring_to_json(const UniPoly& p);
void ring_from_json(const json& j, Rational& out);
void ring_from_json(const json& j, UniPoly& out);

/// {"dim": d, "terms": [{"exp": [..], "coeff": ..}]} with terms in graded-lex order.
template <CoefficientRing R>
json multipoly_to_json(const MultiPoly<R>& p) {
  json terms = json::array();
  for (const auto& [n, c] : p.terms()) terms.push_back({{"exp", n.e}, {"coeff", ring_to_json(c)}});
  return {{"dim", p.dim()}, {"terms", std::move(terms)}};
}

template <CoefficientRing R>
MultiPoly<R> multipoly_from_json(const json& j) {
  MultiPoly<R> p(j.at("dim").get<std::size_t>());
  for (const auto& t : j.at("terms")) {
    R c;
    ring_from_json(t.at("coeff"), c);
    p.add_term(ExponentVector(t.at("exp").get<std::vector<unsigned>>()), c);
  }
  return p;
}

}  // namespace diagonalis
