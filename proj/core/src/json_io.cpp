#include "diagonalis/json_io.hpp"

#include <stdexcept>

namespace diagonalis {

json ring_to_json(const Rational& q) { return to_string(q); }

json ring_to_json(const UniPoly& p) {
  json a = json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_string(c));
  return a;
}

void ring_from_json(const json& j, Rational& out) {
  if (j.is_string())
    out = parse_rational(j.get<std::string>());
  else if (j.is_number_integer())
    out = Rational(Integer(std::to_string(j.get<long long>())));
  else
    throw std::invalid_argument("expected a rational as \"num/den\" string, got " + j.dump());
}

void ring_from_json(const json& j, UniPoly& out) {
  if (!j.is_array()) throw std::invalid_argument("expected a coefficient array, got " + j.dump());
  std::vector<Rational> c;
  for (const auto& e : j) {
    Rational q;
    ring_from_json(e, q);
    c.push_back(q);
  }
  out = UniPoly(std::move(c));
}

}  // namespace diagonalis
