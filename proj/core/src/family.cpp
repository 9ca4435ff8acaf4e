#include "diagonalis/family.hpp"

#include <stdexcept>

namespace diagonalis {

namespace {

template <class R>
FamilySpec<R> make_family_impl(std::size_t d, std::vector<R> coeffs, std::string name) {
  if (d == 0) throw std::invalid_argument("family dimension must be >= 1");
  if (coeffs.size() != d + 1)
    throw std::invalid_argument("family of dimension " + std::to_string(d) + " needs " + std::to_string(d + 1) +
                                " coefficients, got " + std::to_string(coeffs.size()));
  if (RingTraits<R>::is_zero(coeffs[0])) throw std::invalid_argument("family needs c_0 != 0");
  return FamilySpec<R>{d, std::move(coeffs), std::move(name)};
}

const Rational& need(const std::optional<Rational>& v, const char* what, const std::string& name) {
  if (!v) throw std::invalid_argument("family '" + name + "' needs parameter " + what);
  return *v;
}

Rational q(long num, long den = 1) { return make_rational(num, den); }

}  // namespace

FamilySpec<Rational> make_family(std::size_t d, std::vector<Rational> coeffs, std::string name) {
  return make_family_impl(d, std::move(coeffs), std::move(name));
}

FamilySpec<UniPoly> make_family(std::size_t d, std::vector<UniPoly> coeffs, std::string name) {
  return make_family_impl(d, std::move(coeffs), std::move(name));
}

FamilySpec<Rational> named_instance(const std::string& name, const FamilyParams& p) {
  if (name == "AG3") return make_family(3, {1, -1, 0, 4}, name);
  if (name == "Szego3") return make_family(3, {1, -1, q(3, 4), 0}, name);
  if (name == "LewyAskey") return make_family(4, {1, -1, q(2, 3), 0, 0}, name);
  if (name == "KZ-D" || name == "D") return make_family(4, {1, -1, 0, 2, 4}, "KZ-D");
  if (name == "Kauers") return make_family(4, {1, -1, 0, q(64, 27), 0}, name);
  if (name == "Koornwinder") return make_family(4, {1, -1, 0, 4, -16}, name);
  if (name == "Szego4") return make_family(4, {1, -1, q(8, 9), q(-16, 27), 0}, name);
  if (name == "GRZ") {
    const std::size_t d = p.d.value_or(4);
    if (d < 2) throw std::invalid_argument("GRZ needs d >= 2");
    std::vector<Rational> c(d + 1, Rational(0));
    c[0] = 1;
    c[1] = -1;
    c[d] = p.c ? *p.c : Rational(factorial(static_cast<long>(d)));
    return make_family(d, std::move(c), name);
  }
  if (name == "h2") return make_family(2, {1, -1, need(p.a, "a", name)}, name);
  if (name == "hab") return make_family(3, {1, -1, need(p.a, "a", name), need(p.b, "b", name)}, name);
  if (name == "habc")
    return make_family(4, {1, -1, need(p.a, "a", name), need(p.b, "b", name), need(p.c, "c", name)}, name);
  if (name == "h0b") {
    const Rational& b = need(p.b, "b", name);
    return make_family(4, {1, -1, 0, b, -b * b}, name);
  }
  throw std::invalid_argument("unknown family '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"AG3", "Szego3", "LewyAskey", "KZ-D", "Kauers", "GRZ", "Koornwinder", "Szego4",
          "h2",  "hab",    "habc",      "h0b",  "StraubLambda"};
}

FamilySpec<UniPoly> straub_lambda() {
  const UniPoly l = UniPoly::x();
  const UniPoly one(Rational(1));
  const UniPoly two(Rational(2));
  UniPoly c1 = -(l + one);
  UniPoly c2 = l * (l + two);
  UniPoly c3 = -((l - one) * (l + two) * (l + two));
  return make_family(3, std::vector<UniPoly>{one, c1, c2, c3}, "StraubLambda");
}

std::pair<FamilySpec<Rational>, Rational> canonicalize(const FamilySpec<Rational>& spec) {
  const Rational& c0 = spec.coeffs.at(0);
  if (c0 == 0) throw std::invalid_argument("canonicalize: c_0 = 0");
  const Rational c1 = spec.coeffs.at(1) / c0;
  if (c1 >= 0)
    throw std::domain_error("not normalizable while positive: c_1/c_0 = " + to_string(c1) +
                            " >= 0 forces a non-positive linear coefficient");
  const Rational scale = -1 / c1;
  FamilySpec<Rational> out = spec;
  Rational f = 1;
  for (auto& ck : out.coeffs) {
    ck = ck / c0 * f;
    f *= scale;
  }
  return {std::move(out), scale};
}

FamilySpec<Rational> specialize(const FamilySpec<UniPoly>& spec, const Rational& lambda) {
  std::vector<Rational> c;
  for (const auto& p : spec.coeffs) c.push_back(p(lambda));
  return make_family(spec.dim, std::move(c), spec.name);
}

}  // namespace diagonalis
