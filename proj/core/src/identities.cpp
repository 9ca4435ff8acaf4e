#include "diagonalis/identities.hpp"

#include "diagonalis/family.hpp"
#include "diagonalis/sequences.hpp"

#include <stdexcept>

namespace diagonalis {

namespace {

UniSeries poly_series(std::initializer_list<long> c, int order) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UniSeries::from_poly(UniPoly(std::move(v)), order);
}

Rational q(long n, long d = 1) { return make_rational(n, d); }

// Both sides are computed at a working order >= 2 (arguments such as 27 z^2
// need it) and truncated to the requested order afterwards.
IdentityReport compare(std::string name, std::string description, const UniSeries& lhs, const UniSeries& rhs,
                       int order) {
  IdentityReport r;
  r.name = std::move(name);
  r.description = std::move(description);
  r.order = std::min({order, lhs.order(), rhs.order()});
  r.mismatch = verify_series_identity(lhs.truncate(r.order), rhs.truncate(r.order));
  return r;
}

IdentityReport fran(int order) {
  const int w = std::max(order, 2);
  UniSeries lhs = recurrence_series(recurrences::franel(), 2, w);
  UniSeries one_minus_2z = poly_series({1, -2}, w);
  UniSeries arg = q(27) * poly_series({0, 0, 1}, w) * series_power(one_minus_2z, -3);
  UniSeries rhs = series_power(one_minus_2z, -1) * series_compose(hypergeometric_2F1(q(1, 3), q(2, 3), 1, w), arg);
  return compare("fran", "sum a_n z^n = 1/(1-2z) 2F1(1/3,2/3;1; 27z^2/(1-2z)^3), a_n Franel", lhs, rhs, order);
}

IdentityReport sd_gf(int order) {
  const int w = std::max(order, 2);
  UniSeries lhs = recurrence_series(recurrences::szego3(), 12, w);
  UniSeries arg = poly_series({0, 54, -729}, w);  // 27z(2 - 27z)
  UniSeries rhs = series_compose(hypergeometric_2F1(q(1, 3), q(2, 3), 1, w), arg);
  return compare("sd-gf", "sum s_n z^n = 2F1(1/3,2/3;1; 27z(2-27z))", lhs, rhs, order);
}

IdentityReport duco(int order) {
  const int w = std::max(order, 2);
  UniSeries lhs = recurrence_series(recurrences::lewy_askey_u(), 12, w);
  UniSeries cubic = poly_series({1, -48, 0, 12288}, w);
  UniSeries one_minus_16z = poly_series({1, -16}, w);
  UniSeries sixth = one_minus_16z * one_minus_16z * one_minus_16z;
  sixth = sixth * sixth;
  UniSeries arg = q(-1728) * poly_series({0, 0, 3, -64}, w) * sixth * series_power(cubic, -3);
  UniSeries rhs =
      series_power(cubic, q(-1, 4)) * series_compose(hypergeometric_2F1(q(1, 12), q(5, 12), 1, w), arg);
  return compare("duco",
                 "sum u_n z^n = (1-48z+12288z^3)^(-1/4) 2F1(1/12,5/12;1; -1728z^2(3-64z)(1-16z)^6/(1-48z+12288z^3)^3)",
                 lhs, rhs, order);
}

IdentityReport ducox(int order) {
  const int w = std::max(order, 2);
  UniSeries lhs = recurrence_series(recurrences::lewy_askey_u(), 12, w);
  UniSeries lin = poly_series({1, -24}, w);
  UniSeries arg = q(-64) * poly_series({0, 0, 3, -64}, w) * series_power(lin, -2);
  UniSeries rhs = series_power(lin, q(-1, 2)) * series_compose(hypergeometric_2F1(q(1, 4), q(3, 4), 1, w), arg);
  return compare("ducox", "sum u_n z^n = (1-24z)^(-1/2) 2F1(1/4,3/4;1; -64z^2(3-64z)/(1-24z)^2)", lhs, rhs, order);
}

IdentityReport ramanujan_cubic(int order) {
  const int w = std::max(order, 3);
  UniSeries f = hypergeometric_2F1(q(1, 3), q(2, 3), 1, w);
  UniSeries ratio = poly_series({1, -1}, w) / poly_series({1, 2}, w);
  UniSeries lhs_arg = UniSeries::constant(1, w) - ratio * ratio * ratio;
  UniSeries lhs = series_compose(f, lhs_arg);
  UniSeries rhs = poly_series({1, 2}, w) * series_compose(f, poly_series({0, 0, 0, 1}, w));
  return compare("ramanujan-cubic", "2F1(1/3,2/3;1; 1-((1-x)/(1+2x))^3) = (1+2x) 2F1(1/3,2/3;1; x^3)", lhs, rhs,
                 order);
}

IdentityReport szego_binomial(int order) {
  UniSeries lhs = series_from_sequence(oracle_sequence("szego3-binomial", order + 1), order);
  UniSeries rhs = recurrence_series(recurrences::szego3(), 12, order);
  return compare("szego-binomial", "s_n = sum_k (-27)^(n-k) 2^(2k-n) (3k)!/k!^3 C(k,n-k) against the s_n recurrence",
                 lhs, rhs, order);
}

IdentityReport theta_modular(int order) {
  const int w = std::max(order, 1);
  LogSolution sol = recurrence_to_frobenius(recurrences::szego3(), w);
  UniSeries qz = q_coordinate(sol);
  UniSeries zq = series_reversion(qz);
  UniSeries lhs = series_compose(sol.plain, zq.scale_argument(q(1, 2)));
  UniSeries rhs = theta_hexagonal(w);
  IdentityReport r = compare("theta-modular", "y0(z(q/2)) = sum_{n,m} q^(n^2+nm+m^2), q(z) = exp(y1/y0)", lhs, rhs,
                             order);
  r.extras.emplace_back("q(z)", qz);
  r.extras.emplace_back("z(q)", zq);
  return r;
}

IdentityReport lewy_askey_binomial(int order, const BoxOptions& opts) {
  auto box = expand_reciprocal(named_instance("LewyAskey").denominator(), static_cast<unsigned>(order), opts);
  UniSeries lhs = series_from_sequence(scale_terms(extract_diagonal(box), 9), order);
  UniSeries rhs = series_from_sequence(oracle_sequence("lewy-askey", order + 1), order);
  return compare("lewy-askey-binomial", "9^n [(xyzw)^n] h_{2/3,0,0} = C(2n,n) u_n", lhs, rhs, order);
}

}  // namespace

UniSeries recurrence_series(const PRecurrence& rec, const Rational& u1, int order) {
  SequenceWindow init{0, {1, u1}};
  if (order >= 1) init = recurrence_extend(rec, init, order);
  return series_from_sequence(init, order);
}

IdentityReport verify_named_identity(const std::string& name, int order, const BoxOptions& box_options) {
  if (order < 0) throw std::invalid_argument("identity order must be >= 0");
  if (name == "fran") return fran(order);
  if (name == "sd-gf") return sd_gf(order);
  if (name == "duco") return duco(order);
  if (name == "ducox") return ducox(order);
  if (name == "ramanujan-cubic") return ramanujan_cubic(order);
  if (name == "szego-binomial") return szego_binomial(order);
  if (name == "theta-modular") return theta_modular(order);
  if (name == "lewy-askey-binomial") return lewy_askey_binomial(order, box_options);
  throw std::invalid_argument("unknown identity '" + name + "'");
}

std::vector<std::string> identity_names() {
  return {"fran", "sd-gf", "duco", "ducox", "ramanujan-cubic", "szego-binomial", "theta-modular", "lewy-askey-binomial"};
}

}  // namespace diagonalis
