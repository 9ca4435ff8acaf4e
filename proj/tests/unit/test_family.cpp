#include "doctest.h"

#include "diagonalis/family.hpp"
#include "diagonalis/seriesbox.hpp"

using namespace diagonalis;

namespace {
Rational r(long n, long d = 1) { return make_rational(n, d); }
}  // namespace

TEST_CASE("catalog coefficients") {
  CHECK(named_instance("AG3").coeffs == std::vector<Rational>{1, -1, 0, 4});
  CHECK(named_instance("Szego3").coeffs == std::vector<Rational>{1, -1, r(3, 4), 0});
  CHECK(named_instance("LewyAskey").coeffs == std::vector<Rational>{1, -1, r(2, 3), 0, 0});
  CHECK(named_instance("KZ-D").coeffs == std::vector<Rational>{1, -1, 0, 2, 4});
  CHECK(named_instance("D") == named_instance("KZ-D"));
  CHECK(named_instance("Kauers").coeffs == std::vector<Rational>{1, -1, 0, r(64, 27), 0});
  CHECK(named_instance("Koornwinder").coeffs == std::vector<Rational>{1, -1, 0, 4, -16});
  CHECK(named_instance("Szego4").coeffs == std::vector<Rational>{1, -1, r(8, 9), r(-16, 27), 0});
  CHECK(named_instance("GRZ").coeffs == std::vector<Rational>{1, -1, 0, 0, 24});

  FamilyParams p;
  p.d = 3;
  CHECK(named_instance("GRZ", p).coeffs == std::vector<Rational>{1, -1, 0, 6});
  p = {};
  p.a = r(1, 2);
  p.b = 2;
  CHECK(named_instance("hab", p).coeffs == std::vector<Rational>{1, -1, r(1, 2), 2});
  CHECK(named_instance("h2", p).coeffs == std::vector<Rational>{1, -1, r(1, 2)});
  p = {};
  p.b = 3;
  CHECK(named_instance("h0b", p).coeffs == std::vector<Rational>{1, -1, 0, 3, -9});

  CHECK_THROWS_AS(named_instance("nope"), std::invalid_argument);
  CHECK_THROWS_AS(named_instance("hab"), std::invalid_argument);
  CHECK_THROWS_AS(make_family(3, {1, -1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(make_family(2, {0, -1, 1}), std::invalid_argument);
}

TEST_CASE("Straub lambda family") {
  auto f = straub_lambda();
  CHECK(f.dim == 3);
  // lambda = 0 is the Askey-Gasper function
  CHECK(specialize(f, 0).coeffs == named_instance("AG3").coeffs);
  auto s = specialize(f, 2);
  CHECK(s.coeffs == std::vector<Rational>{1, -3, 8, -16});
}

TEST_CASE("canonical form") {
  auto [c, scale] = canonicalize(make_family(3, {2, -6, 3, 5}));
  CHECK(scale == r(1, 3));
  CHECK(c.coeffs == std::vector<Rational>{1, -1, r(1, 6), r(5, 54)});
  CHECK_THROWS_AS(canonicalize(make_family(2, {1, 1, 1})), std::domain_error);
  CHECK_THROWS_AS(canonicalize(make_family(2, {1, 0, 1})), std::domain_error);
}

TEST_CASE("canonicalization rescales the Taylor coefficients, property") {
  // 1/p'(x) = c0 / p(s x), so u'_n = c0 s^|n| u_n
  for (auto coeffs : {std::vector<Rational>{3, -2, 1, r(1, 5)}, std::vector<Rational>{r(1, 2), -4, 7, -1}}) {
    auto fam = make_family(3, coeffs);
    auto [canon, s] = canonicalize(fam);
    auto a = expand_reciprocal(fam.denominator(), 4);
    auto b = expand_reciprocal(canon.denominator(), 4);
    for (unsigned i = 0; i <= 4; ++i)
      for (unsigned j = 0; j <= 4; ++j)
        for (unsigned k = 0; k <= 4; ++k) {
          ExponentVector n{i, j, k};
          CHECK(b.at(n) == coeffs[0] * pow(s, i + j + k) * a.at(n));
        }
  }
}
