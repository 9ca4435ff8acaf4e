#include "doctest.h"

#include "diagonalis/json_io.hpp"
#include "diagonalis/multipoly.hpp"

using namespace diagonalis;

TEST_CASE("graded-lex order puts lower degree first, then lexicographically larger") {
  GradedLexLess lt;
  CHECK(lt(ExponentVector{0, 0}, ExponentVector{0, 1}));
  CHECK(lt(ExponentVector{1, 0}, ExponentVector{0, 1}));
  CHECK(lt(ExponentVector{0, 2}, ExponentVector{1, 1}) == false);
  CHECK(lt(ExponentVector{2, 0, 0}, ExponentVector{1, 1, 0}));
  CHECK_FALSE(lt(ExponentVector{1, 1}, ExponentVector{1, 1}));
}

TEST_CASE("elementary symmetric polynomials") {
  for (std::size_t d = 1; d <= 5; ++d)
    for (std::size_t k = 0; k <= d; ++k) {
      auto e = elementary_symmetric<Rational>(d, k);
      CHECK(e.size() == binomial_int(static_cast<long>(d), static_cast<long>(k)).get_ui());
      CHECK(is_symmetric(e));
      for (const auto& [n, c] : e.terms()) {
        CHECK(c == 1);
        CHECK(n.total_degree() == k);
      }
      // e_k(1, ..., 1) = C(d, k)
      std::vector<Rational> ones(d, Rational(1));
      CHECK(e.evaluate(ones) == binomial(static_cast<long>(d), static_cast<long>(k)));
    }
  CHECK_THROWS(elementary_symmetric<Rational>(3, 4));
}

TEST_CASE("symmetric denominator and evaluation") {
  std::vector<Rational> c{1, -1, 0, 4};
  auto p = symmetric_denominator<Rational>(c);
  CHECK(p.dim() == 3);
  CHECK(p.constant_term() == 1);
  CHECK(p.coefficient(ExponentVector{1, 1, 1}) == 4);
  CHECK(p.coefficient(ExponentVector{1, 1, 0}) == 0);
  std::vector<Rational> pt{1, 2, 3};
  CHECK(p.evaluate(pt) == 1 - 6 + 4 * 6);
  CHECK(is_symmetric(p));

  MultiPoly<Rational> q(2);
  q.add_term(ExponentVector{1, 0}, 1);
  CHECK_FALSE(is_symmetric(q));
}

TEST_CASE("arithmetic, derivatives, substitution, scaling") {
  MultiPoly<Rational> x(2), y(2);
  x.add_term(ExponentVector{1, 0}, 1);
  y.add_term(ExponentVector{0, 1}, 1);
  auto one = MultiPoly<Rational>::constant(2, 1);
  auto p = (one + x) * (one - y);  // 1 + x - y - xy
  CHECK(p.size() == 4);
  CHECK(p.coefficient(ExponentVector{1, 1}) == -1);
  CHECK((p - p).is_zero());
  auto dx = partial_derivative(p, 0);
  CHECK(dx == one - y);
  auto p0 = substitute_zero(p, 1);
  CHECK(p0.dim() == 1);
  CHECK(p0.coefficient(ExponentVector{1}) == 1);
  std::vector<Rational> s{2, 3};
  auto ps = scale_variables(p, std::span<const Rational>(s));
  CHECK(ps.coefficient(ExponentVector{1, 1}) == -6);
  CHECK(Rational(2) * p == p + p);
}

TEST_CASE("json round trip") {
  std::vector<Rational> c{1, -1, make_rational(2, 3), 0, 0};
  auto p = symmetric_denominator<Rational>(c);
  auto j = multipoly_to_json(p);
  CHECK(multipoly_from_json<Rational>(j) == p);
}
