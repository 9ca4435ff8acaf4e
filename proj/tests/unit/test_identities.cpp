#include "doctest.h"

#include "diagonalis/identities.hpp"

using namespace diagonalis;

TEST_CASE("catalog identities hold to order 25") {
  for (const auto& name : identity_names()) {
    if (name == "theta-modular" || name == "lewy-askey-binomial") continue;
    CAPTURE(name);
    auto rep = verify_named_identity(name, 25);
    CHECK(rep.order == 25);
    CHECK(rep.passed());
  }
}

TEST_CASE("theta-modular pipeline to order 12") {
  auto rep = verify_named_identity("theta-modular", 12);
  CHECK(rep.passed());
  CHECK(rep.order == 12);
  REQUIRE(rep.extras.size() == 2);
  const auto& q = rep.extras[0].second;
  CHECK(q[1] == 1);
  CHECK(q[2] == make_rational(33, 2));
  CHECK(q[5] == 128109);
}

TEST_CASE("Lewy-Askey binomial identity from a four-variable box") {
  auto rep = verify_named_identity("lewy-askey-binomial", 10);
  CHECK(rep.passed());
  CHECK(rep.order == 10);
}

TEST_CASE("order zero is trivially true") {
  for (const auto& name : identity_names()) {
    CAPTURE(name);
    auto rep = verify_named_identity(name, 0);
    CHECK(rep.passed());
    CHECK(rep.order == 0);
  }
}

TEST_CASE("a wrong starting value is caught at the right index") {
  // Franel numbers start 1, 2, 10; the series with u_1 = 3 differs at z^1.
  auto wrong = recurrence_series(recurrences::franel(), 3, 6);
  auto right = recurrence_series(recurrences::franel(), 2, 6);
  auto m = verify_series_identity(wrong, right);
  REQUIRE(m);
  CHECK(m->index == 1);
  CHECK_THROWS(verify_named_identity("nope", 3));
  CHECK_THROWS(verify_named_identity("fran", -1));
}
