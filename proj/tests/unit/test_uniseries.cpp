#include "doctest.h"

#include "diagonalis/uniseries.hpp"

#include <random>

using namespace diagonalis;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

UniSeries series(std::initializer_list<long> c, int order) {
  std::vector<Rational> v(static_cast<std::size_t>(order + 1), Rational(0));
  std::size_t i = 0;
  for (long x : c) {
    if (i < v.size()) v[i] = x;
    ++i;
  }
  return UniSeries(std::move(v));
}

UniSeries random_series(std::mt19937& gen, int order, std::optional<long> constant) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 3);
  std::vector<Rational> v;
  for (int i = 0; i <= order; ++i) v.push_back(make_rational(num(gen), den(gen)));
  if (constant) v[0] = *constant;
  return UniSeries(std::move(v));
}

// Lagrange inversion: [q^n] f^{-1} = (1/n) [w^{n-1}] (w / f(w))^n.
UniSeries lagrange_inverse(const UniSeries& f) {
  const int M = f.order();
  std::vector<Rational> h(static_cast<std::size_t>(M), Rational(0));  // f(w)/w through w^{M-1}
  for (int i = 0; i < M; ++i) h[static_cast<std::size_t>(i)] = f[i + 1];
  UniSeries hs(h);
  UniSeries inv = UniSeries::constant(1, M - 1) / hs;  // w / f(w)
  std::vector<Rational> out(static_cast<std::size_t>(M + 1), Rational(0));
  UniSeries pw = UniSeries::constant(1, M - 1);
  for (int n = 1; n <= M; ++n) {
    pw = pw * inv;
    out[static_cast<std::size_t>(n)] = pw[n - 1] / n;
  }
  return UniSeries(out);
}

// sum over n, m of q^(n^2 + nm + m^2), by a direct double loop.
std::vector<long> theta_by_enumeration(int M) {
  std::vector<long> c(static_cast<std::size_t>(M + 1), 0);
  for (long n = -M - 1; n <= M + 1; ++n)
    for (long m = -M - 1; m <= M + 1; ++m) {
      long k = n * n + n * m + m * m;
      if (k <= M) ++c[static_cast<std::size_t>(k)];
    }
  return c;
}

// 1 + 6 sum_{n>=1} (d_{1,3}(n) - d_{2,3}(n)) q^n.
std::vector<long> theta_by_divisors(int M) {
  std::vector<long> c(static_cast<std::size_t>(M + 1), 0);
  c[0] = 1;
  for (long n = 1; n <= M; ++n) {
    long s = 0;
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) s += d % 3 == 1 ? 1 : d % 3 == 2 ? -1 : 0;
    c[static_cast<std::size_t>(n)] = 6 * s;
  }
  return c;
}

}  // namespace

TEST_CASE("2F1 coefficients") {
  // 2F1(1/2, 1/2; 1; z) = sum C(2n,n)^2 z^n / 16^n
  auto f = hypergeometric_2F1(r(1, 2), r(1, 2), 1, 15);
  for (int n = 0; n <= 15; ++n) CHECK(f[n] == binomial(2 * n, n) * binomial(2 * n, n) / pow(r(16), n));
  // 2F1(1/3, 2/3; 1; z): (3n)! / n!^3 / 27^n
  auto g = hypergeometric_2F1(r(1, 3), r(2, 3), 1, 12);
  for (int n = 0; n <= 12; ++n)
    CHECK(g[n] == Rational(factorial(3 * n) / (factorial(n) * factorial(n) * factorial(n))) / pow(r(27), n));
  // terminating: 2F1(-3, b; c; z) is a cubic
  auto t = hypergeometric_2F1(-3, 2, 5, 8);
  for (int n = 4; n <= 8; ++n) CHECK(t[n] == 0);
}

TEST_CASE("arithmetic truncates to the smaller order") {
  auto f = series({1, 1}, 5), g = series({1, -1}, 3);
  CHECK((f * g).order() == 3);
  CHECK((f * g) == series({1, 0, -1}, 3));
  CHECK((UniSeries::constant(1, 6) / series({1, -1}, 6)) == series({1, 1, 1, 1, 1, 1, 1}, 6));
  CHECK_THROWS_AS(UniSeries::constant(1, 3) / UniSeries::variable(3), std::domain_error);
  CHECK(series({0, 0, 3, 1}, 5).valuation() == 2);
  CHECK_FALSE(UniSeries::zero(4).valuation());
  CHECK(series({1, 2, 4}, 2).scale_argument(r(1, 2)) == series({1, 1, 1}, 2));
}

TEST_CASE("composition agrees with Horner evaluation") {
  std::mt19937 gen(99);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_series(gen, 8, std::nullopt);
    auto g = random_series(gen, 8, 0L);
    UniSeries h = UniSeries::constant(f[8], 8);
    for (int i = 7; i >= 0; --i) h = h * g + UniSeries::constant(f[i], 8);
    auto c = series_compose(f, g);
    CHECK(c.order() == 8);
    CHECK(c == h);
  }
  // a z^2 argument determines twice as many coefficients as f carries
  auto f = series({1, 1, 1}, 2);
  auto c = series_compose(f, series({0, 0, 1}, 10));
  CHECK(c.order() == 5);
  CHECK(c == series({1, 0, 1, 0, 1, 0}, 5));
  CHECK_THROWS(series_compose(f, series({1, 1}, 3)));
}

TEST_CASE("powers, exp and log") {
  std::mt19937 gen(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_series(gen, 10, 1L);
    auto half = series_power(f, r(1, 2));
    CHECK(half * half == f);
    auto third = series_power(f, r(-1, 3));
    CHECK(series_power(third, -3) == f);
    CHECK(series_exp(series_log(f)) == f);
  }
  CHECK(series_power(series({1, -1}, 6), -1) == series({1, 1, 1, 1, 1, 1, 1}, 6));
  // (1 - 4z)^{-1/2} = sum C(2n, n) z^n
  auto cb = series_power(series({1, -4}, 12), r(-1, 2));
  for (int n = 0; n <= 12; ++n) CHECK(cb[n] == binomial(2 * n, n));
  // exp(z): 1/n!
  auto e = series_exp(UniSeries::variable(10));
  for (int n = 0; n <= 10; ++n) CHECK(e[n] == Rational(1) / Rational(factorial(n)));
  CHECK_THROWS(series_power(series({2, 1}, 3), r(1, 2)));
  CHECK_THROWS(series_log(series({2, 1}, 3)));
}

TEST_CASE("reversion matches Lagrange inversion") {
  std::mt19937 gen(2024);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = random_series(gen, 9, 0L);
    std::vector<Rational> c = f.coefficients();
    if (c[1] == 0) c[1] = 1;
    f = UniSeries(c);
    auto g = series_reversion(f);
    CHECK(g == lagrange_inverse(f));
    CHECK(series_compose(f, g) == UniSeries::variable(9));
  }
  // z / (1 - z) inverts to z / (1 + z)
  auto g = series_reversion(series({0, 1, 1, 1, 1, 1, 1}, 6));
  CHECK(g == series({0, 1, -1, 1, -1, 1, -1}, 6));
  CHECK_THROWS(series_reversion(series({0, 0, 1}, 4)));
}

TEST_CASE("hexagonal theta series, two enumerations") {
  const int M = 60;
  auto th = theta_hexagonal(M);
  auto a = theta_by_enumeration(M);
  auto b = theta_by_divisors(M);
  for (int n = 0; n <= M; ++n) {
    CHECK(th[n] == a[static_cast<std::size_t>(n)]);
    CHECK(a[static_cast<std::size_t>(n)] == b[static_cast<std::size_t>(n)]);
  }
  CHECK(th[1] == 6);
  CHECK(th[2] == 0);
  CHECK(th[3] == 6);
  CHECK(th[7] == 12);
}

TEST_CASE("identity verification reports the first mismatch") {
  auto a = series({1, 2, 3, 4}, 3), b = series({1, 2, 5, 4}, 5);
  auto m = verify_series_identity(a, b);
  REQUIRE(m);
  CHECK(m->index == 2);
  CHECK(m->lhs == 3);
  CHECK(m->rhs == 5);
  CHECK_FALSE(verify_series_identity(a, a));
}

TEST_CASE("Frobenius solutions of the Szego recurrence") {
  const int M = 10;
  auto sol = recurrence_to_frobenius(recurrences::szego3(), M);
  // y0 is the generating function of s_n = 1, 12, 198, 3720, ...
  SequenceWindow s = recurrence_extend(recurrences::szego3(), {0, {1, 12}}, M);
  CHECK(sol.plain == series_from_sequence(s, M));
  CHECK(sol.plain[3] == 3720);
  CHECK(sol.log_part[0] == 0);
  auto q = q_coordinate(sol);
  CHECK(q.order() == M + 1);
  CHECK(q[0] == 0);
  CHECK(q[1] == 1);
  CHECK(q[2] == r(33, 2));
  CHECK(q[3] == 306);
  CHECK(q[4] == r(12203, 2));
  CHECK(q[5] == 128109);
}

TEST_CASE("Frobenius needs a doubled exponent at 0") {
  // (n+1) u_{n+1} = 2(2n+1) u_n: indicial polynomial t, simple root
  PRecurrence central({UniPoly{-2, -4}, UniPoly{1, 1}});
  CHECK_THROWS_AS(recurrence_to_frobenius(central, 6), NoLogSolution);

  auto sol = recurrence_to_frobenius(recurrences::franel(), 8);
  CHECK(sol.plain[4] == 346);
  CHECK(q_coordinate(sol)[1] == 1);
}
