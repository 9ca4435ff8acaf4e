#include "doctest.h"

#include "diagonalis/geometry.hpp"
#include "diagonalis/sequences.hpp"

#include <cmath>
#include <map>
#include <random>

using namespace diagonalis;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

FamilySpec<Rational> hab(const Rational& a, const Rational& b) { return make_family(3, {1, -1, a, b}, "hab"); }

bool disjoint_sorted(const std::vector<IsolatingInterval>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i].lo < v[i - 1].hi || (v[i].lo == v[i - 1].hi && v[i].exact())) return false;
  return true;
}

// Sign changes of p on a fine rational grid; a lower bound on the number of
// simple real roots in (lo, hi).
long grid_sign_changes(const UniPoly& p, const Rational& lo, const Rational& hi, long steps) {
  long changes = 0;
  int last = 0;
  for (long i = 0; i <= steps; ++i) {
    int s = sign(p(lo + (hi - lo) * Rational(i) / Rational(steps)));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

TEST_CASE("three-variable locus") {
  CHECK(nonsmooth_locus_3d(0, 4).member);
  CHECK(nonsmooth_locus_3d(1, -1).member);
  CHECK(nonsmooth_locus_3d(0, 0).member);
  CHECK(nonsmooth_locus_3d(r(3, 4), 0).member);
  auto v = nonsmooth_locus_3d(0, 5);
  CHECK_FALSE(v.member);
  CHECK(v.value == 5);
}

TEST_CASE("four-variable loci and the table points") {
  auto p = nonsmooth_locus_4d(0, 2, 4);
  CHECK(p.factor1 == 8);
  CHECK(p.factor2 == 0);
  CHECK(p.member);
  auto q = nonsmooth_locus_4d(r(2, 3), 0, 0);
  CHECK(q.factor1 == r(8, 27));
  CHECK(q.factor2 == 0);
  CHECK(q.member);
  auto k = nonsmooth_locus_4d(0, 4, -16);
  CHECK(k.on_nonsmooth_family);
  CHECK(k.factor1 == 0);
  CHECK(k.member);
  auto s = nonsmooth_locus_4d(r(8, 9), r(-16, 27), 0);
  CHECK(s.on_nonsmooth_family);
  CHECK(s.member);
  CHECK_FALSE(nonsmooth_locus_4d(1, 1, 1).member);
}

TEST_CASE("the nonsmooth family relation is the first factor") {
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (long c = -3; c <= 3; ++c) {
        auto v = nonsmooth_locus_4d(r(a, 2), r(b), r(c, 3));
        CHECK(v.on_nonsmooth_family == (v.factor1 == 0));
      }
}

TEST_CASE("Sturm isolation, spec examples") {
  CHECK(sturm_isolate(UniPoly{1, -3, 0, 5}, RootDomain::positive).empty());
  auto two = sturm_isolate(UniPoly{1, -3, 0, 3}, RootDomain::positive);
  CHECK(two.size() == 2);
  CHECK(grid_sign_changes(UniPoly{1, -3, 0, 3}, 0, 2, 2000) == 2);
  auto sq = sturm_isolate(UniPoly{-2, 0, 1});
  REQUIRE(sq.size() == 2);
  CHECK(std::abs(refine_root(UniPoly{-2, 0, 1}, sq[0], r(1, 1000000)).approx() + std::sqrt(2.0)) < 1e-6);
  CHECK(std::abs(refine_root(UniPoly{-2, 0, 1}, sq[1], r(1, 1000000)).approx() - std::sqrt(2.0)) < 1e-6);
  CHECK(sturm_isolate(UniPoly{1, 0, 1}).empty());
  CHECK(sturm_count(UniPoly{-2, 0, 1}, -2, 2) == 2);
}

TEST_CASE("Sturm isolation against polynomials with known roots, property") {
  std::mt19937 gen(31337);
  std::uniform_int_distribution<int> num(-20, 20), den(1, 6), mult(1, 3), count(0, 4), coin(0, 2);
  for (int trial = 0; trial < 60; ++trial) {
    std::map<Rational, unsigned> roots;
    UniPoly p{1};
    for (int i = 0, n = count(gen); i < n; ++i) {
      Rational x = make_rational(num(gen), den(gen));
      unsigned m = static_cast<unsigned>(mult(gen));
      roots[x] += m;
      for (unsigned j = 0; j < m; ++j) p *= UniPoly{-x, 1};
    }
    const int extra = coin(gen);
    if (extra == 1) p *= UniPoly{1, 0, 1};  // no real roots
    long irrational = 0;
    if (extra == 2) {
      p *= UniPoly{-3, 0, 1};  // +-sqrt(3)
      irrational = 2;
    }
    p *= Rational(num(gen) == 0 ? 1 : num(gen));
    if (p.is_zero()) continue;

    auto iv = sturm_isolate(p);
    CHECK(disjoint_sorted(iv));
    CHECK(static_cast<long>(iv.size()) == static_cast<long>(roots.size()) + irrational);
    for (const auto& [x, m] : roots) {
      long hits = 0;
      for (const auto& i : iv)
        if (i.contains(x)) {
          ++hits;
          CHECK(i.multiplicity == m);
        }
      CHECK(hits == 1);
    }
    long positive = 0;
    for (const auto& [x, m] : roots) positive += x > 0;
    CHECK(static_cast<long>(sturm_isolate(p, RootDomain::positive).size()) == positive + (irrational ? 1 : 0));
  }
}

TEST_CASE("boundary curve") {
  auto [lo0, hi0] = boundary_curve_3d(0);
  CHECK(lo0.rational == r(0));
  CHECK(hi0.rational == r(4));
  auto [lo1, hi1] = boundary_curve_3d(1);
  CHECK(lo1.rational == r(-1));
  CHECK(hi1.rational == r(-1));
  auto [lo34, hi34] = boundary_curve_3d(r(3, 4));
  CHECK(lo34.rational == r(-1, 2));
  CHECK(hi34.rational == r(0));
  auto [lo, hi] = boundary_curve_3d(r(1, 2));
  CHECK_FALSE(hi.rational);
  const double want = 0.5 + 2 * std::pow(0.5, 1.5);
  CHECK(std::abs(hi.approx() - want) < 1e-9);
  CHECK(std::abs(lo.approx() - (0.5 - 2 * std::pow(0.5, 1.5))) < 1e-9);
  CHECK(hi.compare(2) < 0);  // b = 2 lies above the upper branch
  CHECK(hi.compare(r(6, 5)) > 0);
  CHECK(hi.compare(r(121, 100)) < 0);
  CHECK_THROWS_AS(boundary_curve_3d(r(3, 2)), std::domain_error);
}

TEST_CASE("discriminant identities hold symbolically") {
  CHECK(char4_cubic_discriminant_identity().holds());
  CHECK(h0b_cubic_discriminant_identity().holds());
  CHECK(hab_cubic_discriminant_identity().holds());
  // a deliberately wrong right-hand side is told apart
  auto id = h0b_cubic_discriminant_identity();
  id.rhs = Rational(2) * id.rhs;
  CHECK_FALSE(id.holds());
}

TEST_CASE("discriminant sign on a grid, property") {
  // negative exactly when a > 1, or b lies outside [b-, b+]; the a <= 1,
  // b > b+ half is the direction the necessity argument uses.
  for (long i = -8; i <= 12; ++i)
    for (long j = -16; j <= 48; ++j) {
      const Rational a = r(i, 8), b = r(j, 8);
      const Rational disc = cubic_discriminant<Rational>(b, 3 * a, -3, 1);
      bool outside = a > 1;
      if (!outside) {
        auto [lo, hi] = boundary_curve_3d(a);
        outside = hi.compare(b) < 0 || lo.compare(b) > 0;
        if (hi.compare(b) < 0) CHECK(disc < 0);
      }
      CHECK((disc < 0) == outside);
    }
}

TEST_CASE("critical points and the necessity test") {
  auto h05 = critical_points_diag(hab(0, 5));
  CHECK(h05.smooth);
  CHECK(h05.classes[0].polynomial == UniPoly{1, -3, 0, 5});
  CHECK(h05.classes[0].positive_count == 0);
  CHECK(h05.classes[1].points.empty());
  CHECK(h05.verdict == NecessityVerdict::violated);
  CHECK(h05.cubic_discriminant == 27 * 5 * (4 - 5));

  auto half = critical_points_diag(hab(r(1, 2), 2));
  CHECK(half.smooth);
  CHECK(half.verdict == NecessityVerdict::violated);
  REQUIRE(half.classes[1].points.size() == 3);
  CHECK(half.classes[1].points[0] == std::vector<Rational>{2, 2, r(1, 9)});

  auto sz = critical_points_diag(hab(r(3, 4), 0));
  CHECK_FALSE(sz.smooth);
  CHECK(sz.verdict == NecessityVerdict::inconclusive);
  CHECK(sz.reason == "locus-member: test inapplicable");

  auto two = critical_points_diag(make_family(2, {1, -1, r(1, 2)}));
  CHECK(two.classes[0].positive_count == 2);
  CHECK(two.verdict == NecessityVerdict::inconclusive);

  auto ag = critical_points_diag(hab(0, 4));
  CHECK_FALSE(ag.smooth);

  auto degenerate = critical_points_diag(hab(2, -8));
  CHECK(degenerate.classes[1].points.empty());
  CHECK(degenerate.classes[1].note.find("degenerate") == 0);

  CHECK(necessity_test(hab(0, 3)) == NecessityVerdict::inconclusive);
  CHECK_THROWS_AS(critical_points_diag(named_instance("KZ-D")), std::invalid_argument);

  auto j = crit_report_to_json(h05);
  CHECK(j["verdict"] == "violated");
  CHECK(j["smoothness"] == "smooth");
  CHECK(j["schema"] == "v1");
}

TEST_CASE("critical points satisfy the defining equations") {
  // p = 0 and x_j dp/dx_j equal for all j, checked exactly at the second-kind points
  for (auto [a, b] : {std::pair{r(1, 2), r(2)}, std::pair{r(3), r(1)}, std::pair{r(-1, 3), r(5)}}) {
    auto rep = critical_points_diag(hab(a, b));
    auto p = hab(a, b).denominator();
    for (const auto& pt : rep.classes[1].points) {
      CHECK(p.evaluate(pt) == 0);
      std::vector<Rational> g;
      for (std::size_t j = 0; j < 3; ++j) g.push_back(pt[j] * partial_derivative(p, j).evaluate(pt));
      CHECK(g[0] == g[1]);
      CHECK(g[1] == g[2]);
    }
  }
}

TEST_CASE("violated verdict comes with a nonpositive box coefficient") {
  for (auto [a, b] : {std::pair{r(0), r(5)}, std::pair{r(1, 2), r(2)}}) {
    REQUIRE(necessity_test(hab(a, b)) == NecessityVerdict::violated);
    auto box = expand_reciprocal(hab(a, b).denominator(), 12);
    CHECK(first_nonpositive(box, true));
  }
}

TEST_CASE("asymptotic ratio") {
  auto z = asymptotic_ratio_2d(0, 500);
  CHECK(z.exact == binomial(1000, 500));
  CHECK(std::abs(z.ratio - 1) < 0.01);
  auto h = asymptotic_ratio_2d(r(1, 2), 200);
  CHECK(std::abs(h.ratio - 1) < 0.02);
  auto s = asymptotic_ratio_2d(0, 1);
  CHECK(std::isfinite(s.ratio));
  CHECK(s.ratio > 0);
  CHECK_THROWS_AS(asymptotic_ratio_2d(1, 10), std::domain_error);
}

TEST_CASE("grid scan") {
  auto ar = parse_range("-1:1:0.5");
  CHECK(ar.values().size() == 5);
  CHECK_THROWS(parse_range("1:0:1"));
  CHECK_THROWS(parse_range("0:1"));
  CHECK_THROWS(parse_range("0:1:0"));
  auto rows = scan_grid_3d(parse_range("0:1:1/4"), parse_range("-2:6:1/4"), 1);
  auto rows4 = scan_grid_3d(parse_range("0:1:1/4"), parse_range("-2:6:1/4"), 4);
  REQUIRE(rows.size() == rows4.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].locus_value == rows4[i].locus_value);
    CHECK(rows[i].verdict == rows4[i].verdict);
  }
  // zero set on the grid equals the rational boundary values
  for (const auto& row : rows) {
    auto [lo, hi] = boundary_curve_3d(row.a);
    bool on_curve = lo.compare(row.b) == 0 || hi.compare(row.b) == 0;
    CHECK(row.member == on_curve);
  }
}

TEST_CASE("box positivity threshold bisection") {
  auto make = [](const Rational& b) {
    FamilyParams p;
    p.b = b;
    return named_instance("h0b", p);
  };
  auto t = box_positivity_threshold(make, 3, 6, 6, r(1, 8));
  CHECK(t.hi - t.lo <= r(1, 8));
  CHECK(t.lo >= 3);
  CHECK_THROWS(box_positivity_threshold(make, 6, 7, 6, r(1, 8)));
}
