#include "diagonalis/geometry.hpp"

#include "diagonalis/sequences.hpp"

#include <mpfr.h>

#include <sstream>
#include <stdexcept>
#include <thread>

namespace diagonalis {

namespace {

using P = MultiPoly<Rational>;

P var(std::size_t dim, std::size_t i) {
  P p(dim);
  ExponentVector e(dim);
  e[i] = 1;
  p.add_term(e, 1);
  return p;
}

P cst(std::size_t dim, const Rational& c) { return P::constant(dim, c); }

P pw(const P& p, int k) {
  P out = cst(p.dim(), 1);
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

Rational q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

// ---- loci ----------------------------------------------------------------

MultiPoly<Rational> locus_polynomial_3d() {
  const P a = var(2, 0), b = var(2, 1);
  return q(4) * pw(a, 3) - q(3) * pw(a, 2) + q(6) * (a * b) + pw(b, 2) - q(4) * b;
}

MultiPoly<Rational> locus_factor1_4d() {
  const P a = var(3, 0), b = var(3, 1), c = var(3, 2);
  return pw(a, 3) + q(2) * (a * b) - a * c + pw(b, 2) + c;
}

MultiPoly<Rational> locus_factor2_4d() {
  const P a = var(3, 0), b = var(3, 1), c = var(3, 2);
  const P b2c = pw(b, 2) + c;
  P out = q(64) * pw(b, 3) - q(27) * (pw(b, 4) + pw(c, 2));
  out += q(6) * (b * c * (q(2) * c - b));
  out += pw(c, 3);
  out -= q(54) * (a * (q(2) * b - c) * b2c);
  out += q(18) * (pw(a, 2) * (q(2) * pw(b, 2) + q(10) * (b * c) - pw(c, 2)));
  out -= q(54) * (pw(a, 3) * b2c);
  out += q(81) * (pw(a, 4) * c);
  return out;
}

Locus3d nonsmooth_locus_3d(const Rational& a, const Rational& b) {
  const Rational pt[] = {a, b};
  Locus3d r;
  r.value = locus_polynomial_3d().evaluate(pt);
  r.member = r.value == 0;
  return r;
}

Locus4d nonsmooth_locus_4d(const Rational& a, const Rational& b, const Rational& c) {
  const Rational pt[] = {a, b, c};
  Locus4d r;
  r.factor1 = locus_factor1_4d().evaluate(pt);
  r.factor2 = locus_factor2_4d().evaluate(pt);
  r.member = r.factor1 == 0 || r.factor2 == 0;
  r.on_nonsmooth_family = c * (a - 1) == a * a * a + 2 * a * b + b * b;
  return r;
}

SymbolicIdentity char4_cubic_discriminant_identity() {
  const P a = var(2, 0), b = var(2, 1);
  // (x+b)^3 + 27x(a^3 + ab - (1-a)x) = x^3 + (3b - 27(1-a)) x^2 + (3b^2 + 27(a^3+ab)) x + b^3
  const P alpha = cst(2, 1);
  const P beta = q(3) * b - q(27) * (cst(2, 1) - a);
  const P gamma = q(3) * pw(b, 2) + q(27) * (pw(a, 3) + a * b);
  const P delta = pw(b, 3);
  return {"char4-cubic-discriminant", cubic_discriminant(alpha, beta, gamma, delta),
          q(-19683) * (pw(pw(a, 3) - q(3) * pw(a, 2) - b, 2) * locus_polynomial_3d())};
}

SymbolicIdentity h0b_cubic_discriminant_identity() {
  const P b = var(1, 0);
  return {"h0b-cubic-discriminant", cubic_discriminant(b, cst(1, 0), cst(1, -3), cst(1, 1)),
          q(27) * (b * (cst(1, 4) - b))};
}

SymbolicIdentity hab_cubic_discriminant_identity() {
  const P a = var(2, 0), b = var(2, 1);
  return {"hab-cubic-discriminant", cubic_discriminant(b, q(3) * a, cst(2, -3), cst(2, 1)),
          q(-27) * locus_polynomial_3d()};
}

// ---- critical points -----------------------------------------------------

std::string to_string(NecessityVerdict v) { return v == NecessityVerdict::violated ? "violated" : "inconclusive"; }

namespace {

CritClass symmetric_class(UniPoly poly) {
  CritClass k;
  k.kind = "symmetric";
  k.polynomial = std::move(poly);
  if (k.polynomial.degree() >= 1) {
    k.real_roots = sturm_isolate(k.polynomial, RootDomain::all_reals);
    k.positive_count = static_cast<long>(sturm_isolate(k.polynomial, RootDomain::positive).size());
  }
  return k;
}

// x = y = 1/a, z = a(1-a)/(a^2+b) and permutations.
CritClass second_kind_class(const Rational& a, const Rational& b) {
  CritClass k;
  k.kind = "second-kind";
  if (a == 0) {
    k.note = "empty: a = 0";
    return k;
  }
  if (a * a + b == 0) {
    k.note = "empty: a^2 + b = 0";
    return k;
  }
  const Rational u = 1 / a;
  const Rational t = a * (1 - a) / (a * a + b);
  if (t == u) {
    k.note = "degenerate: b = -a^3, coincides with the symmetric point (1/a, 1/a, 1/a)";
    return k;
  }
  k.points = {{u, u, t}, {u, t, u}, {t, u, u}};
  if (u > 0 && t > 0) k.positive_count = 3;
  return k;
}

}  // namespace

CritReport critical_points_diag(const FamilySpec<Rational>& family) {
  if (family.dim != 2 && family.dim != 3)
    throw std::invalid_argument("critical points are implemented for d = 2 and d = 3 only (got d = " +
                                std::to_string(family.dim) + ")");
  auto [canon, scale] = canonicalize(family);
  CritReport r;
  r.family = canon;
  r.scale = scale;
  const Rational& a = canon.coeffs[2];
  if (canon.dim == 2) {
    r.locus_value = 1 - a;
    r.classes.push_back(symmetric_class(UniPoly{1, -2, a}));
  } else {
    const Rational& b = canon.coeffs[3];
    r.locus_value = nonsmooth_locus_3d(a, b).value;
    r.cubic_discriminant = cubic_discriminant<Rational>(b, 3 * a, -3, 1);
    r.classes.push_back(symmetric_class(UniPoly{1, -3, 3 * a, b}));
    r.classes.push_back(second_kind_class(a, b));
  }
  r.smooth = r.locus_value != 0;
  for (const auto& k : r.classes) r.positive_count += k.positive_count;

  const long symmetric_positive = r.classes.front().positive_count;
  if (!r.smooth) {
    r.verdict = NecessityVerdict::inconclusive;
    r.reason = "locus-member: test inapplicable";
  } else if (symmetric_positive == 0) {
    r.verdict = NecessityVerdict::violated;
    r.reason = "no critical point on the positive diagonal; a unique positive critical point would be symmetric";
  } else {
    r.verdict = NecessityVerdict::inconclusive;
    r.reason = std::to_string(symmetric_positive) + " positive symmetric critical point(s), " +
               std::to_string(r.positive_count) + " positive in total; no contradiction";
  }
  return r;
}

NecessityVerdict necessity_test(const FamilySpec<Rational>& family) { return critical_points_diag(family).verdict; }

json crit_report_to_json(const CritReport& r) {
  json coeffs = json::array();
  for (const auto& c : r.family.coeffs) coeffs.push_back(to_string(c));
  json classes = json::array();
  for (const auto& k : r.classes) {
    json roots = json::array();
    for (const auto& iv : k.real_roots)
      roots.push_back({{"lo", to_string(iv.lo)},
                       {"hi", to_string(iv.hi)},
                       {"exact", iv.exact()},
                       {"multiplicity", iv.multiplicity},
                       {"approx", iv.approx()}});
    json points = json::array();
    for (const auto& pt : k.points) {
      json p = json::array();
      for (const auto& x : pt) p.push_back(to_string(x));
      points.push_back(p);
    }
    json jk = {{"kind", k.kind}, {"positive_count", k.positive_count}};
    if (k.kind == "symmetric") {
      jk["polynomial"] = to_string(k.polynomial, "c");
      jk["real_roots"] = roots;
    } else {
      jk["points"] = points;
    }
    if (!k.note.empty()) jk["note"] = k.note;
    classes.push_back(jk);
  }
  json out = {{"schema", "v1"},
              {"family", r.family.name},
              {"d", r.family.dim},
              {"coeffs", coeffs},
              {"scale", to_string(r.scale)},
              {"smoothness", r.smooth ? "smooth" : "nonsmooth-locus-member"},
              {"locus_value", to_string(r.locus_value)},
              {"classes", classes},
              {"positive_count", r.positive_count},
              {"verdict", to_string(r.verdict)},
              {"reason", r.reason}};
  if (r.cubic_discriminant) out["cubic_discriminant"] = to_string(*r.cubic_discriminant);
  return out;
}

// ---- boundary and asymptotics -------------------------------------------

std::pair<AlgebraicReal, AlgebraicReal> boundary_curve_3d(const Rational& a) {
  if (a > 1) throw std::domain_error("boundary_curve_3d: needs a <= 1");
  const Rational s = 1 - a;
  const Rational centre = 2 - 3 * a;
  Rational root;
  if (rational_sqrt(s, root)) {
    const Rational h = 2 * root * root * root;
    return {AlgebraicReal::exact(centre - h), AlgebraicReal::exact(centre + h)};
  }
  // b^2 + (6a - 4) b + 4a^3 - 3a^2, two simple irrational roots.
  UniPoly minpoly{4 * a * a * a - 3 * a * a, 6 * a - 4, 1};
  auto roots = sturm_isolate(minpoly, RootDomain::all_reals);
  if (roots.size() != 2) throw std::logic_error("boundary_curve_3d: expected two real roots");
  AlgebraicReal lower{std::nullopt, minpoly, roots[0]};
  AlgebraicReal upper{std::nullopt, minpoly, roots[1]};
  return {lower, upper};
}

namespace {

struct Mpfr {
  mpfr_t v;
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
};

}  // namespace

AsymptoticRatio asymptotic_ratio_2d(const Rational& a, long n) {
  if (a >= 1) throw std::domain_error("asymptotic_ratio_2d: needs a < 1");
  if (n < 1) throw std::invalid_argument("asymptotic_ratio_2d: needs n >= 1");
  AsymptoticRatio r;
  r.a = a;
  r.n = n;
  r.exact = binomial_oracle("2var", n, a);

  const mpfr_prec_t prec = 256;
  Mpfr s(prec), num(prec), den(prec), pi(prec), formula(prec), ratio(prec);
  Rational one_minus_a = 1 - a;
  mpfr_set_q(s.v, one_minus_a.get_mpq_t(), MPFR_RNDN);
  mpfr_sqrt(s.v, s.v, MPFR_RNDN);
  mpfr_add_ui(num.v, s.v, 1, MPFR_RNDN);
  mpfr_pow_ui(num.v, num.v, static_cast<unsigned long>(2 * n + 1), MPFR_RNDN);
  mpfr_const_pi(pi.v, MPFR_RNDN);
  mpfr_mul_ui(den.v, pi.v, static_cast<unsigned long>(n), MPFR_RNDN);
  mpfr_mul(den.v, den.v, s.v, MPFR_RNDN);
  mpfr_sqrt(den.v, den.v, MPFR_RNDN);
  mpfr_mul_ui(den.v, den.v, 2, MPFR_RNDN);
  mpfr_div(formula.v, num.v, den.v, MPFR_RNDN);
  mpfr_set_q(ratio.v, r.exact.get_mpq_t(), MPFR_RNDN);
  mpfr_div(ratio.v, ratio.v, formula.v, MPFR_RNDN);
  r.ratio = mpfr_get_d(ratio.v, MPFR_RNDN);

  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.30Re", formula.v);
  r.formula = buf;
  mpfr_free_str(buf);
  return r;
}

// ---- scans ---------------------------------------------------------------

std::vector<Rational> RationalRange::values() const {
  std::vector<Rational> out;
  for (Rational x = lo; x <= hi; x += step) out.push_back(x);
  return out;
}

RationalRange parse_range(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 3) throw std::invalid_argument("range '" + s + "' must look like lo:hi:step");
  RationalRange r{parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
  if (r.step <= 0) throw std::invalid_argument("range '" + s + "': step must be positive");
  if (r.hi < r.lo) throw std::invalid_argument("range '" + s + "': hi < lo");
  return r;
}

std::vector<GridRow> scan_grid_3d(const RationalRange& ar, const RationalRange& br, unsigned workers) {
  const auto as = ar.values();
  const auto bs = br.values();
  std::vector<GridRow> rows(as.size() * bs.size());
  auto fill = [&](std::size_t i) {
    GridRow& row = rows[i];
    row.a = as[i / bs.size()];
    row.b = bs[i % bs.size()];
    CritReport rep = critical_points_diag(make_family(3, {1, -1, row.a, row.b}, "hab"));
    row.locus_value = rep.locus_value;
    row.member = !rep.smooth;
    row.positive_count = rep.positive_count;
    if (rep.smooth) row.verdict = rep.verdict;
  };
  workers = std::max(1u, workers);
  if (workers == 1 || rows.size() < 2) {
    for (std::size_t i = 0; i < rows.size(); ++i) fill(i);
    return rows;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < rows.size(); i += workers) fill(i);
    });
  pool.clear();
  return rows;
}

ThresholdResult box_positivity_threshold(const std::function<FamilySpec<Rational>(const Rational&)>& make,
                                         Rational lo, Rational hi, unsigned bound, const Rational& precision,
                                         const BoxOptions& options) {
  if (precision <= 0) throw std::invalid_argument("bisection precision must be positive");
  if (hi <= lo) throw std::invalid_argument("bisection needs lo < hi");
  auto positive = [&](const Rational& b) {
    auto box = expand_reciprocal(make(b).denominator(), bound, options);
    return !first_nonpositive(box, true).has_value();
  };
  if (!positive(lo)) throw std::domain_error("bisection: box is not positive at lo = " + to_string(lo));
  if (positive(hi)) throw std::domain_error("bisection: box is still positive at hi = " + to_string(hi));
  ThresholdResult r{lo, hi, bound, 0};
  while (r.hi - r.lo > precision) {
    Rational mid = (r.lo + r.hi) / 2;
    if (positive(mid))
      r.lo = mid;
    else
      r.hi = mid;
    ++r.steps;
  }
  return r;
}

}  // namespace diagonalis
