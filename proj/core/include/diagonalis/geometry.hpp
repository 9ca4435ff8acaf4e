#pragma once

#include "diagonalis/family.hpp"
#include "diagonalis/json_io.hpp"
#include "diagonalis/multipoly.hpp"
#include "diagonalis/seriesbox.hpp"
#include "diagonalis/unipoly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace diagonalis {

// ---- real roots ----------------------------------------------------------

/// Half-open (lo, hi] holding exactly one real root, or the point [r, r] when
/// the root is rational and was hit exactly.
struct IsolatingInterval {
  Rational lo, hi;
  unsigned multiplicity = 1;

  bool exact() const { return lo == hi; }
  bool contains(const Rational& x) const { return exact() ? x == lo : (lo < x && x <= hi); }
  double approx() const;
};

enum class RootDomain { all_reals, positive };

/// Number of distinct real roots of p in (lo, hi].
long sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi);

/// Disjoint isolating intervals, sorted, one per distinct real root in the domain
/// (positive means the open half-line x > 0).
std::vector<IsolatingInterval> sturm_isolate(const UniPoly& p, RootDomain domain = RootDomain::all_reals);

/// Shrinks an isolating interval of p until hi - lo <= width.
IsolatingInterval refine_root(const UniPoly& p, IsolatingInterval iv, const Rational& width);

/// A real algebraic number: either rational, or a root of `minpoly` isolated in `interval`.
struct AlgebraicReal {
  std::optional<Rational> rational;
  UniPoly minpoly;
  IsolatingInterval interval;

  static AlgebraicReal exact(const Rational& r);
  /// Sign of (this - x), decided exactly.
  int compare(const Rational& x) const;
  double approx() const;
  std::string to_string() const;
};

// ---- loci ----------------------------------------------------------------

/// 4a^3 - 3a^2 + 6ab + b^2 - 4b as a polynomial in (a, b).
MultiPoly<Rational> locus_polynomial_3d();
/// The two factors of the d=4 discriminant, polynomials in (a, b, c).
MultiPoly<Rational> locus_factor1_4d();
MultiPoly<Rational> locus_factor2_4d();

struct Locus3d {
  Rational value;
  bool member = false;
};
Locus3d nonsmooth_locus_3d(const Rational& a, const Rational& b);

struct Locus4d {
  Rational factor1, factor2;
  bool member = false;
  /// c (a - 1) = a^3 + 2ab + b^2, the nonsmooth family on the singular variety.
  bool on_nonsmooth_family = false;
};
Locus4d nonsmooth_locus_4d(const Rational& a, const Rational& b, const Rational& c);

/// Discriminant of alpha x^3 + beta x^2 + gamma x + delta over any commutative ring.
template <class R>
R cubic_discriminant(const R& alpha, const R& beta, const R& gamma, const R& delta) {
  auto m = [](const auto& u, const auto& v) -> R { return u * v; };
  const R b2 = m(beta, beta), g2 = m(gamma, gamma);
  R out = m(b2, g2);
  out = out - m(m(Rational(4), alpha), m(g2, gamma));
  out = out - m(m(Rational(4), m(b2, beta)), delta);
  out = out - m(m(Rational(27), m(alpha, alpha)), m(delta, delta));
  out = out + m(m(Rational(18), m(alpha, beta)), m(gamma, delta));
  return out;
}

/// Discriminant of the cubic factor (x+b)^3 + 27x(a^3 + ab - (1-a)x) of the
/// characteristic polynomial of the h_{a,b} diagonal, together with the
/// closed form -3^9 (a^3 - 3a^2 - b)^2 (4a^3 - 3a^2 + 6ab + b^2 - 4b).
struct SymbolicIdentity {
  std::string name;
  MultiPoly<Rational> lhs, rhs;
  bool holds() const { return lhs == rhs; }
};
SymbolicIdentity char4_cubic_discriminant_identity();
/// disc(1 - 3c + bc^3) = 27 b (4 - b), in the single variable b.
SymbolicIdentity h0b_cubic_discriminant_identity();
/// disc(1 - 3c + 3ac^2 + bc^3) = -27 (4a^3 - 3a^2 + 6ab + b^2 - 4b).
SymbolicIdentity hab_cubic_discriminant_identity();

// ---- critical points -----------------------------------------------------

enum class NecessityVerdict { violated, inconclusive };
std::string to_string(NecessityVerdict v);

struct CritClass {
  std::string kind;  // "symmetric" or "second-kind"
  UniPoly polynomial;  // symmetric class: p(c, ..., c)
  std::vector<IsolatingInterval> real_roots;
  std::vector<std::vector<Rational>> points;  // second kind: explicit points
  long positive_count = 0;
  std::string note;
};

struct CritReport {
  FamilySpec<Rational> family;  // canonical form
  Rational scale = 1;  // canonical = original with x -> scale * x
  bool smooth = true;
  Rational locus_value;
  std::optional<Rational> cubic_discriminant;
  std::vector<CritClass> classes;
  long positive_count = 0;
  NecessityVerdict verdict = NecessityVerdict::inconclusive;
  std::string reason;
};

/// Critical points for the diagonal direction n = (1, ..., 1); d in {2, 3}.
CritReport critical_points_diag(const FamilySpec<Rational>& family);

NecessityVerdict necessity_test(const FamilySpec<Rational>& family);

json crit_report_to_json(const CritReport& r);

// ---- boundary and asymptotics -------------------------------------------

/// b = 2 - 3a -+ 2 (1 - a)^{3/2}, lower branch first.
std::pair<AlgebraicReal, AlgebraicReal> boundary_curve_3d(const Rational& a);

struct AsymptoticRatio {
  Rational a;
  long n = 0;
  Rational exact;  // u_{n,n}
  double ratio = 0;  // exact / formula
  std::string formula;  // decimal of the asymptotic formula, 30 digits
};
AsymptoticRatio asymptotic_ratio_2d(const Rational& a, long n);

// ---- scans ---------------------------------------------------------------

struct RationalRange {
  Rational lo, hi, step;
  std::vector<Rational> values() const;
};
/// "lo:hi:step", each part a rational or decimal.
RationalRange parse_range(const std::string& s);

struct GridRow {
  Rational a, b;
  Rational locus_value;
  bool member = false;
  long positive_count = 0;
  std::optional<NecessityVerdict> verdict;  // empty on the locus
};
std::vector<GridRow> scan_grid_3d(const RationalRange& a, const RationalRange& b, unsigned workers = 1);

struct ThresholdResult {
  Rational lo, hi;  // positive at lo, not positive at hi
  unsigned bound = 0;
  int steps = 0;
};
/// Bisection for the parameter value where the N-box of make(b) stops being
/// strictly positive. Requires positivity at lo and failure at hi.
ThresholdResult box_positivity_threshold(const std::function<FamilySpec<Rational>(const Rational&)>& make,
                                         Rational lo, Rational hi, unsigned bound, const Rational& precision,
                                         const BoxOptions& options = {});

}  // namespace diagonalis
