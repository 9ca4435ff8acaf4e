#pragma once

#include "diagonalis/rational.hpp"
#include "diagonalis/recurrence.hpp"
#include "diagonalis/unipoly.hpp"

#include <optional>
#include <vector>

namespace diagonalis {

/// Truncated power series c_0 + c_1 z + ... + c_M z^M + O(z^{M+1}). Binary
/// operations truncate to the smaller order of their operands.
class UniSeries {
 public:
  /// Order is coeffs.size() - 1; coeffs must be nonempty.
  explicit UniSeries(std::vector<Rational> coeffs);
  static UniSeries zero(int order);
  static UniSeries constant(const Rational& c, int order);
  /// The series z (order >= 1).
  static UniSeries variable(int order);
  static UniSeries from_poly(const UniPoly& p, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Index of the first nonzero coefficient, or nullopt if all vanish.
  std::optional<int> valuation() const;

  UniSeries truncate(int order) const;
  /// f(c z).
  UniSeries scale_argument(const Rational& c) const;

  friend UniSeries operator+(const UniSeries& f, const UniSeries& g);
  friend UniSeries operator-(const UniSeries& f, const UniSeries& g);
  friend UniSeries operator*(const UniSeries& f, const UniSeries& g);
  /// Throws std::domain_error when g(0) = 0.
  friend UniSeries operator/(const UniSeries& f, const UniSeries& g);
  friend UniSeries operator*(const Rational& c, const UniSeries& f);
  friend bool operator==(const UniSeries&, const UniSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// sum_n z^n prod_{j<n} (a+j)(b+j) / ((1+j)(c+j)) through z^M.
UniSeries hypergeometric_2F1(const Rational& a, const Rational& b, const Rational& c, int order);

/// f(g(z)); needs g(0) = 0. The result order is the largest one both
/// truncations still determine: min(ord g, (ord f + 1) * val(g) - 1).
UniSeries series_compose(const UniSeries& f, const UniSeries& g);

/// f^r via the binomial series; needs f(0) = 1.
UniSeries series_power(const UniSeries& f, const Rational& r);

/// exp(f) with f(0) = 0.
UniSeries series_exp(const UniSeries& f);
/// log(f) with f(0) = 1.
UniSeries series_log(const UniSeries& f);

/// Compositional inverse g with f(g(q)) = q; needs f(0) = 0, f'(0) != 0.
UniSeries series_reversion(const UniSeries& f);

/// sum over (n, m) in Z^2 of q^{n^2 + nm + m^2}, through q^M.
UniSeries theta_hexagonal(int order);

struct SeriesMismatch {
  int index;
  Rational lhs;
  Rational rhs;
};

/// Compares through the smaller order; nullopt when equal there.
std::optional<SeriesMismatch> verify_series_identity(const UniSeries& lhs, const UniSeries& rhs);

/// Generating function of a window starting at index 0, truncated to `order`.
UniSeries series_from_sequence(const SequenceWindow& seq, int order);

/// y0 and the logarithmic companion y1 = y0 log z + log_part at a regular
/// singular point with exponent 0 doubled; log_part has no constant term.
struct LogSolution {
  UniSeries plain;
  UniSeries log_part;
};

class NoLogSolution : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Frobenius solutions of the ODE attached to `rec` by
/// sum_j p_j(n) u_{n+j} = 0  <->  sum_j z^{r-j} p_j(theta - j) y = 0,
/// theta = z d/dz, both to order M.
LogSolution recurrence_to_frobenius(const PRecurrence& rec, int order);

/// q(z) = exp(y1 / y0) = z exp(log_part / y0); order is one more than the
/// solution's.
UniSeries q_coordinate(const LogSolution& sol);

}  // namespace diagonalis
