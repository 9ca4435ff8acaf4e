#pragma once

#include "diagonalis/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace diagonalis {

/// Dense univariate polynomial over the rationals. coefficient(i) is the
/// coefficient of x^i; the zero polynomial has no stored coefficients and
/// degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);
  explicit UniPoly(const Rational& constant);

  static UniPoly monomial(const Rational& c, int degree);
  static UniPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Zero for indices beyond the degree.
  Rational coefficient(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator-(UniPoly a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

UniPoly derivative(const UniPoly& p);

/// p(x + s).
UniPoly shift(const UniPoly& p, const Rational& s);

/// Euclidean division; throws std::domain_error on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd (zero only when both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);

/// p / gcd(p, p'), made monic.
UniPoly squarefree_part(const UniPoly& p);

/// Scalar multiple of p with coprime integer coefficients and a positive
/// leading coefficient.
UniPoly primitive_integer(const UniPoly& p);

/// Human-readable form, highest degree first, e.g. "x^2 - 3*x + 1/4".
std::string to_string(const UniPoly& p, const std::string& var = "x");

}  // namespace diagonalis
