#pragma once

#include "diagonalis/rational.hpp"
#include "diagonalis/unipoly.hpp"

#include <concepts>
#include <optional>
#include <string>

namespace diagonalis {

/// Per-ring glue for the generic multivariate code. Specialized for the
/// rationals and for Q[lambda] (UniPoly in the parameter).
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static constexpr const char* tag = "Q";
  static Rational zero() { return 0; }
  static Rational one() { return 1; }
  static bool is_zero(const Rational& r) { return r == 0; }
  static std::optional<Rational> unit_inverse(const Rational& r) {
    if (r == 0) return std::nullopt;
    return Rational(1 / r);
  }
  static Rational from_rational(const Rational& q) { return q; }
};

template <>
struct RingTraits<UniPoly> {
  static constexpr const char* tag = "Qlambda";
  static UniPoly zero() { return {}; }
  static UniPoly one() { return UniPoly(Rational(1)); }
  static bool is_zero(const UniPoly& r) { return r.is_zero(); }
  /// Units of Q[lambda] are the nonzero constants.
  static std::optional<UniPoly> unit_inverse(const UniPoly& r) {
    if (r.degree() != 0) return std::nullopt;
    return UniPoly(Rational(1 / r.leading()));
  }
  static UniPoly from_rational(const Rational& q) { return UniPoly(q); }
};

template <class R>
concept CoefficientRing = requires(R a, const R& b, const Rational& q) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { RingTraits<R>::zero() } -> std::same_as<R>;
  { RingTraits<R>::one() } -> std::same_as<R>;
  { RingTraits<R>::is_zero(b) } -> std::same_as<bool>;
  { RingTraits<R>::from_rational(q) } -> std::same_as<R>;
};

}  // namespace diagonalis
