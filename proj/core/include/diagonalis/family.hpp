#pragma once

#include "diagonalis/multipoly.hpp"
#include "diagonalis/rational.hpp"
#include "diagonalis/unipoly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace diagonalis {

/// h = 1 / sum_{k=0}^{d} c_k e_k(x_1, ..., x_d).
template <CoefficientRing R>
struct FamilySpec {
  std::size_t dim = 0;
  std::vector<R> coeffs;  // c_0 .. c_d
  std::string name;

  MultiPoly<R> denominator() const { return symmetric_denominator<R>(coeffs); }
  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Checks c_0 != 0 and that there are exactly d+1 coefficients.
FamilySpec<Rational> make_family(std::size_t d, std::vector<Rational> coeffs, std::string name = {});
FamilySpec<UniPoly> make_family(std::size_t d, std::vector<UniPoly> coeffs, std::string name = {});

/// Optional parameters for the parametric catalog entries.
struct FamilyParams {
  std::optional<Rational> a, b, c;
  std::optional<std::size_t> d;
};

/// Catalog names: AG3, Szego3, LewyAskey, KZ-D (alias D), Kauers, GRZ (d,
/// c defaulting to d!), Koornwinder, Szego4, h2 (a), hab (a, b), habc
/// (a, b, c), h0b (b; h_{0,b,-b^2}). Throws std::invalid_argument for
/// unknown names or missing parameters.
FamilySpec<Rational> named_instance(const std::string& name, const FamilyParams& params = {});

/// All rational catalog names, for help text.
std::vector<std::string> catalog_names();

/// 1 - (l+1) e_1 + l(l+2) e_2 - (l-1)(l+2)^2 e_3 with coefficients in Q[l].
FamilySpec<UniPoly> straub_lambda();

/// Divides by c_0 and rescales every variable by -c_0/c_1, giving c_0 = 1,
/// c_1 = -1; returns the new spec and the scale. Throws std::domain_error
/// when c_1/c_0 >= 0 (then some low-order coefficient is already <= 0).
std::pair<FamilySpec<Rational>, Rational> canonicalize(const FamilySpec<Rational>& spec);

/// Substitutes a value for lambda in every coefficient.
FamilySpec<Rational> specialize(const FamilySpec<UniPoly>& spec, const Rational& lambda);

}  // namespace diagonalis
