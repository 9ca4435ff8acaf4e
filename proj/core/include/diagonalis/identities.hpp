#pragma once

#include "diagonalis/seriesbox.hpp"
#include "diagonalis/uniseries.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace diagonalis {

struct IdentityReport {
  std::string name;
  std::string description;
  int order = 0;  // coefficients z^0..z^order were compared
  std::optional<SeriesMismatch> mismatch;
  /// Intermediate series worth reporting (the q-coordinate of theta-modular).
  std::vector<std::pair<std::string, UniSeries>> extras;

  bool passed() const { return !mismatch; }
};

/// Generating-function identities, each side built independently:
///   fran, sd-gf, duco, ducox, ramanujan-cubic, szego-binomial,
///   theta-modular, lewy-askey-binomial.
IdentityReport verify_named_identity(const std::string& name, int order, const BoxOptions& box_options = {});

std::vector<std::string> identity_names();

/// Generating function of a three-term recurrence with u_0 = 1 and u_1 given.
UniSeries recurrence_series(const PRecurrence& rec, const Rational& u1, int order);

}  // namespace diagonalis
