#pragma once

#include "diagonalis/rational.hpp"
#include "diagonalis/unipoly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace diagonalis {

/// Contiguous values u_start, u_{start+1}, ...
struct SequenceWindow {
  long start = 0;
  std::vector<Rational> values;

  long size() const { return static_cast<long>(values.size()); }
  /// One past the last index.
  long end() const { return start + size(); }
  const Rational& at(long n) const { return values.at(static_cast<std::size_t>(n - start)); }
  friend bool operator==(const SequenceWindow&, const SequenceWindow&) = default;
};

/// Holonomic recurrence sum_{j=0}^{r} p_j(n) u_{n+j} = 0. The coefficient
/// list is scaled on construction to coprime integers with p_r having a
/// positive leading coefficient.
class PRecurrence {
 public:
  explicit PRecurrence(std::vector<UniPoly> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Largest degree in n among the coefficients.
  int degree() const;
  const std::vector<UniPoly>& coefficients() const { return coeffs_; }
  const UniPoly& coefficient(int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }

  /// sum_j p_j(n) u_{n+j}; the window must cover n..n+order.
  Rational residual(const SequenceWindow& seq, long n) const;

  friend bool operator==(const PRecurrence&, const PRecurrence&) = default;

 private:
  std::vector<UniPoly> coeffs_;
};

std::string to_string(const PRecurrence& rec);

struct RecurrenceFailure {
  long index;
  Rational residual;
};

/// First n (ascending) at which the recurrence fails on the window; nullopt
/// when it holds wherever it can be checked. Throws std::invalid_argument if
/// the window has fewer than order+1 terms.
std::optional<RecurrenceFailure> recurrence_check(const PRecurrence& rec, const SequenceWindow& seq);

class RecurrenceBlocked : public std::domain_error {
 public:
  explicit RecurrenceBlocked(long index)
      : std::domain_error("leading coefficient vanishes; cannot determine u_" + std::to_string(index)),
        index_(index) {}
  long index() const { return index_; }

 private:
  long index_;
};

/// Extends `initial` forward through index `upto` by solving for u_{n+r}.
/// Returns `initial` unchanged when it already reaches `upto`.
SequenceWindow recurrence_extend(const PRecurrence& rec, const SequenceWindow& initial, long upto);

class InsufficientData : public std::invalid_argument {
 public:
  InsufficientData(long have, long need)
      : std::invalid_argument("recurrence guessing needs >= " + std::to_string(need) + " terms, got " +
                              std::to_string(have)),
        need_(need) {}
  long need() const { return need_; }

 private:
  long need_;
};

/// Extra equations demanded beyond the ansatz unknown count.
inline constexpr long kGuessSafetyMargin = 5;

/// Terms needed to search up to (max_order, max_degree).
long guess_terms_required(int max_order, int max_degree);

/// Smallest (order, then degree) recurrence annihilating the data, found as
/// an exact nullspace vector of the ansatz system.
std::optional<PRecurrence> recurrence_guess(const SequenceWindow& seq, int max_order, int max_degree);

/// sum_j [n^D] p_j(n) x^j with D the largest coefficient degree, scaled to a
/// primitive integer polynomial.
UniPoly characteristic_polynomial(const PRecurrence& rec);

namespace recurrences {

/// (n+1)^2 a_{n+1} = (7n^2+7n+2) a_n + 8n^2 a_{n-1}.
PRecurrence franel();
/// 2(n+1)^2 s_{n+1} = 3(27n^2+27n+8) s_n - 81(3n-1)(3n+1) s_{n-1}.
PRecurrence szego3();
/// 3(n+1)^2 u_{n+1} = 4(28n^2+28n+9) u_n - 64(4n-1)(4n+1) u_{n-1}.
PRecurrence lewy_askey_u();
/// (n+1)^3 d_{n+1} - 4(2n+1)(3n^2+3n+1) d_n + 16n^3 d_{n-1} = 0.
PRecurrence kzd();
/// (n+1) u_{n+1} = (2-a)(2n+1) u_n - a^2 n u_{n-1}.
PRecurrence two_variable(const Rational& a);

/// Catalog lookup: "franel", "szego3", "lewy-askey", "kzd", "2var" (needs a).
PRecurrence by_name(const std::string& name, const std::optional<Rational>& a = std::nullopt);

/// Builds the homogeneous form from the three-term shape
/// lead(n) u_{n+1} = mid(n) u_n + tail(n) u_{n-1}, re-indexed by n -> n+1.
PRecurrence from_three_term(const UniPoly& lead, const UniPoly& mid, const UniPoly& tail);

}  // namespace recurrences

}  // namespace diagonalis
