#pragma once

#include "diagonalis/rational.hpp"
#include "diagonalis/recurrence.hpp"
#include "diagonalis/seriesbox.hpp"

#include <optional>
#include <string>
#include <vector>

namespace diagonalis {

/// u_{n,...,n} for n = 0..N.
template <CoefficientRing R>
std::vector<R> extract_diagonal_values(const CoeffBox<R>& box) {
  std::vector<R> out;
  for (unsigned n = 0; n <= box.bound(); ++n) {
    ExponentVector idx(box.dim());
    std::fill(idx.e.begin(), idx.e.end(), n);
    out.push_back(box.at(idx));
  }
  return out;
}

inline SequenceWindow extract_diagonal(const CoeffBox<Rational>& box) { return {0, extract_diagonal_values(box)}; }

/// Multiplies term n by base^n (e.g. the 9^n normalization of the Lewy-Askey
/// diagonal).
SequenceWindow scale_terms(const SequenceWindow& seq, const Rational& base);

/// Closed-form diagonal sums:
///   franel           sum_k C(n,k)^3
///   kzd              sum_k C(n,k)^2 C(2k,n)^2
///   koornwinder      sum_k C(2k,k)^2 C(2(n-k),n-k)^2
///   szego3-binomial  sum_k (-27)^{n-k} 2^{2k-n} (3k)!/k!^3 C(k,n-k)
///   2var             sum_k (2n-k)!/(k!(n-k)!^2) (-a)^k        (needs a)
///   lewy-askey       C(2n,n) u_n, u_n from the three-term recurrence
Rational binomial_oracle(const std::string& name, long n, const std::optional<Rational>& a = std::nullopt);

/// Oracle values for n = 0..count-1.
SequenceWindow oracle_sequence(const std::string& name, long count, const std::optional<Rational>& a = std::nullopt);

std::vector<std::string> oracle_names();

struct SignScan {
  std::optional<long> first_nonpositive;
  std::optional<long> first_negative;
  long scanned = 0;
};

SignScan sequence_sign_scan(const SequenceWindow& seq);

}  // namespace diagonalis
