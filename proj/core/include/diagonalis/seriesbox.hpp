#pragma once

#include "diagonalis/multipoly.hpp"
#include "diagonalis/ring.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace diagonalis {

enum class BoxStorage { full, symmetric };

enum class SymmetryMode {
  automatic,  // symmetric storage whenever the denominator is symmetric
  off,
  on,  // requires a symmetric denominator
};

struct BoxOptions {
  unsigned workers = 1;
  std::uint64_t max_entries = 100'000'000;
  SymmetryMode symmetry = SymmetryMode::automatic;
};

class MemoryLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

class NotExpandable : public std::domain_error {
 public:
  NotExpandable() : std::domain_error("not expandable at origin: constant term is not a unit") {}
};

namespace detail {

/// Ranks non-decreasing tuples 0 <= a_0 <= ... <= a_{d-1} <= N densely in
/// [0, C(N+d, d)) via the combinatorial number system on b_i = a_i + i.
class MultisetRanker {
 public:
  MultisetRanker() = default;
  MultisetRanker(std::size_t dim, unsigned bound) : dim_(dim) {
    const std::size_t top = bound + dim + 1;
    table_.assign(top * (dim + 1), 0);
    for (std::size_t n = 0; n < top; ++n) {
      at(n, 0) = 1;
      for (std::size_t k = 1; k <= dim && k <= n; ++k) at(n, k) = at(n - 1, k - 1) + (k <= n - 1 ? at(n - 1, k) : 0);
    }
  }
  std::uint64_t rank_sorted(const unsigned* a) const {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < dim_; ++i) r += at(a[i] + i, i + 1);
    return r;
  }

 private:
  std::uint64_t& at(std::size_t n, std::size_t k) { return table_[n * (dim_ + 1) + k]; }
  std::uint64_t at(std::size_t n, std::size_t k) const { return table_[n * (dim_ + 1) + k]; }
  std::size_t dim_ = 0;
  std::vector<std::uint64_t> table_;
};

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

inline std::uint64_t multiset_count(std::size_t dim, unsigned bound) {
  // C(N + d, d), computed incrementally; every prefix product is itself a binomial.
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= dim; ++i) {
    std::uint64_t next = checked_mul(r, bound + i);
    if (next == std::numeric_limits<std::uint64_t>::max()) return next;
    r = next / i;
  }
  return r;
}

}  // namespace detail

template <CoefficientRing R>
class CoeffBox;

template <CoefficientRing S>
CoeffBox<S> expand_reciprocal(const MultiPoly<S>& p, unsigned bound, const BoxOptions& options = {});

/// Dense Taylor coefficients u_n of 1/p on the box [0..N]^d. In symmetric
/// storage only non-decreasing multi-indices are kept; lookups sort first.
template <CoefficientRing R>
class CoeffBox {
 public:
  std::size_t dim() const { return denom_.dim(); }
  unsigned bound() const { return bound_; }
  BoxStorage storage() const { return storage_; }
  const MultiPoly<R>& denominator() const { return denom_; }
  std::size_t stored_entries() const { return values_.size(); }
  /// Layers 0..filled_layers()-1 (by total degree) are complete.
  unsigned filled_layers() const { return filled_layers_; }
  unsigned layer_count() const { return static_cast<unsigned>(dim()) * bound_ + 1; }

  bool contains(const ExponentVector& n) const {
    if (n.dim() != dim()) return false;
    return std::all_of(n.e.begin(), n.e.end(), [&](unsigned v) { return v <= bound_; });
  }

  /// Coefficient of x^n; throws std::out_of_range outside the box.
  const R& at(const ExponentVector& n) const {
    if (!contains(n)) throw std::out_of_range("coefficient index " + to_string(n) + " outside the box");
    return values_[slot(n.e.data())];
  }

  /// Stored multi-indices of one layer, in graded-lex order.
  const std::vector<ExponentVector>& layer(unsigned t) const { return layers_.at(t); }
  const R& stored_value(const ExponentVector& stored_index) const { return values_[slot(stored_index.e.data())]; }

  template <CoefficientRing S>
  friend CoeffBox<S> expand_reciprocal(const MultiPoly<S>& p, unsigned bound, const BoxOptions& options);
  template <CoefficientRing S>
  friend CoeffBox<S> make_box_from_entries(MultiPoly<S> p, unsigned bound, BoxStorage storage,
                                           std::vector<std::pair<ExponentVector, S>> entries);

 private:
  CoeffBox(MultiPoly<R> p, unsigned bound, BoxStorage storage) : denom_(std::move(p)), bound_(bound), storage_(storage) {
    const std::size_t d = denom_.dim();
    if (storage_ == BoxStorage::symmetric) ranker_ = detail::MultisetRanker(d, bound_);
    strides_.assign(d, 1);
    for (std::size_t j = d; j-- > 1;) strides_[j - 1] = strides_[j] * (bound_ + 1);
    build_layers();
  }

  std::uint64_t slot(const unsigned* n) const {
    const std::size_t d = dim();
    if (storage_ == BoxStorage::full) {
      std::uint64_t s = 0;
      for (std::size_t j = 0; j < d; ++j) s += n[j] * strides_[j];
      return s;
    }
    unsigned buf[16];
    std::vector<unsigned> heap;
    unsigned* sorted = buf;
    if (d > 16) {
      heap.resize(d);
      sorted = heap.data();
    }
    std::copy(n, n + d, sorted);
    std::sort(sorted, sorted + d);
    return ranker_.rank_sorted(sorted);
  }

  void build_layers() {
    const std::size_t d = dim();
    layers_.assign(layer_count(), {});
    ExponentVector n(d);
    // Odometer over stored indices; symmetric storage keeps non-decreasing ones.
    while (true) {
      layers_[n.total_degree()].push_back(n);
      std::size_t j = d;
      bool done = true;
      while (j-- > 0) {
        if (n[j] < bound_) {
          ++n[j];
          if (storage_ == BoxStorage::symmetric)
            for (std::size_t k = j + 1; k < d; ++k) n[k] = n[j];
          else
            for (std::size_t k = j + 1; k < d; ++k) n[k] = 0;
          done = false;
          break;
        }
      }
      if (done) break;
    }
    for (auto& l : layers_) std::sort(l.begin(), l.end(), GradedLexLess{});
  }

  MultiPoly<R> denom_;
  unsigned bound_;
  BoxStorage storage_;
  std::vector<std::uint64_t> strides_;
  detail::MultisetRanker ranker_;
  std::vector<std::vector<ExponentVector>> layers_;
  std::vector<R> values_;
  unsigned filled_layers_ = 0;
};

inline std::uint64_t box_entry_count(std::size_t dim, unsigned bound, BoxStorage storage) {
  if (storage == BoxStorage::symmetric) return detail::multiset_count(dim, bound);
  std::uint64_t r = 1;
  for (std::size_t j = 0; j < dim; ++j) r = detail::checked_mul(r, bound + 1ull);
  return r;
}

/// Taylor coefficients of 1/p on [0..N]^d from the convolution recurrence
/// c_0 u_n = [n = 0] - sum_{m != 0, m <= n} p_m u_{n-m}, one graded layer at a
/// time. Entries inside a layer depend only on earlier layers, so a layer is
/// split across options.workers threads.
template <CoefficientRing S>
CoeffBox<S> expand_reciprocal(const MultiPoly<S>& p, unsigned bound, const BoxOptions& options) {
  auto inv_c0 = RingTraits<S>::unit_inverse(p.constant_term());
  if (!inv_c0) throw NotExpandable();

  BoxStorage storage = BoxStorage::full;
  if (options.symmetry == SymmetryMode::on) {
    if (!is_symmetric(p)) throw std::invalid_argument("symmetric storage requested for a non-symmetric denominator");
    storage = BoxStorage::symmetric;
  } else if (options.symmetry == SymmetryMode::automatic && p.dim() > 1 && is_symmetric(p)) {
    storage = BoxStorage::symmetric;
  }
  const std::uint64_t entries = box_entry_count(p.dim(), bound, storage);
  if (entries > options.max_entries)
    throw MemoryLimitExceeded("box with " + std::to_string(entries) + " entries exceeds the limit of " +
                              std::to_string(options.max_entries));

  CoeffBox<S> box(p, bound, storage);
  box.values_.assign(entries, RingTraits<S>::zero());
  const std::size_t d = p.dim();

  struct Term {
    std::vector<unsigned> exp;
    S coeff;
  };
  std::vector<Term> terms;
  for (const auto& [m, c] : p.terms())
    if (!m.is_zero()) terms.push_back({m.e, c});

  auto compute = [&](const ExponentVector& n) {
    S acc = n.is_zero() ? RingTraits<S>::one() : RingTraits<S>::zero();
    std::vector<unsigned> diff(d);
    for (const auto& t : terms) {
      bool fits = true;
      for (std::size_t j = 0; j < d; ++j) {
        if (t.exp[j] > n[j]) {
          fits = false;
          break;
        }
        diff[j] = n[j] - t.exp[j];
      }
      if (!fits) continue;
      acc = acc - t.coeff * box.values_[box.slot(diff.data())];
    }
    box.values_[box.slot(n.e.data())] = acc * *inv_c0;
  };

  const unsigned workers = std::max(1u, options.workers);
  for (unsigned t = 0; t < box.layer_count(); ++t) {
    const auto& layer = box.layers_[t];
    if (workers == 1 || layer.size() < 2 * workers) {
      for (const auto& n : layer) compute(n);
    } else {
      std::vector<std::jthread> pool;
      const std::size_t chunk = (layer.size() + workers - 1) / workers;
      for (unsigned w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk, hi = std::min(layer.size(), lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
          for (std::size_t i = lo; i < hi; ++i) compute(layer[i]);
        });
      }
    }
    box.filled_layers_ = t + 1;
  }
  return box;
}

/// Rebuilds a box from stored entries (used by the cache reader). Every stored
/// index must be supplied exactly once.
template <CoefficientRing S>
CoeffBox<S> make_box_from_entries(MultiPoly<S> p, unsigned bound, BoxStorage storage,
                                  std::vector<std::pair<ExponentVector, S>> entries) {
  CoeffBox<S> box(std::move(p), bound, storage);
  const std::uint64_t count = box_entry_count(box.dim(), bound, storage);
  if (entries.size() != count)
    throw std::invalid_argument("box needs " + std::to_string(count) + " entries, got " + std::to_string(entries.size()));
  box.values_.assign(count, RingTraits<S>::zero());
  std::vector<char> seen(count, 0);
  for (auto& [n, v] : entries) {
    if (!box.contains(n)) throw std::invalid_argument("entry " + to_string(n) + " outside the box");
    if (storage == BoxStorage::symmetric && !std::is_sorted(n.e.begin(), n.e.end()))
      throw std::invalid_argument("symmetric box entry " + to_string(n) + " is not sorted");
    auto s = box.slot(n.e.data());
    if (seen[s]) throw std::invalid_argument("duplicate entry " + to_string(n));
    seen[s] = 1;
    box.values_[s] = std::move(v);
  }
  box.filled_layers_ = box.layer_count();
  return box;
}

template <CoefficientRing R>
const R& coefficient_at(const CoeffBox<R>& box, const ExponentVector& n) {
  return box.at(n);
}

namespace detail {

/// Scans layers in order and returns the graded-lex-first index whose
/// coefficient satisfies `bad`. In symmetric storage the graded-lex-first
/// member of an orbit is the non-increasing rearrangement.
template <CoefficientRing R, class Pred>
std::optional<std::pair<ExponentVector, R>> first_matching(const CoeffBox<R>& box, Pred bad) {
  for (unsigned t = 0; t < box.filled_layers(); ++t) {
    std::optional<ExponentVector> best;
    for (const auto& stored : box.layer(t)) {
      if (!bad(box.stored_value(stored))) continue;
      ExponentVector cand = stored;
      if (box.storage() == BoxStorage::symmetric) std::sort(cand.e.rbegin(), cand.e.rend());
      if (!best || GradedLexLess{}(cand, *best)) best = cand;
    }
    if (best) return std::make_pair(*best, box.at(*best));
  }
  return std::nullopt;
}

}  // namespace detail

/// First coefficient (graded-lex) that is <= 0 when strict, < 0 otherwise.
inline std::optional<std::pair<ExponentVector, Rational>> first_nonpositive(const CoeffBox<Rational>& box, bool strict) {
  return detail::first_matching(box, [strict](const Rational& v) { return strict ? v <= 0 : v < 0; });
}

/// True when q is a polynomial in lambda with nonnegative coefficients, at
/// least one of them positive.
inline bool is_positive_lambda_poly(const UniPoly& q) {
  if (q.is_zero()) return false;
  return std::all_of(q.coefficients().begin(), q.coefficients().end(), [](const Rational& c) { return c >= 0; });
}

/// First entry that is not a nonzero lambda-polynomial with nonnegative
/// coefficients.
inline std::optional<std::pair<ExponentVector, UniPoly>> lambda_coefficient_check(const CoeffBox<UniPoly>& box) {
  return detail::first_matching(box, [](const UniPoly& v) { return !is_positive_lambda_poly(v); });
}

}  // namespace diagonalis
