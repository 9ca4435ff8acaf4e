#pragma once

#include "diagonalis/rational.hpp"
#include "diagonalis/ring.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace diagonalis {

/// Multi-index (n_1, ..., n_d) of the monomial x_1^{n_1} ... x_d^{n_d}.
struct ExponentVector {
  std::vector<unsigned> e;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t dim) : e(dim, 0) {}
  ExponentVector(std::initializer_list<unsigned> v) : e(v) {}
  explicit ExponentVector(std::vector<unsigned> v) : e(std::move(v)) {}

  std::size_t dim() const { return e.size(); }
  unsigned operator[](std::size_t i) const { return e[i]; }
  unsigned& operator[](std::size_t i) { return e[i]; }
  unsigned total_degree() const { return std::accumulate(e.begin(), e.end(), 0u); }
  bool is_zero() const {
    return std::all_of(e.begin(), e.end(), [](unsigned v) { return v == 0; });
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
};

/// Graded lexicographic order: lower total degree first; within a degree the
/// lexicographically larger vector comes first, so x precedes y precedes z.
struct GradedLexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(b.e.begin(), b.e.end(), a.e.begin(), a.e.end());
  }
};

std::string to_string(const ExponentVector& n);

/// Sparse polynomial in d variables over a coefficient ring; zero
/// coefficients are never stored.
template <CoefficientRing R>
class MultiPoly {
 public:
  using Terms = std::map<ExponentVector, R, GradedLexLess>;

  explicit MultiPoly(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw std::invalid_argument("MultiPoly needs at least one variable");
  }

  static MultiPoly constant(std::size_t dim, const R& c) {
    MultiPoly p(dim);
    p.add_term(ExponentVector(dim), c);
    return p;
  }

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  R coefficient(const ExponentVector& n) const {
    check_dim(n);
    auto it = terms_.find(n);
    return it == terms_.end() ? RingTraits<R>::zero() : it->second;
  }
  R constant_term() const { return coefficient(ExponentVector(dim_)); }

  void add_term(const ExponentVector& n, const R& c) {
    check_dim(n);
    if (RingTraits<R>::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(n, c);
    if (!inserted) {
      it->second = it->second + c;
      if (RingTraits<R>::is_zero(it->second)) terms_.erase(it);
    }
  }

  R evaluate(std::span<const R> point) const {
    if (point.size() != dim_) throw std::invalid_argument("evaluate: point has wrong dimension");
    R acc = RingTraits<R>::zero();
    for (const auto& [n, c] : terms_) {
      R t = c;
      for (std::size_t j = 0; j < dim_; ++j)
        for (unsigned k = 0; k < n[j]; ++k) t = t * point[j];
      acc = acc + t;
    }
    return acc;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    same_dim(o);
    for (const auto& [n, c] : o.terms_) add_term(n, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    same_dim(o);
    for (const auto& [n, c] : o.terms_) add_term(n, RingTraits<R>::zero() - c);
    return *this;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.same_dim(b);
    MultiPoly out(a.dim_);
    for (const auto& [na, ca] : a.terms_)
      for (const auto& [nb, cb] : b.terms_) {
        ExponentVector n(a.dim_);
        for (std::size_t j = 0; j < a.dim_; ++j) n[j] = na[j] + nb[j];
        out.add_term(n, ca * cb);
      }
    return out;
  }
  friend MultiPoly operator*(const R& s, const MultiPoly& p) {
    MultiPoly out(p.dim_);
    for (const auto& [n, c] : p.terms_) out.add_term(n, s * c);
    return out;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  void check_dim(const ExponentVector& n) const {
    if (n.dim() != dim_) throw std::invalid_argument("exponent vector has wrong dimension");
  }
  void same_dim(const MultiPoly& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("MultiPoly dimension mismatch");
  }

  std::size_t dim_;
  Terms terms_;
};

/// e_k(x_1, ..., x_d): every squarefree monomial of degree k with coefficient 1.
template <CoefficientRing R = Rational>
MultiPoly<R> elementary_symmetric(std::size_t d, std::size_t k) {
  if (d == 0) throw std::invalid_argument("elementary_symmetric: d must be >= 1");
  if (k > d) throw std::out_of_range("elementary_symmetric: k must satisfy 0 <= k <= d");
  MultiPoly<R> p(d);
  std::vector<unsigned> mask(d, 0);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), 1u);
  // prev_permutation walks every arrangement of k ones exactly once.
  do {
    p.add_term(ExponentVector(mask), RingTraits<R>::one());
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return p;
}

/// sum_k c_k e_k(x_1, ..., x_d) with d = c.size() - 1.
template <CoefficientRing R>
MultiPoly<R> symmetric_denominator(std::span<const R> c) {
  if (c.size() < 2) throw std::invalid_argument("symmetric_denominator needs d >= 1 (at least two coefficients)");
  const std::size_t d = c.size() - 1;
  MultiPoly<R> p(d);
  for (std::size_t k = 0; k <= d; ++k) {
    if (RingTraits<R>::is_zero(c[k])) continue;
    const MultiPoly<R> e = elementary_symmetric<R>(d, k);
    for (const auto& [n, one] : e.terms()) p.add_term(n, c[k] * one);
  }
  return p;
}

/// x_j <- s_j x_j.
template <CoefficientRing R>
MultiPoly<R> scale_variables(const MultiPoly<R>& p, std::span<const Rational> s) {
  if (s.size() != p.dim()) throw std::invalid_argument("scale_variables: need one factor per variable");
  MultiPoly<R> out(p.dim());
  for (const auto& [n, c] : p.terms()) {
    Rational f = 1;
    for (std::size_t j = 0; j < p.dim(); ++j) f *= pow(s[j], static_cast<long>(n[j]));
    out.add_term(n, c * RingTraits<R>::from_rational(f));
  }
  return out;
}

/// Sets x_j = 0 and drops that variable.
template <CoefficientRing R>
MultiPoly<R> substitute_zero(const MultiPoly<R>& p, std::size_t j) {
  if (j >= p.dim()) throw std::out_of_range("substitute_zero: variable index out of range");
  if (p.dim() == 1) throw std::invalid_argument("substitute_zero: cannot drop the only variable");
  MultiPoly<R> out(p.dim() - 1);
  for (const auto& [n, c] : p.terms()) {
    if (n[j] != 0) continue;
    std::vector<unsigned> e = n.e;
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(j));
    out.add_term(ExponentVector(std::move(e)), c);
  }
  return out;
}

template <CoefficientRing R>
MultiPoly<R> partial_derivative(const MultiPoly<R>& p, std::size_t j) {
  if (j >= p.dim()) throw std::out_of_range("partial_derivative: variable index out of range");
  MultiPoly<R> out(p.dim());
  for (const auto& [n, c] : p.terms()) {
    if (n[j] == 0) continue;
    ExponentVector m = n;
    m[j] -= 1;
    out.add_term(m, c * RingTraits<R>::from_rational(Rational(n[j])));
  }
  return out;
}

/// True when p is invariant under every permutation of its variables.
/// Adjacent transpositions generate the symmetric group, so checking those
/// suffices.
template <CoefficientRing R>
bool is_symmetric(const MultiPoly<R>& p) {
  for (const auto& [n, c] : p.terms())
    for (std::size_t j = 0; j + 1 < p.dim(); ++j) {
      ExponentVector m = n;
      std::swap(m[j], m[j + 1]);
      if (!(p.coefficient(m) == c)) return false;
    }
  return true;
}

}  // namespace diagonalis
