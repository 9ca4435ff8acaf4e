#include "diagonalis/uniseries.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace diagonalis {

UniSeries::UniSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least the constant coefficient");
}

UniSeries UniSeries::zero(int order) {
  if (order < 0) throw std::invalid_argument("series order must be >= 0");
  return UniSeries(std::vector<Rational>(static_cast<std::size_t>(order) + 1));
}

UniSeries UniSeries::constant(const Rational& c, int order) {
  UniSeries s = zero(order);
  s.coeffs_[0] = c;
  return s;
}

UniSeries UniSeries::variable(int order) {
  if (order < 1) throw std::invalid_argument("the series z needs order >= 1");
  UniSeries s = zero(order);
  s.coeffs_[1] = 1;
  return s;
}

UniSeries UniSeries::from_poly(const UniPoly& p, int order) {
  UniSeries s = zero(order);
  for (int i = 0; i <= std::min(order, p.degree()); ++i) s.coeffs_[static_cast<std::size_t>(i)] = p.coefficient(i);
  return s;
}

std::optional<int> UniSeries::valuation() const {
  for (int i = 0; i <= order(); ++i)
    if (coeffs_[static_cast<std::size_t>(i)] != 0) return i;
  return std::nullopt;
}

UniSeries UniSeries::truncate(int new_order) const {
  if (new_order < 0 || new_order > order()) throw std::invalid_argument("truncate: order out of range");
  return UniSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

UniSeries UniSeries::scale_argument(const Rational& c) const {
  UniSeries out = *this;
  Rational f = 1;
  for (auto& x : out.coeffs_) {
    x *= f;
    f *= c;
  }
  return out;
}

UniSeries operator+(const UniSeries& f, const UniSeries& g) {
  UniSeries out = UniSeries::zero(std::min(f.order(), g.order()));
  for (int i = 0; i <= out.order(); ++i) out.coeffs_[static_cast<std::size_t>(i)] = f[i] + g[i];
  return out;
}

UniSeries operator-(const UniSeries& f, const UniSeries& g) {
  UniSeries out = UniSeries::zero(std::min(f.order(), g.order()));
  for (int i = 0; i <= out.order(); ++i) out.coeffs_[static_cast<std::size_t>(i)] = f[i] - g[i];
  return out;
}

UniSeries operator*(const UniSeries& f, const UniSeries& g) {
  const int m = std::min(f.order(), g.order());
  UniSeries out = UniSeries::zero(m);
  for (int i = 0; i <= m; ++i) {
    if (f[i] == 0) continue;
    for (int j = 0; i + j <= m; ++j) out.coeffs_[static_cast<std::size_t>(i + j)] += f[i] * g[j];
  }
  return out;
}

UniSeries operator/(const UniSeries& f, const UniSeries& g) {
  if (g[0] == 0) throw std::domain_error("series division by a series with zero constant term");
  const int m = std::min(f.order(), g.order());
  UniSeries out = UniSeries::zero(m);
  const Rational inv = 1 / g[0];
  for (int n = 0; n <= m; ++n) {
    Rational acc = f[n];
    for (int k = 1; k <= n; ++k) acc -= g[k] * out[n - k];
    out.coeffs_[static_cast<std::size_t>(n)] = acc * inv;
  }
  return out;
}

UniSeries operator*(const Rational& c, const UniSeries& f) {
  UniSeries out = f;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

UniSeries hypergeometric_2F1(const Rational& a, const Rational& b, const Rational& c, int order) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
  coeffs[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Rational den = Rational(n) * (c + n - 1);
    if (den == 0) throw std::domain_error("2F1: lower parameter hits a non-positive integer within the order");
    coeffs[static_cast<std::size_t>(n)] = coeffs[static_cast<std::size_t>(n - 1)] * (a + n - 1) * (b + n - 1) / den;
  }
  return UniSeries(std::move(coeffs));
}

UniSeries series_compose(const UniSeries& f, const UniSeries& g) {
  if (g[0] != 0) throw std::domain_error("compose: inner series must have zero constant term");
  int order = g.order();
  if (auto v = g.valuation()) order = std::min(order, (f.order() + 1) * *v - 1);
  // Horner: f_M, then acc * g + f_i.
  UniSeries gt = g.truncate(order);
  UniSeries acc = UniSeries::constant(f[f.order()], order);
  for (int i = f.order() - 1; i >= 0; --i) acc = acc * gt + UniSeries::constant(f[i], order);
  return acc;
}

UniSeries series_power(const UniSeries& f, const Rational& r) {
  if (f[0] != 1) throw std::domain_error("power: series must have constant term 1");
  const int m = f.order();
  std::vector<Rational> g(static_cast<std::size_t>(m) + 1);
  g[0] = 1;
  // n g_n = sum_{k=1}^{n} ((r+1)k - n) f_k g_{n-k}
  for (int n = 1; n <= m; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) {
      if (f[k] == 0) continue;
      acc += ((r + 1) * k - n) * f[k] * g[static_cast<std::size_t>(n - k)];
    }
    g[static_cast<std::size_t>(n)] = acc / n;
  }
  return UniSeries(std::move(g));
}

UniSeries series_exp(const UniSeries& f) {
  if (f[0] != 0) throw std::domain_error("exp: series must have zero constant term");
  const int m = f.order();
  std::vector<Rational> g(static_cast<std::size_t>(m) + 1);
  g[0] = 1;
  for (int n = 1; n <= m; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) acc += Rational(k) * f[k] * g[static_cast<std::size_t>(n - k)];
    g[static_cast<std::size_t>(n)] = acc / n;
  }
  return UniSeries(std::move(g));
}

UniSeries series_log(const UniSeries& f) {
  if (f[0] != 1) throw std::domain_error("log: series must have constant term 1");
  const int m = f.order();
  std::vector<Rational> g(static_cast<std::size_t>(m) + 1);
  // f g' = f'  =>  n g_n = n f_n - sum_{k=1}^{n-1} k g_k f_{n-k}
  for (int n = 1; n <= m; ++n) {
    Rational acc = Rational(n) * f[n];
    for (int k = 1; k < n; ++k) acc -= Rational(k) * g[static_cast<std::size_t>(k)] * f[n - k];
    g[static_cast<std::size_t>(n)] = acc / n;
  }
  return UniSeries(std::move(g));
}

UniSeries series_reversion(const UniSeries& f) {
  if (f[0] != 0) throw std::domain_error("reversion: series must have zero constant term");
  if (f.order() < 1 || f[1] == 0) throw std::domain_error("reversion: linear coefficient must be nonzero");
  const int m = f.order();
  UniSeries g = UniSeries::zero(m);
  std::vector<Rational> gc(static_cast<std::size_t>(m) + 1);
  gc[1] = 1 / f[1];
  // [q^n] f(g) = f_1 g_n + (terms in g_1..g_{n-1}); solve for g_n.
  for (int n = 2; n <= m; ++n) {
    UniSeries partial(std::vector<Rational>(gc.begin(), gc.begin() + n + 1));
    Rational rest = series_compose(f.truncate(n), partial)[n];
    gc[static_cast<std::size_t>(n)] = -rest / f[1];
  }
  return UniSeries(std::move(gc));
}

UniSeries theta_hexagonal(int order) {
  if (order < 0) throw std::invalid_argument("theta order must be >= 0");
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  // n^2 + nm + m^2 = (n + m/2)^2 + 3m^2/4 >= 3 max(|n|,|m|)^2 / 4.
  const long r = static_cast<long>(std::floor(std::sqrt(4.0 * order / 3.0))) + 1;
  for (long n = -r; n <= r; ++n)
    for (long m = -r; m <= r; ++m) {
      long q = n * n + n * m + m * m;
      if (q <= order) c[static_cast<std::size_t>(q)] += 1;
    }
  return UniSeries(std::move(c));
}

std::optional<SeriesMismatch> verify_series_identity(const UniSeries& lhs, const UniSeries& rhs) {
  const int m = std::min(lhs.order(), rhs.order());
  for (int i = 0; i <= m; ++i)
    if (lhs[i] != rhs[i]) return SeriesMismatch{i, lhs[i], rhs[i]};
  return std::nullopt;
}

UniSeries series_from_sequence(const SequenceWindow& seq, int order) {
  if (seq.start != 0) throw std::invalid_argument("generating function needs a window starting at index 0");
  if (seq.size() < order + 1) throw std::invalid_argument("sequence too short for the requested order");
  return UniSeries(std::vector<Rational>(seq.values.begin(), seq.values.begin() + order + 1));
}

LogSolution recurrence_to_frobenius(const PRecurrence& rec, int order) {
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  const int r = rec.order();
  // L = sum_k z^k Q_k(theta) with Q_k(t) = p_{r-k}(t - (r-k)).
  std::vector<UniPoly> q, dq;
  for (int k = 0; k <= r; ++k) {
    q.push_back(shift(rec.coefficient(r - k), Rational(-(r - k))));
    dq.push_back(derivative(q.back()));
  }
  if (q[0](0) != 0 || dq[0](0) != 0)
    throw NoLogSolution("no log solution at origin: indicial polynomial " + to_string(q[0], "t") +
                        " lacks a double root at 0");
  for (int n = 1; n <= order; ++n)
    if (q[0](Rational(n)) == 0)
      throw NoLogSolution("no log solution at origin: indicial polynomial vanishes at " + std::to_string(n));

  const std::size_t len = static_cast<std::size_t>(order) + 1;
  std::vector<Rational> u(len), g(len);
  u[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= std::min(r, n); ++k) acc += q[static_cast<std::size_t>(k)](Rational(n - k)) * u[static_cast<std::size_t>(n - k)];
    u[static_cast<std::size_t>(n)] = -acc / q[0](Rational(n));
  }
  // Q(theta)(f log z) = (Q(theta) f) log z + Q'(theta) f, so
  // L g = -sum_k z^k Q_k'(theta) y0.
  for (int n = 1; n <= order; ++n) {
    Rational acc = 0;
    for (int k = 1; k <= std::min(r, n); ++k) acc += q[static_cast<std::size_t>(k)](Rational(n - k)) * g[static_cast<std::size_t>(n - k)];
    for (int k = 0; k <= std::min(r, n); ++k) acc += dq[static_cast<std::size_t>(k)](Rational(n - k)) * u[static_cast<std::size_t>(n - k)];
    g[static_cast<std::size_t>(n)] = -acc / q[0](Rational(n));
  }
  return {UniSeries(std::move(u)), UniSeries(std::move(g))};
}

UniSeries q_coordinate(const LogSolution& sol) {
  UniSeries e = series_exp(sol.log_part / sol.plain);
  std::vector<Rational> c(static_cast<std::size_t>(e.order()) + 2);
  for (int i = 0; i <= e.order(); ++i) c[static_cast<std::size_t>(i) + 1] = e[i];
  return UniSeries(std::move(c));
}

}  // namespace diagonalis
