#include "diagonalis/recurrence.hpp"

#include <algorithm>

namespace diagonalis {

PRecurrence::PRecurrence(std::vector<UniPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_.back().is_zero())
    throw std::invalid_argument("recurrence needs a nonzero leading coefficient p_r");

  Integer den_lcm = 1;
  for (const auto& p : coeffs_)
    for (const auto& c : p.coefficients()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  Integer content = 0;
  for (const auto& p : coeffs_)
    for (const auto& c : p.coefficients()) {
      Integer num = c.get_num() * (den_lcm / c.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
  Rational scale(den_lcm, content);
  scale.canonicalize();
  if (coeffs_.back().leading() < 0) scale = -scale;
  for (auto& p : coeffs_) p *= scale;
}

int PRecurrence::degree() const {
  int d = -1;
  for (const auto& p : coeffs_) d = std::max(d, p.degree());
  return d;
}

Rational PRecurrence::residual(const SequenceWindow& seq, long n) const {
  Rational acc = 0;
  for (int j = 0; j <= order(); ++j) acc += coeffs_[static_cast<std::size_t>(j)](Rational(n)) * seq.at(n + j);
  return acc;
}

std::string to_string(const PRecurrence& rec) {
  std::string out;
  for (int j = 0; j <= rec.order(); ++j) {
    if (rec.coefficient(j).is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(rec.coefficient(j), "n") + ")*u(n+" + std::to_string(j) + ")";
  }
  return out + " = 0";
}

std::optional<RecurrenceFailure> recurrence_check(const PRecurrence& rec, const SequenceWindow& seq) {
  if (seq.size() < rec.order() + 1)
    throw std::invalid_argument("window of " + std::to_string(seq.size()) + " terms is too short for an order-" +
                                std::to_string(rec.order()) + " recurrence");
  for (long n = seq.start; n + rec.order() < seq.end(); ++n) {
    Rational r = rec.residual(seq, n);
    if (r != 0) return RecurrenceFailure{n, r};
  }
  return std::nullopt;
}

SequenceWindow recurrence_extend(const PRecurrence& rec, const SequenceWindow& initial, long upto) {
  const int r = rec.order();
  if (initial.size() < r)
    throw std::invalid_argument("need " + std::to_string(r) + " initial terms, got " + std::to_string(initial.size()));
  SequenceWindow out = initial;
  while (out.end() <= upto) {
    const long n = out.end() - r;
    Rational lead = rec.coefficient(r)(Rational(n));
    if (lead == 0) throw RecurrenceBlocked(n + r);
    Rational acc = 0;
    for (int j = 0; j < r; ++j) acc += rec.coefficient(j)(Rational(n)) * out.at(n + j);
    out.values.push_back(-acc / lead);
  }
  return out;
}

namespace {

/// Exact reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pick = row;
    while (pick < m.size() && m[pick][col] == 0) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    Rational inv = 1 / m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

long guess_terms_required(int max_order, int max_degree) {
  return static_cast<long>(max_order + 1) * (max_degree + 1) + max_order + kGuessSafetyMargin;
}

std::optional<PRecurrence> recurrence_guess(const SequenceWindow& seq, int max_order, int max_degree) {
  if (max_order < 1 || max_degree < 0) throw std::invalid_argument("recurrence_guess: need max_order >= 1, max_degree >= 0");
  const long need = guess_terms_required(max_order, max_degree);
  if (seq.size() < need) throw InsufficientData(seq.size(), need);

  for (int r = 1; r <= max_order; ++r)
    for (int D = 0; D <= max_degree; ++D) {
      const std::size_t unknowns = static_cast<std::size_t>(r + 1) * static_cast<std::size_t>(D + 1);
      const long equations = seq.size() - r;
      if (equations < static_cast<long>(unknowns) + kGuessSafetyMargin) continue;

      // Unknown (j, i) is the coefficient of n^i in p_j; column j*(D+1)+i.
      std::vector<std::vector<Rational>> m;
      m.reserve(static_cast<std::size_t>(equations));
      for (long n = seq.start; n + r < seq.end(); ++n) {
        std::vector<Rational> row(unknowns);
        for (int j = 0; j <= r; ++j) {
          Rational pw = 1;
          for (int i = 0; i <= D; ++i) {
            row[static_cast<std::size_t>(j * (D + 1) + i)] = pw * seq.at(n + j);
            pw *= n;
          }
        }
        m.push_back(std::move(row));
      }
      auto pivots = rref(m, unknowns);
      if (pivots.size() == unknowns) continue;

      // Nullspace vector from the first free column.
      std::vector<bool> is_pivot(unknowns, false);
      for (auto c : pivots) is_pivot[c] = true;
      std::size_t free_col = 0;
      while (is_pivot[free_col]) ++free_col;
      std::vector<Rational> v(unknowns);
      v[free_col] = 1;
      for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][free_col];

      std::vector<UniPoly> coeffs;
      for (int j = 0; j <= r; ++j)
        coeffs.emplace_back(std::vector<Rational>(v.begin() + j * (D + 1), v.begin() + (j + 1) * (D + 1)));
      if (coeffs.back().is_zero()) continue;
      PRecurrence rec(std::move(coeffs));
      if (!recurrence_check(rec, seq)) return rec;
    }
  return std::nullopt;
}

UniPoly characteristic_polynomial(const PRecurrence& rec) {
  const int D = rec.degree();
  std::vector<Rational> c;
  for (const auto& p : rec.coefficients()) c.push_back(p.coefficient(D));
  return primitive_integer(UniPoly(std::move(c)));
}

namespace recurrences {

PRecurrence from_three_term(const UniPoly& lead, const UniPoly& mid, const UniPoly& tail) {
  // lead(n) u_{n+1} - mid(n) u_n - tail(n) u_{n-1} = 0, then n -> n+1.
  return PRecurrence({-shift(tail, 1), -shift(mid, 1), shift(lead, 1)});
}

namespace {
UniPoly poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly(std::move(v));
}
}  // namespace

PRecurrence franel() { return from_three_term(poly({1, 2, 1}), poly({2, 7, 7}), poly({0, 0, 8})); }

PRecurrence szego3() {
  // -81(3n-1)(3n+1) = -81(9n^2 - 1)
  return from_three_term(poly({2, 4, 2}), poly({24, 81, 81}), poly({81, 0, -729}));
}

PRecurrence lewy_askey_u() {
  // 4(28n^2+28n+9) and -64(16n^2 - 1)
  return from_three_term(poly({3, 6, 3}), poly({36, 112, 112}), poly({64, 0, -1024}));
}

PRecurrence kzd() {
  // 4(2n+1)(3n^2+3n+1) = 24n^3 + 36n^2 + 20n + 4
  return from_three_term(poly({1, 3, 3, 1}), poly({4, 20, 36, 24}), poly({0, 0, 0, -16}));
}

PRecurrence two_variable(const Rational& a) {
  Rational two_minus_a = 2 - a;
  UniPoly mid{two_minus_a, Rational(2 * two_minus_a)};
  UniPoly tail{Rational(0), Rational(-a * a)};
  return from_three_term(poly({1, 1}), mid, tail);
}

PRecurrence by_name(const std::string& name, const std::optional<Rational>& a) {
  if (name == "franel") return franel();
  if (name == "szego3" || name == "sd") return szego3();
  if (name == "lewy-askey" || name == "lewy-askey-u") return lewy_askey_u();
  if (name == "kzd" || name == "KZ-D") return kzd();
  if (name == "2var") {
    if (!a) throw std::invalid_argument("recurrence '2var' needs parameter a");
    return two_variable(*a);
  }
  throw std::invalid_argument("unknown builtin recurrence '" + name + "'");
}

}  // namespace recurrences

}  // namespace diagonalis
