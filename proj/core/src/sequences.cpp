#include "diagonalis/sequences.hpp"

#include <stdexcept>

namespace diagonalis {

SequenceWindow scale_terms(const SequenceWindow& seq, const Rational& base) {
  SequenceWindow out = seq;
  for (long i = 0; i < out.size(); ++i) out.values[static_cast<std::size_t>(i)] *= pow(base, seq.start + i);
  return out;
}

namespace {

Integer sq(const Integer& z) { return z * z; }

SequenceWindow lewy_askey_values(long count) {
  SequenceWindow u{0, {1, 12}};
  if (count <= 2) {
    u.values.resize(static_cast<std::size_t>(std::max(count, 0L)));
  } else {
    u = recurrence_extend(recurrences::lewy_askey_u(), u, count - 1);
  }
  for (long n = 0; n < u.size(); ++n) u.values[static_cast<std::size_t>(n)] *= binomial(2 * n, n);
  return u;
}

}  // namespace

Rational binomial_oracle(const std::string& name, long n, const std::optional<Rational>& a) {
  if (n < 0) throw std::invalid_argument("oracle index must be >= 0");
  if (name == "franel") {
    Integer s = 0;
    for (long k = 0; k <= n; ++k) {
      Integer b = binomial_int(n, k);
      s += b * b * b;
    }
    return Rational(s);
  }
  if (name == "kzd") {
    Integer s = 0;
    for (long k = 0; k <= n; ++k) s += sq(binomial_int(n, k)) * sq(binomial_int(2 * k, n));
    return Rational(s);
  }
  if (name == "koornwinder") {
    Integer s = 0;
    for (long k = 0; k <= n; ++k) s += sq(binomial_int(2 * k, k)) * sq(binomial_int(2 * (n - k), n - k));
    return Rational(s);
  }
  if (name == "szego3-binomial") {
    Rational s = 0;
    for (long k = 0; k <= n; ++k) {
      Integer c = binomial_int(k, n - k);
      if (c == 0) continue;
      Integer f3 = factorial(3 * k);
      Integer fk = factorial(k);
      Rational term = pow(Rational(-27), n - k) * pow(Rational(2), 2 * k - n) * Rational(f3 / (fk * fk * fk)) * c;
      s += term;
    }
    return s;
  }
  if (name == "2var") {
    if (!a) throw std::invalid_argument("oracle '2var' needs parameter a");
    Rational s = 0;
    for (long k = 0; k <= n; ++k) {
      Integer fnk = factorial(n - k);
      Rational t(factorial(2 * n - k), factorial(k) * fnk * fnk);
      t.canonicalize();
      s += t * pow(Rational(-*a), k);
    }
    return s;
  }
  if (name == "lewy-askey") return lewy_askey_values(n + 1).values.back();
  throw std::invalid_argument("unknown oracle '" + name + "'");
}

SequenceWindow oracle_sequence(const std::string& name, long count, const std::optional<Rational>& a) {
  if (name == "lewy-askey") return lewy_askey_values(count);
  SequenceWindow out{0, {}};
  for (long n = 0; n < count; ++n) out.values.push_back(binomial_oracle(name, n, a));
  return out;
}

std::vector<std::string> oracle_names() {
  return {"franel", "kzd", "koornwinder", "szego3-binomial", "2var", "lewy-askey"};
}

SignScan sequence_sign_scan(const SequenceWindow& seq) {
  SignScan s;
  s.scanned = seq.size();
  for (long n = seq.start; n < seq.end(); ++n) {
    const Rational& v = seq.at(n);
    if (!s.first_nonpositive && v <= 0) s.first_nonpositive = n;
    if (!s.first_negative && v < 0) {
      s.first_negative = n;
      break;
    }
  }
  return s;
}

}  // namespace diagonalis
