#include "diagonalis/geometry.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace diagonalis {

namespace {

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq{p, derivative(p)};
  while (!seq.back().is_zero()) {
    UniPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

long sign_changes(const std::vector<Rational>& signs) {
  long changes = 0;
  int last = 0;
  for (const auto& v : signs) {
    int s = sign(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

long variations_at(const std::vector<UniPoly>& seq, const Rational& x) {
  std::vector<Rational> v;
  v.reserve(seq.size());
  for (const auto& q : seq) v.push_back(q(x));
  return sign_changes(v);
}

// All real roots satisfy |x| < 1 + max |a_i / a_n|.
Rational cauchy_bound(const UniPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coefficient(i) / p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

struct Isolator {
  std::vector<IsolatingInterval> out;

  void run(const UniPoly& p, const Rational& lo, const Rational& hi) {
    if (p.degree() < 1) return;
    auto seq = sturm_sequence(p);
    recurse(p, seq, lo, hi);
  }

  void recurse(const UniPoly& p, const std::vector<UniPoly>& seq, const Rational& lo, const Rational& hi) {
    long n = variations_at(seq, lo) - variations_at(seq, hi);
    if (n == 0) return;
    if (n == 1) {
      if (p(hi) == 0)
        out.push_back({hi, hi});
      else
        out.push_back({lo, hi});
      return;
    }
    Rational mid = (lo + hi) / 2;
    if (p(mid) == 0) {
      out.push_back({mid, mid});
      UniPoly q = divmod(p, UniPoly{-mid, 1}).first;
      run(q, lo, mid);
      run(q, mid, hi);
      return;
    }
    recurse(p, seq, lo, mid);
    recurse(p, seq, mid, hi);
  }
};

}  // namespace

double IsolatingInterval::approx() const {
  Rational m = (lo + hi) / 2;
  return m.get_d();
}

long sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
  if (hi <= lo) return 0;
  UniPoly sf = squarefree_part(p);
  if (sf.degree() < 1) return 0;
  auto seq = sturm_sequence(sf);
  return variations_at(seq, lo) - variations_at(seq, hi);
}

std::vector<IsolatingInterval> sturm_isolate(const UniPoly& p, RootDomain domain) {
  if (p.is_zero()) throw std::invalid_argument("sturm_isolate: zero polynomial");
  UniPoly sf = squarefree_part(p);
  if (sf.degree() < 1) return {};
  const Rational bound = cauchy_bound(sf);
  Isolator iso;
  iso.run(sf, domain == RootDomain::positive ? Rational(0) : Rational(-bound), bound);
  std::sort(iso.out.begin(), iso.out.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });

  // An exact root found at a bisection point leaves its left neighbour as
  // (lo, r]; pull that neighbour's right end below r.
  for (std::size_t i = 0; i + 1 < iso.out.size(); ++i) {
    auto& iv = iso.out[i];
    const auto& next = iso.out[i + 1];
    if (iv.exact() || !next.exact() || iv.hi != next.lo) continue;
    while (iv.hi == next.lo) {
      Rational mid = (iv.lo + iv.hi) / 2;
      if (sturm_count(sf, iv.lo, mid) == 1)
        iv.hi = mid;
      else
        iv.lo = mid;
    }
  }

  // Multiplicity: 1 + number of successive gcds g_1 = gcd(p, p'), g_{k+1} = gcd(g_k, g_k') vanishing there.
  std::vector<UniPoly> gs;
  for (UniPoly g = gcd(p, derivative(p)); g.degree() >= 1; g = gcd(g, derivative(g))) gs.push_back(g);
  for (auto& iv : iso.out) {
    for (const auto& g : gs) {
      bool has = iv.exact() ? g(iv.lo) == 0 : sturm_count(g, iv.lo, iv.hi) > 0;
      if (!has) break;
      ++iv.multiplicity;
    }
  }
  return iso.out;
}

IsolatingInterval refine_root(const UniPoly& p, IsolatingInterval iv, const Rational& width) {
  if (width <= 0) throw std::invalid_argument("refine_root: width must be positive");
  UniPoly sf = squarefree_part(p);
  while (!iv.exact() && iv.hi - iv.lo > width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    if (sf(mid) == 0) {
      iv.lo = iv.hi = mid;
    } else if (sturm_count(sf, iv.lo, mid) == 1) {
      iv.hi = mid;
    } else {
      iv.lo = mid;
    }
  }
  return iv;
}

AlgebraicReal AlgebraicReal::exact(const Rational& r) {
  AlgebraicReal x;
  x.rational = r;
  x.minpoly = UniPoly{-r, 1};
  x.interval = {r, r};
  return x;
}

int AlgebraicReal::compare(const Rational& x) const {
  if (rational) return sign(*rational - x);
  IsolatingInterval iv = interval;
  // The root is irrational, so it never equals x and the loop terminates.
  while (true) {
    if (x <= iv.lo) return 1;
    if (x >= iv.hi) return -1;
    Rational mid = (iv.lo + iv.hi) / 2;
    if (sturm_count(minpoly, iv.lo, mid) == 1)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
}

double AlgebraicReal::approx() const {
  if (rational) return rational->get_d();
  return refine_root(minpoly, interval, make_rational(1, 1000000000000L)).approx();
}

std::string AlgebraicReal::to_string() const {
  if (rational) return diagonalis::to_string(*rational);
  std::ostringstream os;
  os << "root of " << diagonalis::to_string(minpoly, "b") << " in (" << diagonalis::to_string(interval.lo) << ", "
     << diagonalis::to_string(interval.hi) << "]";
  return os.str();
}

}  // namespace diagonalis
