#include "geonet/exact.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "geonet/errors.hpp"

namespace geonet {

namespace {

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    constexpr unsigned long kLimit = 100000;
    std::vector<bool> composite(kLimit + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Brent's variant of Pollard rho. n is odd, composite, not a perfect power of
// a small prime.
Integer pollard_brent(const Integer& n) {
  for (unsigned long seed = 1;; ++seed) {
    Integer y = 2, c = seed, m = 64, g = 1, r = 1, q = 1, x, ys;
    auto f = [&](const Integer& v) {
      Integer out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    while (g == 1) {
      x = y;
      for (Integer i = 0; i < r; ++i) y = f(y);
      Integer k = 0;
      while (k < r && g == 1) {
        ys = y;
        Integer bound = std::min<Integer>(m, r - k);
        for (Integer i = 0; i < bound; ++i) {
          y = f(y);
          Integer diff = abs(x - y);
          q = (q * diff) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(Integer n, std::map<Integer, unsigned>& out) {
  if (n < 0) n = -n;
  for (unsigned long p : small_primes()) {
    if (n == 1) return;
    if (Integer(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    std::map<Integer, unsigned> half;
    factor_into(root, half);
    for (const auto& [p, e] : half) out[p] += 2 * e;
    return;
  }
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
    ++out[n];
    return;
  }
  Integer d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw ArithmeticError("zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::vector<Integer> prime_factors(const Integer& n) {
  if (n == 0) throw ArithmeticError("prime_factors of zero");
  std::map<Integer, unsigned> f;
  factor_into(n, f);
  std::vector<Integer> out;
  for (const auto& kv : f) out.push_back(kv.first);
  return out;
}

std::pair<Integer, Integer> split_square(const Integer& n) {
  if (n <= 0) throw ArithmeticError("split_square needs a positive integer");
  std::map<Integer, unsigned> f;
  factor_into(n, f);
  Integer root = 1, free = 1;
  for (const auto& [p, e] : f) {
    for (unsigned i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 == 1) free *= p;
  }
  return {root, free};
}

Surd::Surd(long value) : Surd(Rational(value)) {}

Surd::Surd(const Rational& value) {
  if (value != 0) terms_.emplace(Integer(1), value);
}

Surd Surd::radical(const Integer& radicand, const Rational& coeff) {
  if (radicand <= 0) throw ArithmeticError("radicand must be positive");
  auto [root, free] = split_square(radicand);
  Surd out;
  out.add_term(free, coeff * Rational(root));
  return out;
}

Surd Surd::sqrt_of(const Rational& value) {
  if (value < 0) throw ArithmeticError("square root of a negative rational");
  if (value == 0) return Surd();
  Rational q = value;
  q.canonicalize();
  Integer prod = q.get_num() * q.get_den();
  return radical(prod, Rational(1, 1) / Rational(q.get_den()));
}

void Surd::add_term(const Integer& radicand, const Rational& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(radicand);
  if (it == terms_.end()) {
    terms_.emplace(radicand, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

bool Surd::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational Surd::to_rational() const {
  if (!is_rational()) throw ArithmeticError("not rational: " + str());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

double Surd::to_double() const {
  long double acc = 0;
  for (const auto& [s, q] : terms_) {
    long double root = s == 1 ? 1.0L : std::sqrt(static_cast<long double>(s.get_d()));
    acc += static_cast<long double>(q.get_d()) * root;
  }
  return static_cast<double>(acc);
}

int Surd::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return sgn(terms_.begin()->second);
  long double acc = 0, scale = 0;
  for (const auto& [s, q] : terms_) {
    long double v = static_cast<long double>(q.get_d()) *
                    std::sqrt(static_cast<long double>(s.get_d()));
    acc += v;
    scale += std::fabs(v);
  }
  if (std::fabs(acc) > 1e-12L * scale) return acc > 0 ? 1 : -1;
  // Near cancellation; a nonzero element is never exactly cancelled, so
  // enough precision always settles it.
  for (unsigned long bits = 512; bits <= 16384; bits *= 2) {
    mpf_class sum(0, bits), mag(0, bits);
    for (const auto& [s, q] : terms_) {
      mpf_class root(s, bits);
      root = sqrt(root);
      mpf_class num(q.get_num(), bits), den(q.get_den(), bits);
      mpf_class v = num / den * root;
      sum += v;
      mag += abs(v);
    }
    mpf_class threshold = mag;
    mpf_div_2exp(threshold.get_mpf_t(), threshold.get_mpf_t(), bits - 32);
    if (abs(sum) > threshold) return sgn(sum);
  }
  throw ArithmeticError("could not resolve sign of " + str());
}

std::vector<Integer> Surd::primes() const {
  std::set<Integer> ps;
  for (const auto& [s, q] : terms_) {
    if (s == 1) continue;
    for (auto& p : prime_factors(s)) ps.insert(p);
  }
  return {ps.begin(), ps.end()};
}

Surd Surd::conjugate(const Integer& p) const {
  Surd out = *this;
  for (auto& [s, q] : out.terms_) {
    if (mpz_divisible_p(s.get_mpz_t(), p.get_mpz_t())) q = -q;
  }
  return out;
}

Surd Surd::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  Surd x = *this;
  Surd num(1);
  for (const auto& p : primes()) {
    Surd y = x.conjugate(p);
    num *= y;
    x *= y;
  }
  Rational norm = x.to_rational();
  Rational inv = Rational(1) / norm;
  return num * Surd(inv);
}

Surd Surd::operator-() const {
  Surd out = *this;
  for (auto& kv : out.terms_) kv.second = -kv.second;
  return out;
}

Surd& Surd::operator+=(const Surd& rhs) {
  for (const auto& [s, q] : rhs.terms_) add_term(s, q);
  return *this;
}

Surd& Surd::operator-=(const Surd& rhs) {
  for (const auto& [s, q] : rhs.terms_) add_term(s, -q);
  return *this;
}

Surd operator*(const Surd& lhs, const Surd& rhs) {
  Surd out;
  for (const auto& [s1, q1] : lhs.terms_) {
    for (const auto& [s2, q2] : rhs.terms_) {
      if (s1 == 1) {
        out.add_term(s2, q1 * q2);
      } else if (s2 == 1) {
        out.add_term(s1, q1 * q2);
      } else {
        Integer g;
        mpz_gcd(g.get_mpz_t(), s1.get_mpz_t(), s2.get_mpz_t());
        Integer s = (s1 / g) * (s2 / g);
        out.add_term(s, q1 * q2 * Rational(g));
      }
    }
  }
  return out;
}

Surd& Surd::operator*=(const Surd& rhs) {
  *this = *this * rhs;
  return *this;
}

std::string Surd::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, q] : terms_) {
    Rational mag = abs_rational(q);
    if (first) {
      if (q < 0) os << "-";
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    first = false;
    if (s == 1) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << "sqrt(" << s.get_str() << ")";
    } else {
      os << mag.get_str() << "*sqrt(" << s.get_str() << ")";
    }
  }
  return os.str();
}

namespace {

// Splits x = a + sqrt(p) * b where a and b carry no factor p in their
// radicands.
std::pair<Surd, Surd> split_on_prime(const Surd& x, const Integer& p) {
  Surd a, b;
  for (const auto& [s, q] : x.terms()) {
    if (mpz_divisible_p(s.get_mpz_t(), p.get_mpz_t())) {
      b += Surd::radical(s / p, q);
    } else {
      a += Surd::radical(s, q);
    }
  }
  return {a, b};
}

// Any square root (either sign) of x in the closure.
std::optional<Surd> any_root(const Surd& x) {
  if (x.is_zero()) return Surd();
  if (x.is_rational()) {
    Rational q = x.to_rational();
    if (q < 0) return std::nullopt;
    return Surd::sqrt_of(q);
  }
  const auto ps = x.primes();
  const Integer& p = ps.back();
  auto [a, b] = split_on_prime(x, p);
  // (y + z sqrt p)^2 = a + b sqrt p  =>  y^2 + p z^2 = a,  2 y z = b,
  // and y^2 - p z^2 is a square root of a^2 - p b^2 free of sqrt p.
  // If sqrt(x) = sqrt(m) (y + z sqrt p) with y, z free of sqrt p, then
  // m (y^2 - p z^2) is a root of the discriminant lying in the field of the
  // remaining primes of x. Insisting on that field keeps the recursion on a
  // shrinking prime set.
  Surd disc = a * a - Surd(Rational(p)) * b * b;
  auto d = any_root(disc);
  if (!d) return std::nullopt;
  for (const auto& q : d->primes()) {
    if (q == p || !std::binary_search(ps.begin(), ps.end(), q)) return std::nullopt;
  }
  const Surd half(Rational(1, 2));
  for (int sgn : {1, -1}) {
    Surd y2 = half * (a + Surd(sgn) * *d);
    if (y2.is_zero()) continue;
    auto y = any_root(y2);
    if (!y || y->is_zero()) continue;
    Surd z = b * (Surd(2) * *y).inverse();
    Surd candidate = *y + z * Surd::radical(p);
    if (candidate * candidate == x) return candidate;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Surd> sqrt_in_closure(const Surd& x) {
  if (x.sign() < 0) return std::nullopt;
  auto r = any_root(x);
  if (r && r->sign() < 0) r = -*r;
  return r;
}

SqrtClassifier::Placement SqrtClassifier::classify(const Surd& value) {
  if (value.sign() <= 0) throw ArithmeticError("classify needs a positive value");
  for (std::size_t g = 0; g < reps_.size(); ++g) {
    Surd quotient = g == 0 ? value : value * reps_[g].inverse();
    if (auto r = sqrt_in_closure(quotient)) return {g, *r};
  }
  reps_.push_back(value);
  return {reps_.size() - 1, Surd(1)};
}

}  // namespace geonet
