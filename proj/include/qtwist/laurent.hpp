#pragma once

#include <string>
#include <vector>

#include "qtwist/rational.hpp"

namespace qtwist {

/// Dense polynomial over Rat in one formal variable v.
struct Poly {
  std::vector<Rat> c;  // c[i] * v^i, normalized: no trailing zeros

  Poly() = default;
  explicit Poly(Rat x) { if (!x.is_zero()) c.push_back(std::move(x)); }
  static Poly monomial(std::size_t deg, Rat x);

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  void trim();

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const { return c == o.c; }

  /// Quotient and remainder.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  static Poly gcd(Poly a, Poly b);  // monic

  Poly substitute_neg() const;  // v -> -v
  std::string str() const;
};

/// Exact rational function in v: num/den, normalized (gcd 1, den monic).
/// Laurent monomials embed as v^{-k} = 1/v^k; with q = v^{n_g} this is the
/// single scalar field for every quantum-side identity check.
class RatFunc {
public:
  RatFunc() : num_(), den_(Poly(Rat(1))) {}
  RatFunc(long long x) : num_(Poly(Rat(x))), den_(Poly(Rat(1))) {}
  explicit RatFunc(Rat x) : num_(Poly(std::move(x))), den_(Poly(Rat(1))) {}
  RatFunc(Poly n, Poly d);

  static RatFunc v_power(std::int64_t k);  // v^k, k may be negative

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc inverse() const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc substitute_neg() const;  // v -> -v

  /// Value at v = 1 (throws if the denominator vanishes there).
  Rat eval_one() const;

  std::string str() const;

private:
  void normalize();
  Poly num_, den_;
};

/// q-integer n_q = (q^n - q^{-n})/(q - q^{-1}) as a Laurent polynomial in
/// the given variable (q = v here; scale by n_g outside when needed).
RatFunc qint(std::int64_t n);
RatFunc qfact(std::int64_t n);
RatFunc qbinom(std::int64_t n, std::int64_t m);

/// exp(pi i (a rho + b)) with rho formal: multiplication adds components;
/// equality is exact in a and mod 2 in b.
struct Phase {
  Rat a;  // coefficient of rho
  Rat b;  // constant, mod 2

  Phase() : a(0), b(0) {}
  Phase(Rat a_, Rat b_) : a(std::move(a_)), b(reduce(std::move(b_))) {}

  Phase operator*(const Phase& o) const { return Phase(a + o.a, b + o.b); }
  Phase inverse() const { return Phase(-a, -b); }
  bool operator==(const Phase& o) const { return a == o.a && b == o.b; }
  bool operator!=(const Phase& o) const { return !(*this == o); }
  bool is_one() const { return a.is_zero() && b.is_zero(); }

  /// rho -> rho + n.
  Phase shift_rho(std::int64_t n) const { return Phase(a, b + a * Rat(n)); }
  Phase pow(std::int64_t k) const { return Phase(a * Rat(k), b * Rat(k)); }

  std::string str() const;

private:
  static Rat reduce(Rat t) {
    Rat two(2);
    return t - Rat((t / two).floor()) * two;
  }
};

}  // namespace qtwist
