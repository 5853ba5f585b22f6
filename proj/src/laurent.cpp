#include "qtwist/laurent.hpp"

#include <stdexcept>

namespace qtwist {

Poly Poly::monomial(std::size_t deg, Rat x) {
  Poly p;
  if (x.is_zero()) return p;
  p.c.assign(deg + 1, Rat(0));
  p.c[deg] = std::move(x);
  return p;
}

void Poly::trim() {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.c.resize(std::max(c.size(), o.c.size()), Rat(0));
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
  for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r;
  r.c.resize(std::max(c.size(), o.c.size()), Rat(0));
  for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = c[i];
  for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
  r.trim();
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  if (is_zero() || o.is_zero()) return r;
  r.c.assign(c.size() + o.c.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
  }
  r.trim();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("Poly::divmod: division by zero");
  Poly rem = a, quot;
  if (a.degree() >= b.degree()) quot.c.assign(a.degree() - b.degree() + 1, Rat(0));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    std::size_t shift = rem.degree() - b.degree();
    Rat f = rem.c.back() / b.c.back();
    quot.c[shift] += f;
    for (std::size_t i = 0; i < b.c.size(); ++i) rem.c[shift + i] -= f * b.c[i];
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    Rat lead = a.c.back();
    for (auto& x : a.c) x /= lead;
  }
  return a;
}

Poly Poly::substitute_neg() const {
  Poly r = *this;
  for (std::size_t i = 1; i < r.c.size(); i += 2) r.c[i] = -r.c[i];
  return r;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += c[i].str();
    if (i > 0) s += "*v^" + std::to_string(i);
  }
  return s;
}

RatFunc::RatFunc(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

void RatFunc::normalize() {
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(Rat(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = Poly::divmod(num_, g).first;
    den_ = Poly::divmod(den_, g).first;
  }
  Rat lead = den_.c.back();
  if (!(lead == Rat(1))) {
    for (auto& x : num_.c) x /= lead;
    for (auto& x : den_.c) x /= lead;
  }
}

RatFunc RatFunc::v_power(std::int64_t k) {
  RatFunc r;
  if (k >= 0)
    r.num_ = Poly::monomial(static_cast<std::size_t>(k), Rat(1));
  else {
    r.num_ = Poly(Rat(1));
    r.den_ = Poly::monomial(static_cast<std::size_t>(-k), Rat(1));
  }
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}
RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}
RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  for (auto& x : r.num_.c) x = -x;
  return r;
}
RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::substitute_neg() const {
  return RatFunc(num_.substitute_neg(), den_.substitute_neg());
}

Rat RatFunc::eval_one() const {
  auto eval = [](const Poly& p) {
    Rat s(0);
    for (const auto& x : p.c) s += x;
    return s;
  };
  Rat d = eval(den_);
  if (d.is_zero()) throw std::domain_error("RatFunc: pole at v=1");
  return eval(num_) / d;
}

std::string RatFunc::str() const {
  if (den_ == Poly(Rat(1))) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFunc qint(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("qint: negative argument");
  if (n == 0) return RatFunc(0);
  // (v^n - v^{-n})/(v - v^{-1}) = v^{1-n} (1 + v^2 + ... + v^{2(n-1)})
  Poly num;
  num.c.assign(2 * static_cast<std::size_t>(n) - 1, Rat(0));
  for (std::int64_t k = 0; k < n; ++k) num.c[2 * k] = Rat(1);
  return RatFunc(num, Poly::monomial(static_cast<std::size_t>(n - 1), Rat(1)));
}

RatFunc qfact(std::int64_t n) {
  RatFunc r(1);
  for (std::int64_t k = 2; k <= n; ++k) r = r * qint(k);
  return r;
}

RatFunc qbinom(std::int64_t n, std::int64_t m) {
  if (m < 0 || m > n) return RatFunc(0);
  return qfact(n) / (qfact(m) * qfact(n - m));
}

std::string Phase::str() const {
  return "exp(pi*i*(" + a.str() + "*rho + " + b.str() + "))";
}

}  // namespace qtwist
