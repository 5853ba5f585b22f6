#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qtwist {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number with arbitrary-precision numerator/denominator.
/// Always normalized: gcd(num, den) == 1 and den > 0.
class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  Rat(BigInt n) : num_(std::move(n)), den_(1) {}
  Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
  Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

  Rat operator-() const { return Rat(unchecked{}, -num_, den_); }

  Rat operator+(const Rat& o) const {
    return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Rat operator-(const Rat& o) const {
    return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  }
  Rat operator*(const Rat& o) const { return Rat(num_ * o.num_, den_ * o.den_); }
  Rat operator/(const Rat& o) const {
    if (o.num_ == 0) throw std::domain_error("Rat: division by zero");
    return Rat(num_ * o.den_, den_ * o.num_);
  }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const { return num_ * o.den_ < o.num_ * den_; }
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator<=(const Rat& o) const { return !(o < *this); }
  bool operator>=(const Rat& o) const { return !(*this < o); }

  /// Largest integer <= value.
  BigInt floor() const {
    BigInt q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
  }

  /// Value as integer; throws unless denominator is 1.
  BigInt as_integer() const {
    if (den_ != 1) throw std::domain_error("Rat: not an integer: " + str());
    return num_;
  }

  std::string str() const {
    std::string s = num_.str();
    if (den_ != 1) s += "/" + den_.str();
    return s;
  }

  /// Parses "p" or "p/q".
  static Rat parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(BigInt(s));
    return Rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
  }

private:
  struct unchecked {};
  Rat(unchecked, BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
    if (num_ == 0) den_ = 1;
  }

  BigInt num_;
  BigInt den_;
};

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return a / boost::multiprecision::gcd(a, b) * b;
}

}  // namespace qtwist
