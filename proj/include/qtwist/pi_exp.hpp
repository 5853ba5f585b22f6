#pragma once

#include "qtwist/rational.hpp"

namespace qtwist {

/// A root of unity exp(pi*i*t) stored as the exact rational exponent t,
/// reduced modulo 2. All quadratic-form, bicharacter and cocycle values in
/// this library are of this shape; equality is exact.
class PiExp {
public:
  PiExp() : t_(0) {}
  explicit PiExp(Rat t) : t_(reduce(std::move(t))) {}
  PiExp(long long num, long long den) : t_(reduce(Rat(num, den))) {}

  const Rat& exponent() const { return t_; }

  PiExp operator*(const PiExp& o) const { return PiExp(t_ + o.t_); }
  PiExp operator/(const PiExp& o) const { return PiExp(t_ - o.t_); }
  PiExp inverse() const { return PiExp(-t_); }
  PiExp pow(const BigInt& k) const { return PiExp(t_ * Rat(k)); }

  bool operator==(const PiExp& o) const { return t_ == o.t_; }
  bool operator!=(const PiExp& o) const { return t_ != o.t_; }
  bool operator<(const PiExp& o) const { return t_ < o.t_; }

  bool is_one() const { return t_.is_zero(); }
  bool is_minus_one() const { return t_ == Rat(1); }
  /// True when the value is +1 or -1.
  bool is_real_sign() const { return t_.is_integer(); }

  static PiExp one() { return PiExp(); }
  static PiExp minus_one() { return PiExp(Rat(1)); }

  /// "exp(t*pi*i)" with t in [0,2).
  std::string str() const {
    if (is_one()) return "1";
    if (is_minus_one()) return "-1";
    return "exp(" + t_.str() + "*pi*i)";
  }

private:
  static Rat reduce(Rat t) {
    // into [0, 2)
    Rat two(2);
    Rat q = t / two;
    return t - Rat(q.floor()) * two;
  }
  Rat t_;
};

}  // namespace qtwist
