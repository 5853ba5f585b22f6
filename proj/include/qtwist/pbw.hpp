#pragma once

#include <map>
#include <vector>

#include "qtwist/laurent.hpp"

namespace qtwist {

/// PBW monomial F^f K^k E^e of U_q(sl2); f, e >= 0, k any integer.
/// Scalars are exact rational functions in v with q = v^2.
struct PBWMono {
  int f = 0;
  int k = 0;
  int e = 0;
  auto operator<=>(const PBWMono&) const = default;
};

using PBWElem = std::map<PBWMono, RatFunc>;
using PBWPair = std::pair<PBWMono, PBWMono>;
using PBW2Elem = std::map<PBWPair, RatFunc>;

namespace pbw {

RatFunc qpow(std::int64_t n);          // q^n = v^{2n}
RatFunc qminus_qinv();                 // q - q^{-1}

PBWElem one();
PBWElem gen_e();
PBWElem gen_f();
PBWElem gen_k(int power);  // K^power

PBWElem add(const PBWElem& a, const PBWElem& b);
PBWElem sub(const PBWElem& a, const PBWElem& b);
PBWElem scale(const RatFunc& c, const PBWElem& a);
PBWElem mul(const PBWElem& a, const PBWElem& b);

PBW2Elem tensor(const PBWElem& a, const PBWElem& b);
PBW2Elem add2(const PBW2Elem& a, const PBW2Elem& b);
PBW2Elem sub2(const PBW2Elem& a, const PBW2Elem& b);
PBW2Elem mul2(const PBW2Elem& a, const PBW2Elem& b);
PBW2Elem swap_legs(const PBW2Elem& a);  // P_21

/// Coproduct extended multiplicatively from the generators.
PBW2Elem coproduct(const PBWElem& a);

/// tau: E -> E, F -> F, K -> K^{-1} (antihomomorphism onto U_op).
PBWElem tau(const PBWElem& a);
/// omega: E -> F, F -> E, K -> K^{-1} (homomorphism onto U^cop).
PBWElem omega_map(const PBWElem& a);

/// Delta^tau = (tau x tau) . Delta . tau^{-1}.
PBW2Elem coproduct_tau(const PBWElem& a);

/// Drinfeld-pairing (y, x) for y in U^{<=0} (e = 0) and x in U^{>=0} (f = 0).
RatFunc pairing(const PBWElem& y, const PBWElem& x);

/// Quasi-R-matrix coefficients: Theta_n = theta_coeff(n) * F^n (x) E^n,
/// theta_coeff(n) = 1 / (F^n, E^n) with theta_coeff(0) = 1.
RatFunc theta_coeff(int n);
/// Sum of Theta_n for n <= cap.
PBW2Elem theta_truncated(int cap);

}  // namespace pbw

/// Delta(u) Theta = Theta Delta^tau(u) in the truncated tensor algebra for
/// u in {E, F, K, K^{-1}}, checked on every bidegree component that does not
/// involve the first dropped term Theta_{D+1}.
bool verify_theta_intertwines(int d_cap);

/// Theorem-level uniqueness at truncation: solving the degree-by-degree
/// linear constraints with Gamma_0 = 1 (x) 1 reproduces theta_coeff.
bool verify_theta_uniqueness(int d_cap);

/// (omega x omega) Theta_n = P_21 Theta_n for n <= cap.
bool omega_invariance_check(int d_cap);

}  // namespace qtwist
