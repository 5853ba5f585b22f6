#pragma once

#include <vector>

#include "qtwist/pbw.hpp"

namespace qtwist {

using Mat = std::vector<std::vector<RatFunc>>;

Mat mat_identity(std::size_t n);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
bool mat_eq(const Mat& a, const Mat& b);
Mat mat_inverse(const Mat& a);
Mat mat_kron(const Mat& a, const Mat& b);

/// Irreducible type-1 U_q(sl2)-module L_q(m lambda_1): weight basis v_0..v_m
/// with K v_j = q^{m-2j} v_j, F v_j = [j+1] v_{j+1}, E v_j = [m-j+1] v_{j-1}.
/// Entries are exact in v with q = v^2.
struct Sl2Module {
  int highest = 0;  // m

  std::size_t dim() const { return static_cast<std::size_t>(highest) + 1; }
  std::int64_t weight(std::size_t j) const { return highest - 2 * static_cast<std::int64_t>(j); }

  Mat act_e() const;
  Mat act_f() const;
  Mat act_k(int power) const;
  Mat act(const PBWElem& u) const;

  /// Defining relations as matrix identities.
  bool relations_hold() const;
};

/// Action of a two-leg element on M (x) N (row-major Kronecker indexing).
Mat act2(const PBW2Elem& u, const Sl2Module& m, const Sl2Module& n);

/// f_rho on M (x) N: diagonal v^{-<<a,b>>*n_g} = v^{-ab} on weights (a, b).
Mat f_rho_matrix(const Sl2Module& m, const Sl2Module& n);

/// Theta as an operator (finite on modules).
Mat theta_matrix(const Sl2Module& m, const Sl2Module& n);

/// R(rho) = (Theta . f_rho)^{-1}.
Mat rmatrix_action(const Sl2Module& m, const Sl2Module& n);

/// R1: R Delta(x) R^{-1} = Delta^op(x) for x in {E, F, K}.
bool r1_check(const Sl2Module& m, const Sl2Module& n);

/// Yang-Baxter on V (x) V (x) V.
bool yang_baxter_check(const Sl2Module& v);

/// Braiding P . R on L(lambda_1)^{(x)2}: eigenvalue v on the symmetric
/// 3-dimensional constituent, -v^{-3} on the antisymmetric line.
bool braiding_eigencheck_sl2();

/// Lemma-level conjugation: f_rho^{-1} (F^n (x) E^n) f_rho =
/// F^n K^n (x) K^{-n} E^n as matrices, for n <= cap.
bool f_transform_check(int cap);

}  // namespace qtwist
