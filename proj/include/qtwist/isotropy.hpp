#pragma once

#include <vector>

#include "qtwist/ab_cocycle.hpp"
#include "qtwist/fin_ab_group.hpp"
#include "qtwist/quad_form.hpp"

namespace qtwist {

/// Super isotropic subspace (I, p) of a quadratic space (A, Q):
/// Q(a) = (-1)^{p(a)} on I, with p an additive parity map. p is never
/// chosen: it is forced pointwise by Q, and only additivity is tested.
struct SuperIsotropic {
  Subgroup sub;
  std::vector<int> parity;  // by position in sub.elem_indices
  bool isotropic = false;   // p identically zero

  bool is_super() const { return !isotropic; }
};

/// All (I, p) of (A, Q): subgroups with Q(I) in {1,-1} whose forced parity
/// is additive. Subgroups where Q(I) lies in {1,-1} but the forced parity
/// fails additivity are returned through `rejected` when non-null.
std::vector<SuperIsotropic> super_isotropic_subspaces(
    const QuadForm& q, std::vector<Subgroup>* rejected = nullptr);

/// Forced parity of a single subgroup; nullopt when not super isotropic.
std::optional<SuperIsotropic> forced_super_isotropic(const QuadForm& q,
                                                     const Subgroup& sub);

/// The supercommutative algebra object S(I): basis {delta_a : a in I} split
/// by parity, multiplication delta_a * delta_b = k(a,b) delta_{a+b}.
struct AlgebraObject {
  Subgroup sub;
  std::vector<int> parity;
  Cochain2 mult;  // k

  std::size_t dim() const { return sub.order(); }
};

AlgebraObject build_s_algebra(const SuperIsotropic& si, const AbCocycle& x);

/// SCA1 (unit), SCA2 (omega-twisted associativity), SCA3 (braided
/// supercommutativity), all checked exhaustively.
bool verify_supercommutative(const AlgebraObject& s, const AbCocycle& x);

}  // namespace qtwist
