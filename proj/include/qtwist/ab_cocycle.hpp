#pragma once

#include <optional>
#include <vector>

#include "qtwist/fin_ab_group.hpp"
#include "qtwist/pi_exp.hpp"
#include "qtwist/quad_form.hpp"

namespace qtwist {

/// Abelian 3-cocycle (omega, c) on a finite abelian group, dense exponent
/// tables. omega is normalized: omega(a,0,0) = omega(0,0,b) = 1.
struct AbCocycle {
  FinAbGroup group;
  std::vector<PiExp> omega;  // |A|^3, index (i*|A|+j)*|A|+k
  std::vector<PiExp> c;      // |A|^2

  const PiExp& w(const GrpElem& a, const GrpElem& b, const GrpElem& g) const {
    std::int64_t n = group.size();
    return omega[(group.index_of(a) * n + group.index_of(b)) * n + group.index_of(g)];
  }
  const PiExp& cc(const GrpElem& a, const GrpElem& b) const {
    return c[group.index_of(a) * group.size() + group.index_of(b)];
  }
  PiExp& w_ref(std::int64_t i, std::int64_t j, std::int64_t k) {
    std::int64_t n = group.size();
    return omega[(i * n + j) * n + k];
  }

  AbCocycle product(const AbCocycle& o) const;
  AbCocycle inverse() const;

  /// EM image: the quadratic form alpha -> c(alpha, alpha).
  QuadForm em_quadratic_form() const;
};

/// 2-cochain k on a subgroup I of an ambient group (or on the whole group),
/// normalized k(a,0) = k(0,a) = 1.
struct Cochain2 {
  FinAbGroup ambient;
  Subgroup sub;                // elements of I as ambient indices
  std::vector<PiExp> k;        // |I|^2, indexed by position in sub.elem_indices

  const PiExp& at(const GrpElem& a, const GrpElem& b) const;
  const PiExp& at_pos(std::size_t i, std::size_t j) const { return k[i * sub.order() + j]; }
};

/// All three identities of the abelian-cocycle condition, exhaustively.
bool verify_cocycle(const AbCocycle& x);

/// EM^{-1}: abelian cocycle with c(a,a) = Q(a), built from the cyclic
/// decomposition of the group (carry cocycle on each factor, polarization
/// bicharacter across factors) and validated exhaustively.
AbCocycle em_inverse(const QuadForm& q);

/// (d2 k, c_k) of a 2-cochain defined on the whole group.
AbCocycle coboundary(const Cochain2& k);

/// Lemma-style trivializing cochain on a super isotropic (I, p):
/// d2(k) = omega|_I and c(a,b) = (-1)^{p(a)p(b)} k(a,b)/k(b,a).
/// parity is indexed by position in sub.elem_indices.
/// Throws std::domain_error when (I, p) is not super isotropic for EM(x).
Cochain2 trivialize_on_isotropic(const AbCocycle& x, const Subgroup& sub,
                                 const std::vector<int>& parity);

/// Degenerate-form dichotomy: returns a cochain k with omega_Q = d2(k) iff
/// Q(x) = B(x,x) for some bicharacter B. nullopt = no such bicharacter
/// exists (the search over exponents is complete, so this is a proof).
/// Throws std::length_error when the group exceeds the search cap.
std::optional<Cochain2> bicharacter_trivialization(const QuadForm& q,
                                                   std::int64_t cap = 64);

/// True when a bicharacter B with B(x,x) = Q(x) exists (complete search).
bool diagonal_bicharacter_exists(const QuadForm& q, std::int64_t cap = 64);

/// Finds k with (d2 k, c_k) = x, i.e. exhibits x as an explicit coboundary;
/// nullopt when x is not a coboundary.
std::optional<Cochain2> as_coboundary(const AbCocycle& x);

/// True when x and y differ by an explicit coboundary.
bool cohomologous(const AbCocycle& x, const AbCocycle& y);

}  // namespace qtwist
