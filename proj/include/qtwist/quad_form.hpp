#pragma once

#include <optional>
#include <vector>

#include "qtwist/fin_ab_group.hpp"
#include "qtwist/pi_exp.hpp"
#include "qtwist/rational.hpp"
#include "qtwist/smith.hpp"

namespace qtwist {

struct RootDatum;

/// Symmetric bicharacter b: A x A -> C^x, stored as a dense exponent table.
struct Bicharacter {
  FinAbGroup group;
  std::vector<PiExp> table;  // index_of(a) * |A| + index_of(b)

  const PiExp& at(const GrpElem& a, const GrpElem& b) const {
    return table[group.index_of(a) * group.size() + group.index_of(b)];
  }
  bool is_biadditive() const;
  bool is_symmetric() const;
};

/// Quadratic form Q: A -> C^x with values exp(pi*i*t), t rational mod 2.
/// Invariants: Q(-a) = Q(a) and the polarization
/// b(a,b) = Q(a+b)/Q(a)Q(b) is a (symmetric) bicharacter.
struct QuadForm {
  FinAbGroup group;
  std::vector<PiExp> table;  // indexed by element index

  const PiExp& at(const GrpElem& e) const { return table[group.index_of(e)]; }
  const PiExp& at_index(std::int64_t i) const { return table[i]; }

  /// Exhaustively checks the QuadForm invariants.
  bool is_valid() const;

  QuadForm direct_sum(const QuadForm& o) const;
  /// Pointwise product on the same group.
  QuadForm product(const QuadForm& o) const;
  QuadForm power(std::int64_t n) const;

  static QuadForm trivial(FinAbGroup g);
};

Bicharacter bicharacter_of(const QuadForm& q);

/// Even lattice: integer Gram matrix, symmetric, even diagonal, det != 0.
/// Not assumed positive definite.
struct EvenLattice {
  IntMat gram;

  std::size_t lattice_rank() const { return gram.size(); }
  void validate() const;  // throws on violation
  BigInt det() const;
  bool is_positive_definite() const;

  /// (x, y) for rational vectors in basis coordinates.
  Rat form(const std::vector<Rat>& x, const std::vector<Rat>& y) const;
};

/// Discriminant form of an even lattice: the group M^v/M (via Smith normal
/// form of the Gram matrix) with Q(x) = exp(pi*i*(x,x)), plus rational
/// dual-lattice representatives for the group generators.
struct DiscriminantForm {
  FinAbGroup group;  // invariant factors d_1 | d_2 | ...
  QuadForm q;
  std::size_t ambient_rank = 0;            // rank of the lattice
  std::vector<std::vector<Rat>> gen_reps;  // dual vectors, one per factor

  /// Rational dual-lattice representative of a group element.
  std::vector<Rat> rep(const GrpElem& e) const;
};

DiscriminantForm discriminant_form(const EvenLattice& l);

/// Q_g^N on P/Q: Q(lambda) = exp(N*pi*i*<<lambda,lambda>>).
QuadForm quad_form_lie(const RootDatum& d, std::int64_t n_shift);

}  // namespace qtwist
