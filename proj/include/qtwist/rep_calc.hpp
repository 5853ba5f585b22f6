#pragma once

#include <map>
#include <vector>

#include "qtwist/quad_form.hpp"
#include "qtwist/rational.hpp"
#include "qtwist/root_datum.hpp"

namespace qtwist {

/// Finite-dimensional irreducible: dimension and weight multiplicities.
struct IrrepInfo {
  Weight highest;
  BigInt dimension;
  std::map<Weight, BigInt> multiplicities;  // all weights, W-invariant
};

/// Finitely supported q-series with exact rational exponents.
struct GradedSeries {
  std::map<Rat, BigInt> terms;

  BigInt coeff(const Rat& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? BigInt(0) : it->second;
  }
  GradedSeries& add(const Rat& e, const BigInt& c);
  GradedSeries mul_truncated(const GradedSeries& o, const Rat& cutoff) const;
  GradedSeries shifted(const Rat& offset) const;
  void truncate(const Rat& cutoff);
  bool operator==(const GradedSeries& o) const { return terms == o.terms; }
};

/// Weyl dimension formula, exact.
BigInt weyl_dim(const RootDatum& d, const Weight& w);

/// Freudenthal recursion; throws std::length_error past the dimension cap.
IrrepInfo weight_multiplicities(const RootDatum& d, const Weight& w,
                                const BigInt& dim_cap = BigInt(100000));

/// Klimyk tensor decomposition: multiset of dominant constituents.
std::map<Weight, BigInt> tensor_decompose(const RootDatum& d, const Weight& a,
                                          const Weight& b,
                                          const BigInt& dim_cap = BigInt(100000));

/// Delta_k(w) + Delta_{k'}(w*) = N <<w + 2 rho, w>> / 2 (rho-independent).
Rat conformal_weight_pair(const RootDatum& d, const Weight& w, std::int64_t n_shift);

/// All dominant weights with coefficient height <= cutoff, with duals and
/// the product dim * dim(dual).
struct CoordRingEntry {
  Weight lambda;
  Weight lambda_dual;
  BigInt dim_product;
};
std::vector<CoordRingEntry> coordinate_ring_truncation(const RootDatum& d,
                                                       std::int64_t height_cutoff);

/// dim L(w) * prod_{n>=1} (1-q^n)^{-dim g}, truncated at integer exponents
/// <= cutoff. The Delta offset is attached by the caller.
GradedSeries weyl_module_graded_dim(const RootDatum& d, const Weight& w,
                                    std::int64_t q_cutoff);

/// Theta series of a coset of a positive-definite even lattice:
/// sum over x in coset+M with (x,x)/2 <= cutoff of q^{(x,x)/2}.
/// Throws std::domain_error for indefinite lattices.
GradedSeries theta_series(const EvenLattice& l, const std::vector<Rat>& coset,
                          const Rat& cutoff);

/// Dominant weights of coefficient height exactly h (lex order).
std::vector<Weight> dominant_weights_of_height(const RootDatum& d, std::int64_t h);

}  // namespace qtwist
