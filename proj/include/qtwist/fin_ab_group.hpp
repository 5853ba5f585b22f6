#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qtwist/rational.hpp"

namespace qtwist {

/// Element of a finite abelian group, as a residue vector.
using GrpElem = std::vector<std::int64_t>;

/// Finite abelian group presented as a product of cyclic factors
/// Z/d_1 x ... x Z/d_r (d_i >= 2; empty list is the trivial group).
/// Factors are kept in the order given (coordinates are meaningful to
/// callers); invariant_factors() returns the canonical divisibility chain.
class FinAbGroup {
public:
  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<std::int64_t> orders);

  const std::vector<std::int64_t>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::int64_t size() const { return size_; }

  GrpElem zero() const { return GrpElem(orders_.size(), 0); }
  GrpElem reduce(GrpElem e) const;
  GrpElem add(const GrpElem& a, const GrpElem& b) const;
  GrpElem neg(const GrpElem& a) const;
  GrpElem smul(std::int64_t k, const GrpElem& a) const;
  std::int64_t element_order(const GrpElem& a) const;

  std::int64_t index_of(const GrpElem& e) const;  // mixed-radix index
  GrpElem element(std::int64_t idx) const;

  /// Closure of the generated subgroup, as a sorted list of element indices.
  std::vector<std::int64_t> subgroup_closure(const std::vector<GrpElem>& gens) const;

  /// Canonical invariant factors d_1 | d_2 | ... (1-entries dropped).
  std::vector<std::int64_t> invariant_factors() const;

  bool isomorphic_to(const FinAbGroup& o) const {
    return invariant_factors() == o.invariant_factors();
  }

  FinAbGroup direct_sum(const FinAbGroup& o) const;

  static std::string elem_str(const GrpElem& e);

  bool operator==(const FinAbGroup& o) const { return orders_ == o.orders_; }

private:
  std::vector<std::int64_t> orders_;
  std::int64_t size_ = 1;
};

/// Subgroup of an ambient FinAbGroup, stored as the sorted list of element
/// indices plus a generator set.
struct Subgroup {
  std::vector<std::int64_t> elem_indices;  // sorted
  std::vector<GrpElem> generators;

  std::size_t order() const { return elem_indices.size(); }
  bool contains_index(std::int64_t idx) const;
  /// Position of an ambient element index inside elem_indices; -1 if absent.
  std::int64_t position(std::int64_t idx) const;
};

Subgroup make_subgroup(const FinAbGroup& g, const std::vector<GrpElem>& gens);

/// All subgroups (BFS over one-generator extensions, deduplicated).
/// Throws std::length_error when |A| exceeds max_order.
std::vector<Subgroup> enumerate_subgroups(const FinAbGroup& g,
                                          std::int64_t max_order = 512);

/// Cap used by enumerate_subgroups and the classifier; reads the
/// QTWIST_MAX_GROUP environment variable, defaulting to 512.
std::int64_t group_size_cap();

}  // namespace qtwist
