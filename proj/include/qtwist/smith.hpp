#pragma once

#include <vector>

#include "qtwist/rational.hpp"

namespace qtwist {

using IntMat = std::vector<std::vector<BigInt>>;

IntMat identity_mat(std::size_t n);
IntMat mat_mul(const IntMat& a, const IntMat& b);

/// Smith normal form: U*A*V = D with U, V unimodular and D diagonal,
/// d_1 | d_2 | ... (nonnegative). A must be rectangular (rows x cols).
struct SmithResult {
  IntMat u;  // rows x rows
  IntMat d;  // rows x cols, diagonal
  IntMat v;  // cols x cols
};

SmithResult smith_normal_form(IntMat a);

/// Determinant by fraction-free (Bareiss) elimination.
BigInt int_det(IntMat a);

}  // namespace qtwist
