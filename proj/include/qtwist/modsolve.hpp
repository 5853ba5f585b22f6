#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace qtwist {

/// Sparse row of a linear system over Z/m: sum coeff*x[var] = rhs (mod m).
struct ModRow {
  std::vector<std::pair<int, std::int64_t>> terms;  // (variable, coefficient)
  std::int64_t rhs = 0;
};

/// Solves A*x = b over Z/m by Gaussian elimination with gcd pivoting
/// (handles composite m). Returns one solution (free variables set to 0),
/// or nullopt when the system is inconsistent.
std::optional<std::vector<std::int64_t>> solve_mod(std::vector<ModRow> rows,
                                                   int num_vars,
                                                   std::int64_t m);

}  // namespace qtwist
