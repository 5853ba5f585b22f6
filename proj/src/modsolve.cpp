#include "qtwist/modsolve.hpp"

#include <numeric>
#include <stdexcept>

#include "qtwist/smith.hpp"

namespace qtwist {

namespace {

std::int64_t emod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// g = gcd(a,b), a*x + b*y = g
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  if (b == 0) { x = a >= 0 ? 1 : -1; y = 0; return a >= 0 ? a : -a; }
  std::int64_t x1, y1;
  std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

std::optional<std::vector<std::int64_t>> solve_mod(std::vector<ModRow> sparse,
                                                   int num_vars, std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("solve_mod: modulus must be positive");
  const std::size_t nr = sparse.size();
  if (static_cast<double>(nr) * (num_vars + 1) > 6e7)
    throw std::length_error("solve_mod: system too large");

  std::vector<std::vector<std::int64_t>> a(nr, std::vector<std::int64_t>(num_vars + 1, 0));
  for (std::size_t r = 0; r < nr; ++r) {
    for (auto& [v, c] : sparse[r].terms) a[r][v] = emod(a[r][v] + c, m);
    a[r][num_vars] = emod(sparse[r].rhs, m);
  }

  auto row_combine = [&](std::size_t r1, std::size_t r2, std::int64_t p, std::int64_t q,
                         std::int64_t s, std::int64_t t) {
    // (row1, row2) <- (p*row1 + q*row2, s*row1 + t*row2); caller keeps p*t - q*s = ±1
    for (int j = 0; j <= num_vars; ++j) {
      std::int64_t x = a[r1][j], y = a[r2][j];
      a[r1][j] = emod(p % m * x % m + q % m * y % m, m);
      a[r2][j] = emod(s % m * x % m + t % m * y % m, m);
    }
  };
  auto row_axpy = [&](std::size_t dst, std::size_t src, std::int64_t q) {
    q = emod(q, m);
    if (q == 0) return;
    for (int j = 0; j <= num_vars; ++j)
      a[dst][j] = emod(a[dst][j] - q * a[src][j], m);
  };

  // unit u (mod m) with u * v = gcd(v, m) (mod m); v in [1, m)
  auto unit_normalizer = [&](std::int64_t v) -> std::int64_t {
    std::int64_t g = std::gcd(v, m);
    std::int64_t c = v / g, mg = m / g;
    std::int64_t x, y;
    ext_gcd(c % mg, mg, x, y);  // c * x = 1 (mod m/g)
    std::int64_t u = emod(x, mg);
    if (mg == 1) u = 1;
    while (std::gcd(u, m) != 1) u += mg;  // lift to a unit mod m
    return u % m;
  };

  std::vector<std::pair<std::size_t, int>> pivots;  // (row, col)
  std::size_t top = 0;
  for (int col = 0; col < num_vars && top < nr; ++col) {
    for (;;) {
      // row with the smallest gcd(coeff, m) at this column
      std::size_t best = nr;
      std::int64_t bestg = 0;
      for (std::size_t r = top; r < nr; ++r) {
        if (a[r][col] == 0) continue;
        std::int64_t g = std::gcd(a[r][col], m);
        if (best == nr || g < bestg) { best = r; bestg = g; }
      }
      if (best == nr) break;
      std::swap(a[top], a[best]);
      std::int64_t g = bestg;
      // fold in any row whose entry g does not divide
      bool changed = false;
      for (std::size_t r = top + 1; r < nr; ++r) {
        if (a[r][col] % g != 0) {
          std::int64_t x, y;
          std::int64_t g2 = ext_gcd(a[top][col], a[r][col], x, y);
          row_combine(top, r, x, y, -(a[r][col] / g2), a[top][col] / g2);
          changed = true;
          break;
        }
      }
      if (changed) continue;
      // scale the pivot row by a unit so the pivot entry equals g exactly,
      // then clear the column below
      std::int64_t u = unit_normalizer(a[top][col]);
      for (int j = 0; j <= num_vars; ++j) a[top][j] = emod(a[top][j] * u, m);
      if (a[top][col] != g) throw std::logic_error("solve_mod: pivot normalization");
      for (std::size_t r = top + 1; r < nr; ++r)
        if (a[r][col] != 0) row_axpy(r, top, a[r][col] / g);
      pivots.emplace_back(top, col);
      ++top;
      break;
    }
  }
  for (std::size_t r = top; r < nr; ++r) {
    for (int j = 0; j < num_vars; ++j)
      if (a[r][j] != 0) throw std::logic_error("solve_mod: echelon invariant");
    if (a[r][num_vars] != 0) return std::nullopt;
  }

  // Completion: solve the echelon system exactly over Z via SNF of [A' | m*I].
  const std::size_t pr = pivots.size();
  IntMat big(pr, std::vector<BigInt>(num_vars + pr, 0));
  std::vector<BigInt> rhs(pr);
  for (std::size_t i = 0; i < pr; ++i) {
    std::size_t r = pivots[i].first;
    for (int j = 0; j < num_vars; ++j) big[i][j] = a[r][j];
    big[i][num_vars + i] = m;
    rhs[i] = a[r][num_vars];
  }
  SmithResult s = smith_normal_form(big);
  // D w = U rhs, then z = V w
  std::vector<BigInt> ur(pr, 0);
  for (std::size_t i = 0; i < pr; ++i)
    for (std::size_t j = 0; j < pr; ++j) ur[i] += s.u[i][j] * rhs[j];
  std::size_t cols = num_vars + pr;
  std::vector<BigInt> w(cols, 0);
  for (std::size_t i = 0; i < pr; ++i) {
    BigInt d = i < cols ? s.d[i][i] : BigInt(0);
    if (d == 0) {
      if (ur[i] != 0) return std::nullopt;
    } else {
      if (ur[i] % d != 0) return std::nullopt;
      w[i] = ur[i] / d;
    }
  }
  std::vector<std::int64_t> x(num_vars, 0);
  for (int j = 0; j < num_vars; ++j) {
    BigInt z = 0;
    for (std::size_t k = 0; k < cols; ++k)
      if (w[k] != 0) z += s.v[j][k] * w[k];
    x[j] = static_cast<std::int64_t>(z % m);
    if (x[j] < 0) x[j] += m;
  }
  // paranoia: check against the original rows
  for (const auto& row : sparse) {
    std::int64_t acc = 0;
    for (auto& [v, c] : row.terms) acc = emod(acc + emod(c, m) * x[v], m);
    if (acc != emod(row.rhs, m)) throw std::logic_error("solve_mod: verification failed");
  }
  return x;
}

}  // namespace qtwist
