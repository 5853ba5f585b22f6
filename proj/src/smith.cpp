#include "qtwist/smith.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qtwist {

IntMat identity_mat(std::size_t n) {
  IntMat m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMat c(n, std::vector<BigInt>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      BigInt s = 0;
      for (std::size_t t = 0; t < k; ++t) s += a[i][t] * b[t][j];
      c[i][j] = s;
    }
  return c;
}

namespace {

BigInt big_abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

struct Worker {
  IntMat a, u, v;
  std::size_t rows, cols;

  void row_swap(std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  }
  void col_swap(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
    for (std::size_t r = 0; r < cols; ++r) std::swap(v[r][i], v[r][j]);
  }
  // row i -= q * row j
  void row_sub(std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t c = 0; c < cols; ++c) a[i][c] -= q * a[j][c];
    for (std::size_t c = 0; c < rows; ++c) u[i][c] -= q * u[j][c];
  }
  void col_sub(std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t r = 0; r < rows; ++r) a[r][i] -= q * a[r][j];
    for (std::size_t r = 0; r < cols; ++r) v[r][i] -= q * v[r][j];
  }
  void row_neg(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  }

  void reduce(std::size_t k) {
    for (;;) {
      // find nonzero pivot in the submatrix
      std::size_t pi = k, pj = k;
      bool found = false;
      BigInt best;
      for (std::size_t i = k; i < rows; ++i)
        for (std::size_t j = k; j < cols; ++j)
          if (a[i][j] != 0) {
            BigInt m = big_abs(a[i][j]);
            if (!found || m < best) { found = true; best = m; pi = i; pj = j; }
          }
      if (!found) return;
      row_swap(k, pi);
      col_swap(k, pj);
      if (a[k][k] < 0) row_neg(k);

      bool dirty = false;
      for (std::size_t i = k + 1; i < rows; ++i)
        if (a[i][k] != 0) {
          BigInt q = a[i][k] / a[k][k];
          row_sub(i, k, q);
          if (a[i][k] != 0) dirty = true;
        }
      for (std::size_t j = k + 1; j < cols; ++j)
        if (a[k][j] != 0) {
          BigInt q = a[k][j] / a[k][k];
          col_sub(j, k, q);
          if (a[k][j] != 0) dirty = true;
        }
      if (dirty) continue;

      // pivot must divide every remaining entry
      bool ok = true;
      for (std::size_t i = k + 1; i < rows && ok; ++i)
        for (std::size_t j = k + 1; j < cols && ok; ++j)
          if (a[i][j] % a[k][k] != 0) {
            // fold that row in and restart
            row_sub(k, i, BigInt(-1));
            ok = false;
          }
      if (ok) return;
    }
  }
};

}  // namespace

SmithResult smith_normal_form(IntMat a) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  Worker w{std::move(a), identity_mat(rows), identity_mat(cols), rows, cols};
  std::size_t n = rows < cols ? rows : cols;
  for (std::size_t k = 0; k < n; ++k) w.reduce(k);
  return SmithResult{std::move(w.u), std::move(w.a), std::move(w.v)};
}

BigInt int_det(IntMat a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : BigInt(-a[n - 1][n - 1]);
}

}  // namespace qtwist
