#include "qtwist/sl2_module.hpp"

#include <stdexcept>

namespace qtwist {

namespace {

RatFunc qint_q(std::int64_t n) {
  if (n == 0) return RatFunc(0);
  return (pbw::qpow(n) - pbw::qpow(-n)) / pbw::qminus_qinv();
}

}  // namespace

Mat mat_identity(std::size_t n) {
  Mat m(n, std::vector<RatFunc>(n, RatFunc(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = RatFunc(1);
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  std::size_t n = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  Mat out(n, std::vector<RatFunc>(c, RatFunc(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < c; ++j) {
        if (b[t][j].is_zero()) continue;
        out[i][j] += a[i][t] * b[t][j];
      }
    }
  return out;
}

Mat mat_sub(const Mat& a, const Mat& b) {
  Mat out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b[i][j];
  return out;
}

bool mat_eq(const Mat& a, const Mat& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j]) return false;
  }
  return true;
}

Mat mat_inverse(const Mat& a) {
  std::size_t n = a.size();
  Mat m = a, inv = mat_identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col].is_zero()) ++p;
    if (p == n) throw std::domain_error("mat_inverse: singular matrix");
    std::swap(m[p], m[col]);
    std::swap(inv[p], inv[col]);
    RatFunc piv = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] = m[col][j] / piv;
      inv[col][j] = inv[col][j] / piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      RatFunc f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

Mat mat_kron(const Mat& a, const Mat& b) {
  std::size_t na = a.size(), nb = b.size();
  Mat out(na * nb, std::vector<RatFunc>(na * nb, RatFunc(0)));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      if (a[i][j].is_zero()) continue;
      for (std::size_t s = 0; s < nb; ++s)
        for (std::size_t t = 0; t < nb; ++t) {
          if (b[s][t].is_zero()) continue;
          out[i * nb + s][j * nb + t] = a[i][j] * b[s][t];
        }
    }
  return out;
}

Mat Sl2Module::act_e() const {
  Mat m(dim(), std::vector<RatFunc>(dim(), RatFunc(0)));
  for (std::size_t j = 1; j < dim(); ++j)
    m[j - 1][j] = qint_q(highest - static_cast<std::int64_t>(j) + 1);
  return m;
}

Mat Sl2Module::act_f() const {
  Mat m(dim(), std::vector<RatFunc>(dim(), RatFunc(0)));
  for (std::size_t j = 0; j + 1 < dim(); ++j)
    m[j + 1][j] = qint_q(static_cast<std::int64_t>(j) + 1);
  return m;
}

Mat Sl2Module::act_k(int power) const {
  Mat m(dim(), std::vector<RatFunc>(dim(), RatFunc(0)));
  for (std::size_t j = 0; j < dim(); ++j) m[j][j] = pbw::qpow(power * weight(j));
  return m;
}

Mat Sl2Module::act(const PBWElem& u) const {
  Mat out(dim(), std::vector<RatFunc>(dim(), RatFunc(0)));
  Mat e = act_e(), f = act_f();
  for (const auto& [mono, c] : u) {
    // F^f K^k E^e applies E^e first
    Mat ordered = mat_identity(dim());
    for (int i = 0; i < mono.e; ++i) ordered = mat_mul(ordered, e);
    ordered = mat_mul(act_k(mono.k), ordered);
    Mat ff = mat_identity(dim());
    for (int i = 0; i < mono.f; ++i) ff = mat_mul(f, ff);
    ordered = mat_mul(ff, ordered);
    for (std::size_t r = 0; r < dim(); ++r)
      for (std::size_t s = 0; s < dim(); ++s) out[r][s] += c * ordered[r][s];
  }
  return out;
}

bool Sl2Module::relations_hold() const {
  Mat e = act_e(), f = act_f(), k = act_k(1), kinv = act_k(-1);
  if (!mat_eq(mat_mul(k, kinv), mat_identity(dim()))) return false;
  // K E K^{-1} = q^2 E, K F K^{-1} = q^{-2} F
  Mat lhs = mat_mul(k, mat_mul(e, kinv));
  Mat rhs = e;
  for (auto& row : rhs)
    for (auto& x : row) x *= pbw::qpow(2);
  if (!mat_eq(lhs, rhs)) return false;
  lhs = mat_mul(k, mat_mul(f, kinv));
  rhs = f;
  for (auto& row : rhs)
    for (auto& x : row) x *= pbw::qpow(-2);
  if (!mat_eq(lhs, rhs)) return false;
  // [E, F] = (K - K^{-1}) / (q - q^{-1})
  Mat comm = mat_sub(mat_mul(e, f), mat_mul(f, e));
  Mat target = mat_sub(k, kinv);
  for (auto& row : target)
    for (auto& x : row) x = x / pbw::qminus_qinv();
  return mat_eq(comm, target);
}

Mat act2(const PBW2Elem& u, const Sl2Module& m, const Sl2Module& n) {
  std::size_t dim = m.dim() * n.dim();
  Mat out(dim, std::vector<RatFunc>(dim, RatFunc(0)));
  for (const auto& [pair, c] : u) {
    Mat a = m.act({{pair.first, RatFunc(1)}});
    Mat b = n.act({{pair.second, RatFunc(1)}});
    Mat kr = mat_kron(a, b);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t s = 0; s < dim; ++s)
        if (!kr[r][s].is_zero()) out[r][s] += c * kr[r][s];
  }
  return out;
}

Mat f_rho_matrix(const Sl2Module& m, const Sl2Module& n) {
  std::size_t dim = m.dim() * n.dim();
  Mat out(dim, std::vector<RatFunc>(dim, RatFunc(0)));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < n.dim(); ++j)
      out[i * n.dim() + j][i * n.dim() + j] =
          RatFunc::v_power(-m.weight(i) * n.weight(j));
  return out;
}

Mat theta_matrix(const Sl2Module& m, const Sl2Module& n) {
  int cap = std::max(m.highest, n.highest);
  return act2(pbw::theta_truncated(cap), m, n);
}

Mat rmatrix_action(const Sl2Module& m, const Sl2Module& n) {
  if (m.dim() > 8 || n.dim() > 8)
    throw std::invalid_argument("rmatrix_action: module dimension cap is 8");
  return mat_inverse(mat_mul(theta_matrix(m, n), f_rho_matrix(m, n)));
}

namespace {

Mat delta_action(const PBWElem& x, const Sl2Module& m, const Sl2Module& n) {
  return act2(pbw::coproduct(x), m, n);
}

Mat delta_op_action(const PBWElem& x, const Sl2Module& m, const Sl2Module& n) {
  return act2(pbw::swap_legs(pbw::coproduct(x)), m, n);
}

}  // namespace

bool r1_check(const Sl2Module& m, const Sl2Module& n) {
  Mat r = rmatrix_action(m, n);
  Mat rinv = mat_inverse(r);
  for (const PBWElem& x : {pbw::gen_e(), pbw::gen_f(), pbw::gen_k(1)}) {
    Mat lhs = mat_mul(r, mat_mul(delta_action(x, m, n), rinv));
    if (!mat_eq(lhs, delta_op_action(x, m, n))) return false;
  }
  return true;
}

bool yang_baxter_check(const Sl2Module& v) {
  std::size_t d = v.dim();
  Mat r = rmatrix_action(v, v);
  Mat id(mat_identity(d));
  Mat r12 = mat_kron(r, id);
  Mat r23 = mat_kron(id, r);
  // r13 = (id x P)(r x id)(id x P)
  Mat p(d * d, std::vector<RatFunc>(d * d, RatFunc(0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) p[i * d + j][j * d + i] = RatFunc(1);
  Mat idp = mat_kron(id, p);
  Mat r13 = mat_mul(idp, mat_mul(r12, idp));
  Mat lhs = mat_mul(r12, mat_mul(r13, r23));
  Mat rhs = mat_mul(r23, mat_mul(r13, r12));
  return mat_eq(lhs, rhs);
}

bool braiding_eigencheck_sl2() {
  Sl2Module v{1};
  Mat r = rmatrix_action(v, v);
  Mat p(4, std::vector<RatFunc>(4, RatFunc(0)));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) p[i * 2 + j][j * 2 + i] = RatFunc(1);
  Mat b = mat_mul(p, r);

  // (B - v)(B + v^{-3}) = 0, and the braiding is not scalar
  RatFunc vp = RatFunc::v_power(1), vm3 = RatFunc::v_power(-3);
  Mat m1 = b, m2 = b;
  for (std::size_t i = 0; i < 4; ++i) {
    m1[i][i] -= vp;
    m2[i][i] += vm3;
  }
  Mat zero(4, std::vector<RatFunc>(4, RatFunc(0)));
  if (!mat_eq(mat_mul(m1, m2), zero)) return false;
  if (mat_eq(m1, zero) || mat_eq(m2, zero)) return false;

  // symmetric constituent L(2 lambda_1): highest vector v0 (x) v0 and its
  // F-orbit must be v-eigenvectors
  Sl2Module v2{1};
  Mat df = act2(pbw::coproduct(pbw::gen_f()), v2, v2);
  std::vector<std::vector<RatFunc>> sym_basis;
  std::vector<RatFunc> cur(4, RatFunc(0));
  cur[0] = RatFunc(1);
  for (int step = 0; step < 3; ++step) {
    sym_basis.push_back(cur);
    std::vector<RatFunc> next(4, RatFunc(0));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) next[i] += df[i][j] * cur[j];
    cur = next;
  }
  for (const auto& vec : sym_basis) {
    std::vector<RatFunc> bv(4, RatFunc(0));
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) bv[i] += b[i][j] * vec[j];
    for (std::size_t i = 0; i < 4; ++i)
      if (!(bv[i] == vp * vec[i])) return false;
  }
  // antisymmetric line: project v0 x v1 with (B - v); the image must be a
  // nonzero eigenvector of eigenvalue -v^{-3}
  std::vector<RatFunc> w(4, RatFunc(0));
  w[1] = RatFunc(1);
  std::vector<RatFunc> anti(4, RatFunc(0));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) anti[i] += m1[i][j] * w[j];
  bool nonzero = false;
  for (const auto& x : anti)
    if (!x.is_zero()) nonzero = true;
  if (!nonzero) return false;
  std::vector<RatFunc> bv(4, RatFunc(0));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) bv[i] += b[i][j] * anti[j];
  for (std::size_t i = 0; i < 4; ++i)
    if (!(bv[i] == -(vm3 * anti[i]))) return false;
  return true;
}

bool f_transform_check(int cap) {
  for (int m : {1, 2}) {
    Sl2Module mod{m};
    for (int n = 0; n <= cap; ++n) {
      Mat f = f_rho_matrix(mod, mod);
      Mat finv = mat_inverse(f);
      Mat fe = act2(pbw::tensor({{PBWMono{n, 0, 0}, RatFunc(1)}},
                                {{PBWMono{0, 0, n}, RatFunc(1)}}),
                    mod, mod);
      Mat lhs = mat_mul(finv, mat_mul(fe, f));
      Mat rhs = act2(pbw::tensor({{PBWMono{n, n, 0}, RatFunc(1)}},
                                 {{PBWMono{0, -n, n}, RatFunc(1)}}),
                     mod, mod);
      if (!mat_eq(lhs, rhs)) return false;
    }
  }
  return true;
}

}  // namespace qtwist
