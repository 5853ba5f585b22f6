#include "qtwist/root_datum.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "qtwist/smith.hpp"

namespace qtwist {

namespace {

RatVec basis_vec(std::size_t dim, std::size_t i, Rat v = Rat(1)) {
  RatVec e(dim, Rat(0));
  e[i] = v;
  return e;
}

RatVec vec_add(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

RatVec vec_scale(const Rat& c, const RatVec& a) {
  RatVec r(a);
  for (auto& x : r) x *= c;
  return r;
}

std::string vec_key(const RatVec& v) {
  std::string s;
  for (const auto& x : v) { s += x.str(); s += ';'; }
  return s;
}

/// Inverse of a square rational matrix by Gauss-Jordan.
std::vector<RatVec> rat_inverse(std::vector<RatVec> m) {
  std::size_t n = m.size();
  std::vector<RatVec> inv(n, RatVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m[p][col].is_zero()) ++p;
    if (p == n) throw std::domain_error("rat_inverse: singular matrix");
    std::swap(m[p], m[col]);
    std::swap(inv[p], inv[col]);
    Rat piv = m[col][col];
    for (std::size_t j = 0; j < n; ++j) { m[col][j] /= piv; inv[col][j] /= piv; }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rat f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

void validate_type(LieType t) {
  int cap = LieType::classical_rank_cap();
  switch (t.family) {
    case LieFamily::A: if (t.rank < 1 || t.rank > cap) throw std::invalid_argument("A rank must be in [1," + std::to_string(cap) + "]"); break;
    case LieFamily::B: if (t.rank < 2 || t.rank > cap) throw std::invalid_argument("B rank must be in [2," + std::to_string(cap) + "]"); break;
    case LieFamily::C: if (t.rank < 2 || t.rank > cap) throw std::invalid_argument("C rank must be in [2," + std::to_string(cap) + "]"); break;
    case LieFamily::D: if (t.rank < 3 || t.rank > cap) throw std::invalid_argument("D rank must be in [3," + std::to_string(cap) + "]"); break;
    case LieFamily::E: if (t.rank < 6 || t.rank > 8) throw std::invalid_argument("E rank must be 6, 7 or 8"); break;
    case LieFamily::F: if (t.rank != 4) throw std::invalid_argument("F rank must be 4"); break;
    case LieFamily::G: if (t.rank != 2) throw std::invalid_argument("G rank must be 2"); break;
  }
}

/// Simple roots in ambient coordinates (Bourbaki/Humphreys labeling),
/// together with the ambient scale making <<a,a>> = 2 on short roots.
std::pair<std::vector<RatVec>, Rat> simple_root_realization(LieType t) {
  int n = t.rank;
  std::vector<RatVec> roots;
  Rat scale(1);
  switch (t.family) {
    case LieFamily::A: {
      std::size_t dim = n + 1;
      for (int i = 0; i < n; ++i)
        roots.push_back(vec_sub(basis_vec(dim, i), basis_vec(dim, i + 1)));
      break;
    }
    case LieFamily::B: {
      // short root e_n; <<e_i,e_i>> = 2
      scale = Rat(2);
      for (int i = 0; i + 1 < n; ++i)
        roots.push_back(vec_sub(basis_vec(n, i), basis_vec(n, i + 1)));
      roots.push_back(basis_vec(n, n - 1));
      break;
    }
    case LieFamily::C: {
      // short roots e_i - e_j; long root 2 e_n
      for (int i = 0; i + 1 < n; ++i)
        roots.push_back(vec_sub(basis_vec(n, i), basis_vec(n, i + 1)));
      roots.push_back(basis_vec(n, n - 1, Rat(2)));
      break;
    }
    case LieFamily::D: {
      for (int i = 0; i + 1 < n; ++i)
        roots.push_back(vec_sub(basis_vec(n, i), basis_vec(n, i + 1)));
      roots.push_back(vec_add(basis_vec(n, n - 2), basis_vec(n, n - 1)));
      break;
    }
    case LieFamily::E: {
      std::size_t dim = 8;
      RatVec a1(dim, Rat(-1, 2));
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      roots.push_back(a1);
      roots.push_back(vec_add(basis_vec(dim, 0), basis_vec(dim, 1)));
      for (int i = 3; i <= n; ++i)
        roots.push_back(vec_sub(basis_vec(dim, i - 2), basis_vec(dim, i - 3)));
      break;
    }
    case LieFamily::F: {
      scale = Rat(2);  // short roots e_i and (±e±e±e±e)/2 get norm 2
      roots.push_back(vec_sub(basis_vec(4, 1), basis_vec(4, 2)));
      roots.push_back(vec_sub(basis_vec(4, 2), basis_vec(4, 3)));
      roots.push_back(basis_vec(4, 3));
      RatVec a4(4, Rat(-1, 2));
      a4[0] = Rat(1, 2);
      roots.push_back(a4);
      break;
    }
    case LieFamily::G: {
      // Bourbaki: a1 = e1 - e2 (short), a2 = -2e1 + e2 + e3 (long)
      roots.push_back(vec_sub(basis_vec(3, 0), basis_vec(3, 1)));
      RatVec a2(3, Rat(1));
      a2[0] = Rat(-2);
      roots.push_back(a2);
      break;
    }
  }
  return {roots, scale};
}

std::map<std::string, RootDatum>& datum_cache() {
  static std::map<std::string, RootDatum> cache;
  return cache;
}
std::mutex& datum_mutex() {
  static std::mutex m;
  return m;
}

RootDatum construct(LieType t) {
  validate_type(t);
  RootDatum d;
  d.type = t;
  auto [roots, scale] = simple_root_realization(t);
  d.simple_roots = roots;
  d.ambient_scale = scale;
  d.ambient_dim = roots[0].size();
  std::size_t r = roots.size();

  auto pair_short = [&](const RatVec& x, const RatVec& y) {
    Rat s(0);
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s * d.ambient_scale;
  };

  // Cartan matrix
  d.cartan.assign(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Rat a = Rat(2) * pair_short(roots[i], roots[j]) / pair_short(roots[i], roots[i]);
      d.cartan[i][j] = static_cast<std::int64_t>(a.as_integer());
    }

  // fundamental weights: lambda_i = sum_j (C^{-1})_{ji} alpha_j
  {
    std::vector<RatVec> c(r, RatVec(r, Rat(0)));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) c[i][j] = Rat(d.cartan[i][j]);
    auto cinv = rat_inverse(c);
    for (std::size_t i = 0; i < r; ++i) {
      RatVec w(d.ambient_dim, Rat(0));
      for (std::size_t j = 0; j < r; ++j) w = vec_add(w, vec_scale(cinv[j][i], roots[j]));
      d.fundamental_weights.push_back(std::move(w));
    }
  }

  // all roots by reflection closure
  {
    std::map<std::string, RatVec> all;
    std::vector<RatVec> frontier;
    for (const auto& a : roots) {
      all[vec_key(a)] = a;
      frontier.push_back(a);
    }
    while (!frontier.empty()) {
      std::vector<RatVec> next;
      for (const auto& x : frontier)
        for (const auto& a : roots) {
          Rat coef = Rat(2) * pair_short(x, a) / pair_short(a, a);
          RatVec y = vec_sub(x, vec_scale(coef, a));
          if (all.emplace(vec_key(y), y).second) next.push_back(std::move(y));
        }
      frontier = std::move(next);
    }
    for (auto& [k, v] : all) {
      // positive iff all simple-root coordinates are >= 0
      bool pos = true;
      for (std::size_t j = 0; j < r && pos; ++j) {
        Rat cj = Rat(2) * pair_short(v, d.fundamental_weights[j]) /
                 pair_short(roots[j], roots[j]);
        if (cj < Rat(0)) pos = false;
      }
      if (pos) d.positive_roots.push_back(v);
    }
  }

  // rho
  d.rho_w.assign(d.ambient_dim, Rat(0));
  for (const auto& a : d.positive_roots) d.rho_w = vec_add(d.rho_w, a);
  d.rho_w = vec_scale(Rat(1, 2), d.rho_w);

  // lacing: max simple-root norm / 2
  {
    Rat mx(0);
    for (const auto& a : roots) {
      Rat nn = pair_short(a, a);
      if (nn > mx) mx = nn;
    }
    d.lacing = static_cast<int>((mx / Rat(2)).as_integer());
  }

  // h^v = 1 + <<rho, theta^v>>, theta = highest root
  {
    const RatVec* theta = nullptr;
    Rat best(-1);
    for (const auto& a : d.positive_roots) {
      Rat h(0);
      for (std::size_t j = 0; j < r; ++j)
        h += Rat(2) * pair_short(a, d.fundamental_weights[j]) / pair_short(roots[j], roots[j]);
      if (h > best) { best = h; theta = &a; }
    }
    Rat hv = Rat(1) + Rat(2) * pair_short(d.rho_w, *theta) / pair_short(*theta, *theta);
    d.h_dual = static_cast<int>(hv.as_integer());
  }

  // n_g: lcm of denominators of <<lambda_i, lambda_j>>
  {
    BigInt l = 1;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        l = lcm(l, pair_short(d.fundamental_weights[i], d.fundamental_weights[j]).den());
    d.n_g = static_cast<std::int64_t>(l);
  }

  // dual involution (computed after the datum is usable)
  d.dual_involution.assign(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    Weight li(r, 0);
    li[i] = 1;
    Weight star = dual_weight(d, li);
    int idx = -1;
    for (std::size_t j = 0; j < r; ++j)
      if (star[j] == 1 && coeff_height(star) == 1) idx = static_cast<int>(j);
    if (idx < 0) throw std::logic_error("dual of a fundamental weight is not fundamental");
    d.dual_involution[i] = idx;
  }
  return d;
}

}  // namespace

LieType LieType::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad Lie type: " + s);
  char f = s[0];
  if (f < 'A' || f > 'G') throw std::invalid_argument("bad Lie family: " + s);
  std::size_t used = 0;
  int rank = std::stoi(s.substr(1), &used);
  if (used + 1 != s.size()) throw std::invalid_argument("bad Lie type: " + s);
  LieType t{static_cast<LieFamily>(f), rank};
  validate_type(t);
  return t;
}

int LieType::classical_rank_cap() {
  if (const char* env = std::getenv("QTWIST_MAX_RANK")) {
    int v = std::atoi(env);
    if (v >= 8) return v;
  }
  return 8;
}

Rat RootDatum::pair_short(const RatVec& x, const RatVec& y) const {
  Rat s(0);
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s * ambient_scale;
}

Rat RootDatum::pair_long(const RatVec& x, const RatVec& y) const {
  return pair_short(x, y) / Rat(lacing);
}

RatVec RootDatum::to_ambient(const Weight& w) const {
  if (w.size() != rank()) throw std::invalid_argument("weight has wrong rank");
  RatVec v(ambient_dim, Rat(0));
  for (std::size_t i = 0; i < rank(); ++i)
    if (w[i] != 0) v = vec_add(v, vec_scale(Rat(w[i]), fundamental_weights[i]));
  return v;
}

RatVec RootDatum::root_coords(const RatVec& x) const {
  RatVec c(rank(), Rat(0));
  for (std::size_t j = 0; j < rank(); ++j)
    c[j] = Rat(2) * pair_short(x, fundamental_weights[j]) /
           pair_short(simple_roots[j], simple_roots[j]);
  return c;
}

Rat RootDatum::fundamental_coord(const RatVec& x, std::size_t i) const {
  return Rat(2) * pair_short(x, simple_roots[i]) /
         pair_short(simple_roots[i], simple_roots[i]);
}

std::vector<std::vector<Rat>> RootDatum::gram(FormKind k) const {
  std::vector<std::vector<Rat>> g(rank(), std::vector<Rat>(rank()));
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j)
      g[i][j] = k == FormKind::Short ? pair_short(simple_roots[i], simple_roots[j])
                                     : pair_long(simple_roots[i], simple_roots[j]);
  return g;
}

const RootDatum& build_root_datum(LieType t) {
  std::lock_guard<std::mutex> lock(datum_mutex());
  auto& cache = datum_cache();
  auto it = cache.find(t.str());
  if (it == cache.end()) it = cache.emplace(t.str(), construct(t)).first;
  return it->second;
}

Rat pairing(const RootDatum& d, const Weight& a, const Weight& b, FormKind k) {
  RatVec x = d.to_ambient(a), y = d.to_ambient(b);
  return k == FormKind::Short ? d.pair_short(x, y) : d.pair_long(x, y);
}

Weight dual_weight(const RootDatum& d, const Weight& w) {
  if (!is_dominant(w)) throw std::invalid_argument("dual_weight: weight not dominant");
  // dominicalize -w by simple reflections
  RatVec x = d.to_ambient(w);
  for (auto& c : x) c = -c;
  for (;;) {
    bool moved = false;
    for (std::size_t i = 0; i < d.rank(); ++i) {
      Rat ci = d.fundamental_coord(x, i);
      if (ci < Rat(0)) {
        RatVec ai = d.simple_roots[i];
        Rat coef = Rat(2) * d.pair_short(x, ai) / d.pair_short(ai, ai);
        for (std::size_t j = 0; j < x.size(); ++j) x[j] -= coef * ai[j];
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  Weight out(d.rank(), 0);
  for (std::size_t i = 0; i < d.rank(); ++i)
    out[i] = static_cast<std::int64_t>(d.fundamental_coord(x, i).as_integer());
  return out;
}

namespace {

std::map<std::string, DiscriminantGroup>& disc_cache() {
  static std::map<std::string, DiscriminantGroup> cache;
  return cache;
}

DiscriminantGroup construct_disc(const RootDatum& d) {
  std::size_t r = d.rank();
  // alpha_j = sum_i cartan[i][j] * lambda_i; P/Q = coker of that matrix.
  IntMat c(r, std::vector<BigInt>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) c[i][j] = d.cartan[i][j];
  SmithResult s = smith_normal_form(c);

  DiscriminantGroup out;
  std::vector<std::int64_t> orders;
  for (std::size_t i = 0; i < r; ++i) {
    BigInt di = s.d[i][i];
    if (di > 1) {
      orders.push_back(static_cast<std::int64_t>(di));
      out.proj.push_back(s.u[i]);
    }
  }
  out.group = FinAbGroup(orders);

  // minimal-coefficient-height dominant representatives per coset,
  // tie-broken lexicographically for determinism
  out.reps.assign(out.group.size(), Weight());
  std::vector<bool> have(out.group.size(), false);
  std::int64_t found = 0;
  for (std::int64_t h = 0; found < out.group.size(); ++h) {
    if (h > 64) throw std::logic_error("coset representative search ran away");
    // enumerate dominant weights with coefficient height exactly h, lex order
    std::vector<std::int64_t> stack(r, 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t pos, std::int64_t rem) {
      if (found == out.group.size()) return;
      if (pos + 1 == r) {
        stack[pos] = rem;
        Weight w(stack.begin(), stack.end());
        auto cls = out.class_of(w);
        auto idx = out.group.index_of(cls);
        if (!have[idx]) { have[idx] = true; out.reps[idx] = w; ++found; }
        return;
      }
      // higher weight on earlier indices first, so ties at equal coefficient
      // height resolve to the minuscule generators (lambda_1 for C_n)
      for (std::int64_t k = rem; k >= 0; --k) {
        stack[pos] = k;
        rec(pos + 1, rem - k);
      }
    };
    if (r == 0) {
      if (!have[0]) { have[0] = true; out.reps[0] = Weight(); ++found; }
    } else {
      rec(0, h);
    }
  }
  return out;
}

}  // namespace

GrpElem DiscriminantGroup::class_of(const Weight& w) const {
  GrpElem e(group.rank(), 0);
  for (std::size_t i = 0; i < group.rank(); ++i) {
    BigInt acc = 0;
    for (std::size_t j = 0; j < w.size(); ++j) acc += proj[i][j] * w[j];
    BigInt m = acc % group.orders()[i];
    if (m < 0) m += group.orders()[i];
    e[i] = static_cast<std::int64_t>(m);
  }
  return e;
}

const DiscriminantGroup& discriminant_group(const RootDatum& d) {
  std::lock_guard<std::mutex> lock(datum_mutex());
  auto& cache = disc_cache();
  auto it = cache.find(d.type.str());
  if (it == cache.end()) it = cache.emplace(d.type.str(), construct_disc(d)).first;
  return it->second;
}

bool even_root_pairing(const RootDatum& d) {
  for (std::size_t i = 0; i < d.rank(); ++i)
    for (std::size_t j = 0; j < d.rank(); ++j) {
      Rat p = d.pair_short(d.simple_roots[i], d.simple_roots[j]);
      if (!p.is_integer() || p.as_integer() % 2 != 0) return false;
    }
  return true;
}

int lie_algebra_dim(LieType t) {
  int n = t.rank;
  switch (t.family) {
    case LieFamily::A: return n * (n + 2);
    case LieFamily::B:
    case LieFamily::C: return 2 * n * n + n;
    case LieFamily::D: return 2 * n * n - n;
    case LieFamily::E: return t.rank == 6 ? 78 : (t.rank == 7 ? 133 : 248);
    case LieFamily::F: return 52;
    case LieFamily::G: return 14;
  }
  return 0;
}

}  // namespace qtwist
