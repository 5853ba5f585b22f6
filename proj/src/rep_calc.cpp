#include "qtwist/rep_calc.hpp"

#include <algorithm>
#include <mutex>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

namespace qtwist {

namespace {

RatVec vec_sub(const RatVec& a, const RatVec& b) {
  RatVec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

/// Ambient vector -> fundamental coordinates; must be integral.
Weight ambient_to_weight(const RootDatum& d, const RatVec& x) {
  Weight w(d.rank(), 0);
  for (std::size_t i = 0; i < d.rank(); ++i)
    w[i] = static_cast<std::int64_t>(d.fundamental_coord(x, i).as_integer());
  return w;
}

/// Dominant representative of an arbitrary weight (no sign tracking).
Weight dominicalize(const RootDatum& d, Weight w) {
  for (;;) {
    bool moved = false;
    for (std::size_t i = 0; i < d.rank(); ++i)
      if (w[i] < 0) {
        // s_i(w) = w - w_i * alpha_i; alpha_i is the i-th cartan column
        std::int64_t c = w[i];
        for (std::size_t j = 0; j < d.rank(); ++j) w[j] -= c * d.cartan[j][i];
        moved = true;
        break;
      }
    if (!moved) return w;
  }
}

/// Dominant representative with the sign of the Weyl element; returns 0
/// when the weight is fixed by a reflection (lies on a wall).
std::pair<Weight, int> dominicalize_signed(const RootDatum& d, Weight w) {
  int sign = 1;
  for (;;) {
    bool moved = false;
    for (std::size_t i = 0; i < d.rank(); ++i) {
      if (w[i] == 0) continue;
      if (w[i] < 0) {
        std::int64_t c = w[i];
        for (std::size_t j = 0; j < d.rank(); ++j) w[j] -= c * d.cartan[j][i];
        sign = -sign;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  for (std::size_t i = 0; i < d.rank(); ++i)
    if (w[i] == 0) return {w, 0};
  return {w, sign};
}

/// alpha_i in fundamental coordinates is the i-th cartan column.
Weight simple_root_weight(const RootDatum& d, std::size_t i) {
  Weight w(d.rank(), 0);
  for (std::size_t j = 0; j < d.rank(); ++j) w[j] = d.cartan[j][i];
  return w;
}

/// lambda - mu as nonnegative integer root coordinates, or nullopt.
std::optional<std::vector<std::int64_t>> root_cone_coords(const RootDatum& d,
                                                          const Weight& hi,
                                                          const Weight& lo) {
  RatVec diff = vec_sub(d.to_ambient(hi), d.to_ambient(lo));
  RatVec c = d.root_coords(diff);
  std::vector<std::int64_t> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].is_integer() || c[i] < Rat(0)) return std::nullopt;
    out[i] = static_cast<std::int64_t>(c[i].as_integer());
  }
  return out;
}

}  // namespace

GradedSeries& GradedSeries::add(const Rat& e, const BigInt& c) {
  auto [it, fresh] = terms.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  } else if (c == 0) {
    terms.erase(it);
  }
  return *this;
}

GradedSeries GradedSeries::mul_truncated(const GradedSeries& o, const Rat& cutoff) const {
  GradedSeries r;
  for (const auto& [e1, c1] : terms)
    for (const auto& [e2, c2] : o.terms) {
      Rat e = e1 + e2;
      if (e > cutoff) break;  // o.terms sorted ascending
      r.add(e, c1 * c2);
    }
  return r;
}

GradedSeries GradedSeries::shifted(const Rat& offset) const {
  GradedSeries r;
  for (const auto& [e, c] : terms) r.terms.emplace(e + offset, c);
  return r;
}

void GradedSeries::truncate(const Rat& cutoff) {
  for (auto it = terms.begin(); it != terms.end();)
    it = it->first > cutoff ? terms.erase(it) : std::next(it);
}

BigInt weyl_dim(const RootDatum& d, const Weight& w) {
  if (!is_dominant(w)) throw std::invalid_argument("weyl_dim: weight not dominant");
  RatVec x = d.to_ambient(w);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += d.rho_w[i];
  Rat num(1), den(1);
  for (const auto& a : d.positive_roots) {
    num *= d.pair_short(x, a);
    den *= d.pair_short(d.rho_w, a);
  }
  return (num / den).as_integer();
}

namespace {

std::map<std::pair<std::string, Weight>, IrrepInfo>& mult_cache() {
  static std::map<std::pair<std::string, Weight>, IrrepInfo> cache;
  return cache;
}
std::mutex& mult_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

IrrepInfo weight_multiplicities(const RootDatum& d, const Weight& w,
                                const BigInt& dim_cap) {
  if (!is_dominant(w)) throw std::invalid_argument("weight_multiplicities: not dominant");
  {
    std::lock_guard<std::mutex> lock(mult_mutex());
    auto it = mult_cache().find({d.type.str(), w});
    if (it != mult_cache().end()) return it->second;
  }
  BigInt dim = weyl_dim(d, w);
  if (dim > dim_cap) throw std::length_error("weight_multiplicities: dimension cap");

  // dominant weights <= w in the root-cone order, via BFS over simple-root
  // subtractions (intermediate non-dominant nodes included as connectors)
  std::set<Weight> seen;
  std::vector<Weight> dominant;
  std::queue<Weight> queue;
  queue.push(w);
  seen.insert(w);
  while (!queue.empty()) {
    Weight cur = queue.front();
    queue.pop();
    if (is_dominant(cur)) dominant.push_back(cur);
    for (std::size_t i = 0; i < d.rank(); ++i) {
      Weight next = cur;
      Weight alpha = simple_root_weight(d, i);
      for (std::size_t j = 0; j < d.rank(); ++j) next[j] -= alpha[j];
      if (seen.count(next)) continue;
      Weight dom = dominicalize(d, next);
      if (!root_cone_coords(d, w, dom)) continue;  // conjugate escapes the cone
      seen.insert(next);
      queue.push(next);
    }
  }

  // order by depth (height of w - mu in root coordinates)
  std::vector<std::pair<std::int64_t, Weight>> by_depth;
  for (const auto& mu : dominant) {
    auto c = root_cone_coords(d, w, mu);
    std::int64_t h = 0;
    for (auto v : *c) h += v;
    by_depth.emplace_back(h, mu);
  }
  std::sort(by_depth.begin(), by_depth.end());

  // Freudenthal: (|w+rho|^2 - |mu+rho|^2) m(mu) =
  //   2 sum_{a>0} sum_{k>=1} m(mu+ka) <<mu+ka, a>>
  IrrepInfo info;
  info.highest = w;
  std::map<Weight, BigInt> dom_mult;  // on dominant weights
  RatVec wr = d.to_ambient(w);
  for (std::size_t i = 0; i < wr.size(); ++i) wr[i] += d.rho_w[i];
  Rat n2w = d.pair_short(wr, wr);

  auto mult_of = [&](const Weight& any) -> BigInt {
    Weight dom = dominicalize(d, any);
    auto it = dom_mult.find(dom);
    return it == dom_mult.end() ? BigInt(0) : it->second;
  };

  for (const auto& [depth, mu] : by_depth) {
    if (depth == 0) {
      dom_mult[mu] = 1;
      continue;
    }
    RatVec mr = d.to_ambient(mu);
    for (std::size_t i = 0; i < mr.size(); ++i) mr[i] += d.rho_w[i];
    Rat denom = n2w - d.pair_short(mr, mr);
    Rat acc(0);
    RatVec mu_amb = d.to_ambient(mu);
    for (const auto& a : d.positive_roots) {
      Weight aw = ambient_to_weight(d, a);
      Weight cur = mu;
      for (std::int64_t k = 1;; ++k) {
        for (std::size_t j = 0; j < d.rank(); ++j) cur[j] += aw[j];
        if (!root_cone_coords(d, w, dominicalize(d, cur))) break;
        BigInt m = mult_of(cur);
        if (m != 0) {
          Rat ip = d.pair_short(d.to_ambient(cur), a);
          acc += Rat(m) * ip;
        }
      }
    }
    Rat val = Rat(2) * acc / denom;
    dom_mult[mu] = val.as_integer();
  }

  // expand over Weyl orbits
  BigInt total = 0;
  for (const auto& [mu, m] : dom_mult) {
    if (m == 0) continue;
    std::set<Weight> orbit;
    std::queue<Weight> oq;
    oq.push(mu);
    orbit.insert(mu);
    while (!oq.empty()) {
      Weight cur = oq.front();
      oq.pop();
      for (std::size_t i = 0; i < d.rank(); ++i) {
        Weight next = cur;
        std::int64_t c = cur[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j < d.rank(); ++j) next[j] -= c * d.cartan[j][i];
        if (orbit.insert(next).second) oq.push(next);
      }
    }
    for (const auto& v : orbit) info.multiplicities[v] = m;
    total += BigInt(static_cast<long long>(orbit.size())) * m;
  }
  info.dimension = total;
  if (total != dim) throw std::logic_error("Freudenthal total disagrees with Weyl dim");
  {
    std::lock_guard<std::mutex> lock(mult_mutex());
    mult_cache().emplace(std::make_pair(d.type.str(), w), info);
  }
  return info;
}

std::map<Weight, BigInt> tensor_decompose(const RootDatum& d, const Weight& a,
                                          const Weight& b, const BigInt& dim_cap) {
  if (!is_dominant(a) || !is_dominant(b))
    throw std::invalid_argument("tensor_decompose: weights must be dominant");
  BigInt da = weyl_dim(d, a), db = weyl_dim(d, b);
  if (da * db > dim_cap) throw std::length_error("tensor_decompose: dimension cap");
  // expand the smaller factor
  const Weight& big = da >= db ? a : b;
  const Weight& small = da >= db ? b : a;
  IrrepInfo info = weight_multiplicities(d, small, dim_cap);

  Weight rho(d.rank(), 1);
  std::map<Weight, BigInt> out;
  for (const auto& [nu, m] : info.multiplicities) {
    Weight xi = big;
    for (std::size_t i = 0; i < d.rank(); ++i) xi[i] += nu[i] + rho[i];
    auto [dom, sign] = dominicalize_signed(d, xi);
    if (sign == 0) continue;
    for (std::size_t i = 0; i < d.rank(); ++i) dom[i] -= 1;
    auto [it, fresh] = out.emplace(dom, BigInt(sign) * m);
    if (!fresh) it->second += BigInt(sign) * m;
    if (it->second == 0) out.erase(it);
  }
  // conservation of dimension, and positivity
  BigInt total = 0;
  for (const auto& [nu, m] : out) {
    if (m < 0) throw std::logic_error("tensor_decompose: negative multiplicity");
    total += m * weyl_dim(d, nu);
  }
  if (total != da * db) throw std::logic_error("tensor_decompose: dimension mismatch");
  return out;
}

Rat conformal_weight_pair(const RootDatum& d, const Weight& w, std::int64_t n_shift) {
  if (!is_dominant(w)) throw std::invalid_argument("conformal_weight_pair: not dominant");
  RatVec x = d.to_ambient(w);
  Rat ip = d.pair_short(x, x) + Rat(2) * d.pair_short(d.rho_w, x);
  return Rat(n_shift) * ip / Rat(2);
}

std::vector<Weight> dominant_weights_of_height(const RootDatum& d, std::int64_t h) {
  std::vector<Weight> out;
  Weight cur(d.rank(), 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t pos,
                                                           std::int64_t rem) {
    if (pos + 1 == d.rank()) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (std::int64_t k = 0; k <= rem; ++k) {
      cur[pos] = k;
      rec(pos + 1, rem - k);
    }
  };
  if (d.rank() == 0) return out;
  rec(0, h);
  return out;
}

std::vector<CoordRingEntry> coordinate_ring_truncation(const RootDatum& d,
                                                       std::int64_t height_cutoff) {
  if (height_cutoff < 0) throw std::invalid_argument("coordinate_ring_truncation");
  std::vector<CoordRingEntry> out;
  for (std::int64_t h = 0; h <= height_cutoff; ++h)
    for (const auto& w : dominant_weights_of_height(d, h)) {
      Weight ws = dual_weight(d, w);
      BigInt dim = weyl_dim(d, w);
      BigInt dim_dual = weyl_dim(d, ws);
      if (dim != dim_dual)
        throw std::logic_error("dual representation dimension mismatch");
      out.push_back({w, ws, dim * dim_dual});
    }
  return out;
}

GradedSeries weyl_module_graded_dim(const RootDatum& d, const Weight& w,
                                    std::int64_t q_cutoff) {
  // dim L(w) * prod_{n=1}^{cutoff} (1 - q^n)^{-dim g}
  GradedSeries s;
  s.add(Rat(0), weyl_dim(d, w));
  int dim_g = lie_algebra_dim(d.type);
  for (std::int64_t n = 1; n <= q_cutoff; ++n) {
    // multiply by (1-q^n)^{-dim g} = (sum_{j>=0} q^{jn})^{dim g}, truncated
    GradedSeries geom;
    for (std::int64_t j = 0; j * n <= q_cutoff; ++j) geom.add(Rat(j * n), 1);
    for (int rep = 0; rep < dim_g; ++rep) s = s.mul_truncated(geom, Rat(q_cutoff));
  }
  return s;
}

namespace {

/// floor(sqrt(r)) for nonnegative rationals.
BigInt rat_sqrt_floor(const Rat& r) {
  if (r.sign() < 0) throw std::domain_error("rat_sqrt_floor: negative");
  BigInt lo = 0, hi = 1;
  while (Rat(hi * hi) <= r) hi *= 2;
  while (lo + 1 < hi) {
    BigInt mid = (lo + hi) / 2;
    if (Rat(mid * mid) <= r) lo = mid;
    else hi = mid;
  }
  return lo;
}

}  // namespace

GradedSeries theta_series(const EvenLattice& l, const std::vector<Rat>& coset,
                          const Rat& cutoff) {
  GradedSeries out;
  std::size_t n = l.lattice_rank();
  if (n == 0) {
    if (Rat(0) <= cutoff) out.add(Rat(0), 1);
    return out;
  }
  l.validate();
  if (!l.is_positive_definite())
    throw std::domain_error("theta_series: lattice not positive definite");
  if (coset.size() != n) throw std::invalid_argument("theta_series: bad coset vector");

  // rational Cholesky: (x,x) = sum_i d_i (x_i + sum_{j>i} u_ij x_j)^2
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(l.gram[i][j]);
  std::vector<Rat> diag(n);
  std::vector<std::vector<Rat>> u(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    diag[i] = a[i][i];
    for (std::size_t j = i + 1; j < n; ++j) u[i][j] = a[i][j] / a[i][i];
    for (std::size_t r = i + 1; r < n; ++r)
      for (std::size_t c = i + 1; c < n; ++c)
        a[r][c] -= a[r][i] * a[i][c] / a[i][i];
  }

  // enumerate x = coset + z, z integral, from the last coordinate inward
  std::vector<Rat> x(n, Rat(0));
  Rat two_cutoff = cutoff * Rat(2);
  std::function<void(std::size_t, Rat)> rec = [&](std::size_t pos, Rat budget) {
    std::size_t i = pos - 1;
    // offset contributed by already-fixed coordinates (j > i)
    Rat off(0);
    for (std::size_t j = i + 1; j < n; ++j) off += u[i][j] * x[j];
    // d_i (x_i + off)^2 <= budget, x_i = coset_i + z
    Rat bound2 = budget / diag[i];
    BigInt s = rat_sqrt_floor(bound2);
    // z range: |coset_i + z + off| <= sqrt(bound2)
    Rat center = coset[i] + off;
    BigInt zlo = (Rat(-1) * Rat(s) - Rat(1) - center).floor();
    BigInt zhi = (Rat(s) + Rat(1) - center).floor() + 1;
    for (BigInt z = zlo; z <= zhi; ++z) {
      x[i] = coset[i] + Rat(z);
      Rat term = diag[i] * (x[i] + off) * (x[i] + off);
      if (term > budget) continue;
      if (i == 0) {
        // total norm = 2*cutoff - remaining budget is tracked implicitly;
        // recompute exactly for safety
        Rat norm = l.form(x, x);
        if (norm / Rat(2) <= cutoff) out.add(norm / Rat(2), 1);
      } else {
        rec(i, budget - term);
      }
    }
  };
  if (two_cutoff >= Rat(0)) rec(n, two_cutoff);
  return out;
}

}  // namespace qtwist
