#include "qtwist/pbw.hpp"

#include <stdexcept>
#include <tuple>

namespace qtwist {
namespace pbw {

RatFunc qpow(std::int64_t n) { return RatFunc::v_power(2 * n); }
RatFunc qminus_qinv() { return qpow(1) - qpow(-1); }

PBWElem one() { return {{PBWMono{0, 0, 0}, RatFunc(1)}}; }
PBWElem gen_e() { return {{PBWMono{0, 0, 1}, RatFunc(1)}}; }
PBWElem gen_f() { return {{PBWMono{1, 0, 0}, RatFunc(1)}}; }
PBWElem gen_k(int power) { return {{PBWMono{0, power, 0}, RatFunc(1)}}; }

namespace {

// [n]_q with q = v^2
RatFunc qint_q(std::int64_t n) {
  if (n == 0) return RatFunc(0);
  return (qpow(n) - qpow(-n)) / qminus_qinv();
}

void accum(PBWElem& out, const PBWMono& m, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = out.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

void accum2(PBW2Elem& out, const PBWPair& m, const RatFunc& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = out.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

// E * (F^a K^m E^c), using
// [E, F^a] = [a] F^{a-1} (q^{-(a-1)} K - q^{a-1} K^{-1}) / (q - q^{-1})
PBWElem left_e(const PBWMono& mono, const RatFunc& coeff) {
  PBWElem out;
  accum(out, PBWMono{mono.f, mono.k, mono.e + 1}, coeff * qpow(-2 * mono.k));
  if (mono.f > 0) {
    RatFunc bracket = coeff * qint_q(mono.f) / qminus_qinv();
    accum(out, PBWMono{mono.f - 1, mono.k + 1, mono.e}, bracket * qpow(1 - mono.f));
    accum(out, PBWMono{mono.f - 1, mono.k - 1, mono.e}, -(bracket * qpow(mono.f - 1)));
  }
  return out;
}

}  // namespace

PBWElem add(const PBWElem& a, const PBWElem& b) {
  PBWElem out = a;
  for (const auto& [m, c] : b) accum(out, m, c);
  return out;
}

PBWElem sub(const PBWElem& a, const PBWElem& b) {
  PBWElem out = a;
  for (const auto& [m, c] : b) accum(out, m, -c);
  return out;
}

PBWElem scale(const RatFunc& c, const PBWElem& a) {
  PBWElem out;
  for (const auto& [m, x] : a) accum(out, m, c * x);
  return out;
}

PBWElem mul(const PBWElem& a, const PBWElem& b) {
  PBWElem out;
  for (const auto& [ma, ca] : a) {
    PBWElem cur = b;
    for (int i = 0; i < ma.e; ++i) {
      PBWElem next;
      for (const auto& [m, c] : cur)
        for (const auto& [m2, c2] : left_e(m, c)) accum(next, m2, c2);
      cur = std::move(next);
    }
    if (ma.k != 0) {
      PBWElem next;
      for (const auto& [m, c] : cur)
        accum(next, PBWMono{m.f, m.k + ma.k, m.e}, c * qpow(-2LL * ma.k * m.f));
      cur = std::move(next);
    }
    if (ma.f != 0) {
      PBWElem next;
      for (const auto& [m, c] : cur) accum(next, PBWMono{m.f + ma.f, m.k, m.e}, c);
      cur = std::move(next);
    }
    for (const auto& [m, c] : cur) accum(out, m, ca * c);
  }
  return out;
}

PBW2Elem tensor(const PBWElem& a, const PBWElem& b) {
  PBW2Elem out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) accum2(out, {ma, mb}, ca * cb);
  return out;
}

PBW2Elem add2(const PBW2Elem& a, const PBW2Elem& b) {
  PBW2Elem out = a;
  for (const auto& [m, c] : b) accum2(out, m, c);
  return out;
}

PBW2Elem sub2(const PBW2Elem& a, const PBW2Elem& b) {
  PBW2Elem out = a;
  for (const auto& [m, c] : b) accum2(out, m, -c);
  return out;
}

PBW2Elem mul2(const PBW2Elem& a, const PBW2Elem& b) {
  PBW2Elem out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      PBWElem left = mul({{ma.first, RatFunc(1)}}, {{mb.first, RatFunc(1)}});
      PBWElem right = mul({{ma.second, RatFunc(1)}}, {{mb.second, RatFunc(1)}});
      RatFunc c = ca * cb;
      for (const auto& [ml, cl] : left)
        for (const auto& [mr, cr] : right) accum2(out, {ml, mr}, c * cl * cr);
    }
  return out;
}

PBW2Elem swap_legs(const PBW2Elem& a) {
  PBW2Elem out;
  for (const auto& [m, c] : a) accum2(out, {m.second, m.first}, c);
  return out;
}

PBW2Elem coproduct(const PBWElem& a) {
  const PBW2Elem d_e = {{{PBWMono{0, 0, 1}, PBWMono{0, 0, 0}}, RatFunc(1)},
                        {{PBWMono{0, 1, 0}, PBWMono{0, 0, 1}}, RatFunc(1)}};
  const PBW2Elem d_f = {{{PBWMono{1, 0, 0}, PBWMono{0, -1, 0}}, RatFunc(1)},
                        {{PBWMono{0, 0, 0}, PBWMono{1, 0, 0}}, RatFunc(1)}};
  PBW2Elem out;
  for (const auto& [m, c] : a) {
    PBW2Elem cur = {{{PBWMono{0, 0, 0}, PBWMono{0, 0, 0}}, RatFunc(1)}};
    for (int i = 0; i < m.f; ++i) cur = mul2(cur, d_f);
    if (m.k != 0)
      cur = mul2(cur, PBW2Elem{{{PBWMono{0, m.k, 0}, PBWMono{0, m.k, 0}}, RatFunc(1)}});
    for (int i = 0; i < m.e; ++i) cur = mul2(cur, d_e);
    for (const auto& [mm, cc] : cur) accum2(out, mm, c * cc);
  }
  return out;
}

PBWElem tau(const PBWElem& a) {
  PBWElem out;
  for (const auto& [m, c] : a) {
    // tau(F^f K^k E^e) = E^e K^{-k} F^f
    PBWElem t = mul({{PBWMono{0, 0, m.e}, RatFunc(1)}},
                    {{PBWMono{m.f, -m.k, 0}, RatFunc(1)}});
    for (const auto& [mm, cc] : t) accum(out, mm, c * cc);
  }
  return out;
}

PBWElem omega_map(const PBWElem& a) {
  PBWElem out;
  for (const auto& [m, c] : a) {
    // omega(F^f K^k E^e) = E^f K^{-k} F^e
    PBWElem t = mul({{PBWMono{0, 0, m.f}, RatFunc(1)}},
                    mul({{PBWMono{0, -m.k, 0}, RatFunc(1)}},
                        {{PBWMono{m.e, 0, 0}, RatFunc(1)}}));
    for (const auto& [mm, cc] : t) accum(out, mm, c * cc);
  }
  return out;
}

PBW2Elem coproduct_tau(const PBWElem& a) {
  PBW2Elem d = coproduct(tau(a));
  PBW2Elem out;
  for (const auto& [m, c] : d) {
    PBWElem l = tau({{m.first, RatFunc(1)}});
    PBWElem r = tau({{m.second, RatFunc(1)}});
    for (const auto& [ml, cl] : l)
      for (const auto& [mr, cr] : r) accum2(out, {ml, mr}, c * cl * cr);
  }
  return out;
}

namespace {

RatFunc pair_mono(int a, int m, int mp, int c) {
  static std::map<std::tuple<int, int, int, int>, RatFunc> memo;
  auto key = std::make_tuple(a, m, mp, c);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  RatFunc out(0);
  if (a == 0) {
    out = c == 0 ? qpow(-2LL * m * mp) : RatFunc(0);
  } else {
    // split y = F * (F^{a-1} K^m) and pair against Delta(x)
    PBW2Elem dx = coproduct({{PBWMono{0, mp, c}, RatFunc(1)}});
    for (const auto& [mm, cc] : dx) {
      const PBWMono& x1 = mm.first;
      const PBWMono& x2 = mm.second;
      if (x1.f != 0 || x2.f != 0 || x1.e != 1) continue;
      // (F, K^{m1} E) = -q^{2 m1} / (q - q^{-1})
      RatFunc head = -(qpow(2 * x1.k) / qminus_qinv());
      out += cc * head * pair_mono(a - 1, m, x2.k, x2.e);
    }
  }
  memo[key] = out;
  return out;
}

}  // namespace

RatFunc pairing(const PBWElem& y, const PBWElem& x) {
  RatFunc out(0);
  for (const auto& [my, cy] : y) {
    if (my.e != 0) throw std::invalid_argument("pairing: y not in U^{<=0}");
    for (const auto& [mx, cx] : x) {
      if (mx.f != 0) throw std::invalid_argument("pairing: x not in U^{>=0}");
      out += cy * cx * pair_mono(my.f, my.k, mx.k, mx.e);
    }
  }
  return out;
}

RatFunc theta_coeff(int n) {
  if (n == 0) return RatFunc(1);
  RatFunc gram = pair_mono(n, 0, 0, n);
  if (gram.is_zero()) throw std::logic_error("theta_coeff: degenerate pairing");
  return gram.inverse();
}

PBW2Elem theta_truncated(int cap) {
  if (cap < 0 || cap > 16) throw std::invalid_argument("theta truncation cap must be in [0,16]");
  PBW2Elem out;
  for (int n = 0; n <= cap; ++n)
    accum2(out, {PBWMono{n, 0, 0}, PBWMono{0, 0, n}}, theta_coeff(n));
  return out;
}

}  // namespace pbw

bool verify_theta_intertwines(int d_cap) {
  using namespace pbw;
  PBW2Elem t = theta_truncated(d_cap);
  struct Gen {
    PBWElem u;
    std::vector<std::pair<int, int>> deltas;
  };
  std::vector<Gen> gens = {
      {gen_e(), {{1, 0}, {0, 1}}},
      {gen_f(), {{-1, 0}, {0, -1}}},
      {gen_k(1), {{0, 0}}},
      {gen_k(-1), {{0, 0}}},
  };
  for (const auto& g : gens) {
    PBW2Elem diff = sub2(mul2(coproduct(g.u), t), mul2(t, coproduct_tau(g.u)));
    for (const auto& [m, c] : diff) {
      if (c.is_zero()) continue;
      int d1 = m.first.e - m.first.f;
      int d2 = m.second.e - m.second.f;
      bool boundary = false;
      for (auto [e1, e2] : g.deltas) {
        int n_left = e1 - d1;
        int n_right = d2 - e2;
        if (n_left == n_right && n_left > d_cap) boundary = true;
      }
      if (!boundary) return false;
    }
  }
  return true;
}

bool verify_theta_uniqueness(int d_cap) {
  using namespace pbw;
  RatFunc prev(1);  // gamma_0 = 1
  for (int n = 1; n <= d_cap; ++n) {
    PBW2Elem fn_en =
        tensor({{PBWMono{n, 0, 0}, RatFunc(1)}}, {{PBWMono{0, 0, n}, RatFunc(1)}});
    PBW2Elem fe_prev = tensor({{PBWMono{n - 1, 0, 0}, RatFunc(1)}},
                              {{PBWMono{0, 0, n - 1}, RatFunc(1)}});
    PBW2Elem e1 = tensor(gen_e(), one());
    PBW2Elem ke = tensor(gen_k(1), gen_e());
    PBW2Elem kie = tensor(gen_k(-1), gen_e());
    // gamma_n [E x 1, F^n x E^n] = gamma_{n-1} (F^{n-1} x E^{n-1} K^{-1} x E
    //                                            - K x E F^{n-1} x E^{n-1})
    PBW2Elem a = sub2(mul2(e1, fn_en), mul2(fn_en, e1));
    PBW2Elem rhs = sub2(mul2(fe_prev, kie), mul2(ke, fe_prev));
    PBW2Elem rhs_scaled;
    for (const auto& [m, c] : rhs) rhs_scaled[m] = c * prev;
    RatFunc gamma;
    bool have = false;
    for (const auto& [m, c] : a) {
      auto it = rhs_scaled.find(m);
      RatFunc target = it == rhs_scaled.end() ? RatFunc(0) : it->second;
      RatFunc ratio = target / c;
      if (!have) {
        gamma = ratio;
        have = true;
      } else if (!(gamma == ratio)) {
        return false;
      }
    }
    if (!have) return false;
    for (const auto& [m, c] : rhs_scaled)
      if (a.find(m) == a.end() && !c.is_zero()) return false;
    if (!(gamma == theta_coeff(n))) return false;
    prev = gamma;
  }
  return true;
}

bool omega_invariance_check(int d_cap) {
  using namespace pbw;
  for (int n = 0; n <= d_cap; ++n) {
    PBW2Elem theta_n = tensor(scale(theta_coeff(n), {{PBWMono{n, 0, 0}, RatFunc(1)}}),
                              {{PBWMono{0, 0, n}, RatFunc(1)}});
    PBW2Elem lhs;
    for (const auto& [m, c] : theta_n) {
      PBWElem l = omega_map({{m.first, RatFunc(1)}});
      PBWElem r = omega_map({{m.second, RatFunc(1)}});
      for (const auto& [ml, cl] : l)
        for (const auto& [mr, cr] : r) {
          auto [it, fresh] = lhs.emplace(PBWPair{ml, mr}, c * cl * cr);
          if (!fresh) it->second += c * cl * cr;
        }
    }
    for (const auto& [m, c] : sub2(lhs, swap_legs(theta_n)))
      if (!c.is_zero()) return false;
  }
  return true;
}

}  // namespace qtwist
