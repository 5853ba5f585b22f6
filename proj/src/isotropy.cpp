#include "qtwist/isotropy.hpp"

namespace qtwist {

std::optional<SuperIsotropic> forced_super_isotropic(const QuadForm& q,
                                                     const Subgroup& sub) {
  const FinAbGroup& g = q.group;
  SuperIsotropic si;
  si.sub = sub;
  si.parity.resize(sub.order());
  std::vector<GrpElem> elems;
  elems.reserve(sub.order());
  for (auto idx : sub.elem_indices) elems.push_back(g.element(idx));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const PiExp& v = q.at(elems[i]);
    if (v.is_one()) si.parity[i] = 0;
    else if (v.is_minus_one()) si.parity[i] = 1;
    else return std::nullopt;  // value outside {1,-1}
  }
  // additivity of the forced parity
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      std::int64_t p = sub.position(g.index_of(g.add(elems[i], elems[j])));
      if ((si.parity[i] + si.parity[j]) % 2 != si.parity[p]) return std::nullopt;
    }
  si.isotropic = true;
  for (int b : si.parity)
    if (b) { si.isotropic = false; break; }
  return si;
}

std::vector<SuperIsotropic> super_isotropic_subspaces(const QuadForm& q,
                                                      std::vector<Subgroup>* rejected) {
  std::vector<SuperIsotropic> out;
  for (const Subgroup& sub : enumerate_subgroups(q.group, group_size_cap())) {
    auto si = forced_super_isotropic(q, sub);
    if (si) {
      out.push_back(std::move(*si));
    } else if (rejected) {
      // distinguish "values outside {1,-1}" from "parity not additive"
      bool values_ok = true;
      for (auto idx : sub.elem_indices)
        if (!q.at_index(idx).is_real_sign()) { values_ok = false; break; }
      if (values_ok) rejected->push_back(sub);
    }
  }
  return out;
}

AlgebraObject build_s_algebra(const SuperIsotropic& si, const AbCocycle& x) {
  AlgebraObject s;
  s.sub = si.sub;
  s.parity = si.parity;
  s.mult = trivialize_on_isotropic(x, si.sub, si.parity);
  return s;
}

bool verify_supercommutative(const AlgebraObject& s, const AbCocycle& x) {
  const FinAbGroup& g = x.group;
  std::size_t m = s.sub.order();
  std::vector<GrpElem> elems;
  elems.reserve(m);
  for (auto idx : s.sub.elem_indices) elems.push_back(g.element(idx));
  auto pos = [&](const GrpElem& e) {
    return static_cast<std::size_t>(s.sub.position(g.index_of(e)));
  };
  std::size_t zero = pos(g.zero());

  // SCA1: unit law
  for (std::size_t i = 0; i < m; ++i)
    if (!s.mult.at_pos(i, zero).is_one() || !s.mult.at_pos(zero, i).is_one())
      return false;

  // SCA2: k(b,c) k(a,b+c) = omega(a,b,c) k(a,b) k(a+b,c)
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      std::size_t ij = pos(g.add(elems[i], elems[j]));
      for (std::size_t l = 0; l < m; ++l) {
        std::size_t jl = pos(g.add(elems[j], elems[l]));
        PiExp lhs = s.mult.at_pos(j, l) * s.mult.at_pos(i, jl);
        PiExp rhs = x.w(elems[i], elems[j], elems[l]) * s.mult.at_pos(i, j) *
                    s.mult.at_pos(ij, l);
        if (lhs != rhs) return false;
      }
    }

  // SCA3: c(a,b) k(b,a) = (-1)^{p(a)p(b)} k(a,b)
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      PiExp lhs = x.cc(elems[i], elems[j]) * s.mult.at_pos(j, i);
      PiExp rhs = s.mult.at_pos(i, j);
      if (s.parity[i] && s.parity[j]) rhs = rhs * PiExp::minus_one();
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace qtwist
