#include "qtwist/fin_ab_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "qtwist/smith.hpp"

namespace qtwist {

FinAbGroup::FinAbGroup(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
  for (auto d : orders_) {
    if (d < 2) throw std::invalid_argument("FinAbGroup: factor orders must be >= 2");
    size_ *= d;
  }
}

GrpElem FinAbGroup::reduce(GrpElem e) const {
  if (e.size() != orders_.size()) throw std::invalid_argument("FinAbGroup: bad element size");
  for (std::size_t i = 0; i < e.size(); ++i) {
    e[i] %= orders_[i];
    if (e[i] < 0) e[i] += orders_[i];
  }
  return e;
}

GrpElem FinAbGroup::add(const GrpElem& a, const GrpElem& b) const {
  GrpElem r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return reduce(std::move(r));
}

GrpElem FinAbGroup::neg(const GrpElem& a) const {
  GrpElem r(a);
  for (auto& x : r) x = -x;
  return reduce(std::move(r));
}

GrpElem FinAbGroup::smul(std::int64_t k, const GrpElem& a) const {
  GrpElem r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (k % orders_[i]) * (r[i] % orders_[i]);
  return reduce(std::move(r));
}

std::int64_t FinAbGroup::element_order(const GrpElem& a) const {
  std::int64_t o = 1;
  GrpElem e = reduce(a);
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::int64_t d = orders_[i] / std::gcd(orders_[i], e[i]);
    o = std::lcm(o, d);
  }
  return o;
}

std::int64_t FinAbGroup::index_of(const GrpElem& e) const {
  GrpElem r = reduce(e);
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < r.size(); ++i) idx = idx * orders_[i] + r[i];
  return idx;
}

GrpElem FinAbGroup::element(std::int64_t idx) const {
  GrpElem e(orders_.size(), 0);
  for (std::size_t i = orders_.size(); i-- > 0;) {
    e[i] = idx % orders_[i];
    idx /= orders_[i];
  }
  return e;
}

std::vector<std::int64_t> FinAbGroup::subgroup_closure(
    const std::vector<GrpElem>& gens) const {
  std::set<std::int64_t> seen{index_of(zero())};
  std::vector<GrpElem> frontier{zero()};
  while (!frontier.empty()) {
    std::vector<GrpElem> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        GrpElem s = add(e, g);
        if (seen.insert(index_of(s)).second) next.push_back(std::move(s));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::int64_t> FinAbGroup::invariant_factors() const {
  if (orders_.empty()) return {};
  IntMat d(orders_.size(), std::vector<BigInt>(orders_.size(), 0));
  for (std::size_t i = 0; i < orders_.size(); ++i) d[i][i] = orders_[i];
  SmithResult s = smith_normal_form(std::move(d));
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    BigInt di = s.d[i][i];
    if (di > 1) out.push_back(static_cast<std::int64_t>(di));
  }
  return out;
}

FinAbGroup FinAbGroup::direct_sum(const FinAbGroup& o) const {
  std::vector<std::int64_t> orders = orders_;
  orders.insert(orders.end(), o.orders_.begin(), o.orders_.end());
  return FinAbGroup(std::move(orders));
}

std::string FinAbGroup::elem_str(const GrpElem& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

bool Subgroup::contains_index(std::int64_t idx) const {
  return std::binary_search(elem_indices.begin(), elem_indices.end(), idx);
}

std::int64_t Subgroup::position(std::int64_t idx) const {
  auto it = std::lower_bound(elem_indices.begin(), elem_indices.end(), idx);
  if (it == elem_indices.end() || *it != idx) return -1;
  return it - elem_indices.begin();
}

Subgroup make_subgroup(const FinAbGroup& g, const std::vector<GrpElem>& gens) {
  Subgroup s;
  s.generators = gens;
  for (auto& e : s.generators) e = g.reduce(e);
  s.elem_indices = g.subgroup_closure(s.generators);
  return s;
}

std::vector<Subgroup> enumerate_subgroups(const FinAbGroup& g, std::int64_t max_order) {
  if (g.size() > max_order)
    throw std::length_error("enumerate_subgroups: group size exceeds cap");
  std::map<std::vector<std::int64_t>, Subgroup> found;
  Subgroup trivial = make_subgroup(g, {});
  found[trivial.elem_indices] = trivial;
  std::vector<Subgroup> frontier{trivial};
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const auto& s : frontier) {
      for (std::int64_t idx = 0; idx < g.size(); ++idx) {
        if (s.contains_index(idx)) continue;
        std::vector<GrpElem> gens = s.generators;
        gens.push_back(g.element(idx));
        Subgroup t = make_subgroup(g, gens);
        if (found.emplace(t.elem_indices, t).second) next.push_back(std::move(t));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& [k, v] : found) out.push_back(std::move(v));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elem_indices < b.elem_indices;
  });
  return out;
}

std::int64_t group_size_cap() {
  if (const char* env = std::getenv("QTWIST_MAX_GROUP")) {
    std::int64_t v = std::atoll(env);
    if (v > 0) return v;
  }
  return 512;
}

}  // namespace qtwist
