#include "qtwist/quad_form.hpp"

#include <stdexcept>

#include "qtwist/root_datum.hpp"
#include "qtwist/smith.hpp"

namespace qtwist {

bool Bicharacter::is_biadditive() const {
  std::int64_t n = group.size();
  for (std::int64_t i = 0; i < n; ++i) {
    GrpElem a = group.element(i);
    for (std::int64_t j = 0; j < n; ++j) {
      GrpElem b = group.element(j);
      for (std::int64_t k = 0; k < n; ++k) {
        GrpElem c = group.element(k);
        if (at(group.add(a, b), c) != at(a, c) * at(b, c)) return false;
        if (at(a, group.add(b, c)) != at(a, b) * at(a, c)) return false;
      }
    }
  }
  return true;
}

bool Bicharacter::is_symmetric() const {
  std::int64_t n = group.size();
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j)
      if (table[i * n + j] != table[j * n + i]) return false;
  return true;
}

bool QuadForm::is_valid() const {
  std::int64_t n = group.size();
  if (static_cast<std::int64_t>(table.size()) != n) return false;
  if (!table[group.index_of(group.zero())].is_one()) return false;
  for (std::int64_t i = 0; i < n; ++i) {
    GrpElem e = group.element(i);
    if (at(group.neg(e)) != table[i]) return false;
  }
  Bicharacter b = bicharacter_of(*this);
  return b.is_symmetric() && b.is_biadditive();
}

QuadForm QuadForm::direct_sum(const QuadForm& o) const {
  QuadForm r;
  r.group = group.direct_sum(o.group);
  r.table.resize(r.group.size());
  for (std::int64_t i = 0; i < r.group.size(); ++i) {
    GrpElem e = r.group.element(i);
    GrpElem a(e.begin(), e.begin() + group.rank());
    GrpElem b(e.begin() + group.rank(), e.end());
    r.table[i] = (group.rank() ? at(a) : PiExp::one()) *
                 (o.group.rank() ? o.at(b) : PiExp::one());
  }
  return r;
}

QuadForm QuadForm::product(const QuadForm& o) const {
  if (!(group == o.group)) throw std::invalid_argument("QuadForm::product: group mismatch");
  QuadForm r{group, table};
  for (std::size_t i = 0; i < table.size(); ++i) r.table[i] = table[i] * o.table[i];
  return r;
}

QuadForm QuadForm::power(std::int64_t n) const {
  QuadForm r{group, table};
  for (std::size_t i = 0; i < table.size(); ++i) r.table[i] = table[i].pow(BigInt(n));
  return r;
}

QuadForm QuadForm::trivial(FinAbGroup g) {
  QuadForm q;
  q.table.assign(g.size(), PiExp::one());
  q.group = std::move(g);
  return q;
}

Bicharacter bicharacter_of(const QuadForm& q) {
  std::int64_t n = q.group.size();
  Bicharacter b;
  b.group = q.group;
  b.table.resize(n * n);
  for (std::int64_t i = 0; i < n; ++i) {
    GrpElem x = q.group.element(i);
    for (std::int64_t j = 0; j < n; ++j) {
      GrpElem y = q.group.element(j);
      b.table[i * n + j] = q.at(q.group.add(x, y)) / (q.table[i] * q.table[j]);
    }
  }
  return b;
}

void EvenLattice::validate() const {
  std::size_t n = gram.size();
  for (const auto& row : gram)
    if (row.size() != n) throw std::invalid_argument("EvenLattice: gram not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i][i] % 2 != 0)
      throw std::invalid_argument("EvenLattice: odd diagonal entry");
    for (std::size_t j = 0; j < n; ++j)
      if (gram[i][j] != gram[j][i])
        throw std::invalid_argument("EvenLattice: gram not symmetric");
  }
  if (n > 0 && det() == 0) throw std::invalid_argument("EvenLattice: degenerate gram");
}

BigInt EvenLattice::det() const { return int_det(gram); }

bool EvenLattice::is_positive_definite() const {
  // leading principal minors all positive
  for (std::size_t k = 1; k <= gram.size(); ++k) {
    IntMat sub(k, std::vector<BigInt>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = gram[i][j];
    if (int_det(sub) <= 0) return false;
  }
  return true;
}

Rat EvenLattice::form(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
  Rat s(0);
  for (std::size_t i = 0; i < gram.size(); ++i)
    for (std::size_t j = 0; j < gram.size(); ++j)
      s += x[i] * Rat(gram[i][j]) * y[j];
  return s;
}

std::vector<Rat> DiscriminantForm::rep(const GrpElem& e) const {
  std::vector<Rat> v(ambient_rank, Rat(0));
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < ambient_rank; ++j) v[j] += Rat(e[i]) * gen_reps[i][j];
  return v;
}

DiscriminantForm discriminant_form(const EvenLattice& l) {
  l.validate();
  if (l.lattice_rank() > 0) {
    BigInt det = l.det();
    if (det < 0) det = -det;
    if (det > group_size_cap())
      throw std::length_error("discriminant group exceeds the size cap");
  }
  std::size_t n = l.lattice_rank();
  DiscriminantForm out;
  out.ambient_rank = n;
  if (n == 0) {
    out.group = FinAbGroup();
    out.q = QuadForm::trivial(out.group);
    return out;
  }
  // M^v/M = Z^n / gram*Z^n; the class of y in Z^n is the dual vector
  // x = gram^{-1} y. Smith: U*G*V = D, classes y -> U*y mod D.
  SmithResult s = smith_normal_form(l.gram);
  std::vector<std::int64_t> orders;
  std::vector<std::size_t> kept_rows;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt di = s.d[i][i];
    if (di < 0) di = -di;
    if (di > 1) {
      orders.push_back(static_cast<std::int64_t>(di));
      kept_rows.push_back(i);
    }
  }
  out.group = FinAbGroup(orders);

  // generator i of the group is the class of y = U^{-1} e_{kept_rows[i]}.
  // With UGV = D, U^{-1} = G*V*D^{-1} on kept rows: U^{-1} e_i = G*V*e_i/d_i,
  // so the dual vector is x = G^{-1} U^{-1} e_i = V*e_i / d_i.
  for (std::size_t t = 0; t < kept_rows.size(); ++t) {
    std::size_t i = kept_rows[t];
    BigInt di = s.d[i][i];
    if (di < 0) di = -di;
    std::vector<Rat> x(n, Rat(0));
    for (std::size_t r = 0; r < n; ++r) x[r] = Rat(s.v[r][i], di);
    out.gen_reps.push_back(std::move(x));
  }

  out.q.group = out.group;
  out.q.table.resize(out.group.size());
  for (std::int64_t idx = 0; idx < out.group.size(); ++idx) {
    std::vector<Rat> x = out.rep(out.group.element(idx));
    out.q.table[idx] = PiExp(l.form(x, x));
  }
  if (!out.q.is_valid()) throw std::logic_error("discriminant form failed validation");
  return out;
}

QuadForm quad_form_lie(const RootDatum& d, std::int64_t n_shift) {
  const DiscriminantGroup& dg = discriminant_group(d);
  QuadForm q;
  q.group = dg.group;
  q.table.resize(q.group.size());
  for (std::int64_t i = 0; i < q.group.size(); ++i) {
    Rat norm = pairing(d, dg.reps[i], dg.reps[i], FormKind::Short);
    q.table[i] = PiExp(Rat(n_shift) * norm);
  }
  if (!q.is_valid()) throw std::logic_error("quad_form_lie failed validation");
  return q;
}

}  // namespace qtwist
