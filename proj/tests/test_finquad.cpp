#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "qtwist/quad_form.hpp"
#include "qtwist/root_datum.hpp"

using namespace qtwist;

namespace {

QuadForm lie_form(const std::string& type, std::int64_t n) {
  return quad_form_lie(build_root_datum(LieType::parse(type)), n);
}

PiExp gen_value(const QuadForm& q) {
  // value at the distinguished generator (first coordinate vector)
  GrpElem e = q.group.zero();
  REQUIRE(!e.empty());
  e[0] = 1;
  return q.at(e);
}

}  // namespace

TEST_CASE("finite abelian groups") {
  FinAbGroup g({2, 4});
  CHECK(g.size() == 8);
  CHECK(g.add({1, 3}, {1, 2}) == GrpElem{0, 1});
  CHECK(g.neg({1, 1}) == GrpElem{1, 3});
  CHECK(g.smul(3, {1, 2}) == GrpElem{1, 2});
  CHECK(g.element_order({1, 2}) == 2);
  CHECK(g.element_order({0, 1}) == 4);
  CHECK(g.element(g.index_of({1, 3})) == GrpElem{1, 3});
  CHECK(FinAbGroup({2, 3}).invariant_factors() == std::vector<std::int64_t>{6});
  CHECK(FinAbGroup({2, 4}).invariant_factors() == std::vector<std::int64_t>{2, 4});
  CHECK(FinAbGroup({6, 4}).invariant_factors() == std::vector<std::int64_t>{2, 12});
  CHECK(FinAbGroup({2, 3}).isomorphic_to(FinAbGroup({6})));
  CHECK_THROWS(FinAbGroup({1}));
}

TEST_CASE("quadratic form from Lie data: Table 3 values") {
  // (A1, N=1): Q(lambda_1) = i
  CHECK(gen_value(lie_form("A1", 1)) == PiExp(1, 2));
  // (E7, N=1): Q(lambda_7) = -i
  CHECK(gen_value(lie_form("E7", 1)) == PiExp(3, 2));
  // N = 0: trivial form
  for (const auto& v : lie_form("D5", 0).table) CHECK(v.is_one());

  // full Table 3 row data
  for (int n = 2; n <= 8; ++n)  // A_{n-1}
    CHECK(gen_value(lie_form("A" + std::to_string(n - 1), 1)) == PiExp(n - 1, n));
  for (int n = 2; n <= 8; ++n)  // B_n: i^n
    CHECK(gen_value(lie_form("B" + std::to_string(n), 1)) == PiExp(n, 2));
  for (int n = 2; n <= 8; ++n)  // C_n: -1
    CHECK(gen_value(lie_form("C" + std::to_string(n), 1)) == PiExp::minus_one());
  for (int n = 2; n <= 4; ++n) {  // D_{2n}: Q(lambda_1) = -1, spins i^n
    QuadForm q = lie_form("D" + std::to_string(2 * n), 1);
    const auto& dg = discriminant_group(build_root_datum(LieType{LieFamily::D, 2 * n}));
    GrpElem v = dg.class_of([&] {
      Weight w(2 * n, 0);
      w[0] = 1;
      return w;
    }());
    GrpElem s = dg.class_of([&] {
      Weight w(2 * n, 0);
      w[2 * n - 1] = 1;
      return w;
    }());
    GrpElem c = dg.class_of([&] {
      Weight w(2 * n, 0);
      w[2 * n - 2] = 1;
      return w;
    }());
    CHECK(q.at(v) == PiExp::minus_one());
    CHECK(q.at(s) == PiExp(n, 2));
    CHECK(q.at(c) == PiExp(n, 2));
  }
  for (int n = 2; n <= 3; ++n)  // D_{2n+1}: exp((2n+1)/4 pi i)
    CHECK(gen_value(lie_form("D" + std::to_string(2 * n + 1), 1)) == PiExp(2 * n + 1, 4));
  CHECK(gen_value(lie_form("E6", 1)) == PiExp(4, 3));
  CHECK(lie_form("E8", 1).group.size() == 1);
  CHECK(lie_form("F4", 1).group.size() == 1);
  CHECK(lie_form("G2", 1).group.size() == 1);

  // N-th power relation against Table 3 entries
  for (std::int64_t n = 0; n <= 7; ++n) {
    CHECK(gen_value(lie_form("A2", n)) == PiExp(2, 3).pow(BigInt(n)));
    CHECK(gen_value(lie_form("B3", n)) == PiExp(3, 2).pow(BigInt(n)));
  }
}

TEST_CASE("quadratic form validity is checked exhaustively") {
  for (const auto& t : {"A4", "B3", "C5", "D4", "D7", "E6", "E7"})
    for (std::int64_t n : {0, 1, 2, 3})
      CHECK(quad_form_lie(build_root_datum(LieType::parse(t)), n).is_valid());
}

TEST_CASE("discriminant forms of even lattices") {
  // [[2]]: Z/2 with Q = i
  {
    DiscriminantForm df = discriminant_form(EvenLattice{{{BigInt(2)}}});
    CHECK(df.group.invariant_factors() == std::vector<std::int64_t>{2});
    CHECK(df.q.at({1}) == PiExp(1, 2));
  }
  // [[-4]]: Z/4 with Q(1/4 alpha) = exp(-pi i/4)
  {
    DiscriminantForm df = discriminant_form(EvenLattice{{{BigInt(-4)}}});
    CHECK(df.group.invariant_factors() == std::vector<std::int64_t>{4});
    bool seen = false;
    for (std::int64_t i = 0; i < 4; ++i) {
      GrpElem e = df.group.element(i);
      if (df.group.element_order(e) == 4 && df.q.at(e) == PiExp(-1, 4)) seen = true;
    }
    CHECK(seen);
  }
  // hyperbolic plane: unimodular, trivial discriminant
  {
    DiscriminantForm df =
        discriminant_form(EvenLattice{{{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(0)}}});
    CHECK(df.group.size() == 1);
  }
  CHECK_THROWS(discriminant_form(EvenLattice{{{BigInt(1)}}}));                 // odd
  CHECK_THROWS(discriminant_form(EvenLattice{{{BigInt(2), BigInt(1)}, {BigInt(2), BigInt(2)}}}));  // asym
  CHECK_THROWS(discriminant_form(
      EvenLattice{{{BigInt(2), BigInt(2)}, {BigInt(2), BigInt(2)}}}));  // degenerate

  // oversized discriminant groups are rejected with a distinct error
  CHECK_THROWS_AS(discriminant_form(EvenLattice{{{BigInt(2048)}}}), std::length_error);

  // |group| = |det|
  EvenLattice a2{{{BigInt(2), BigInt(-1)}, {BigInt(-1), BigInt(2)}}};
  DiscriminantForm df = discriminant_form(a2);
  CHECK(df.group.size() == 3);
  CHECK(df.q.is_valid());
}

TEST_CASE("root-lattice discriminant form matches quad_form_lie") {
  // Gram = <<,>> on simple roots; the induced form on the discriminant
  // group must match Q_g^1 under a value-preserving isomorphism. This is
  // an identity for the simply-laced types, where P is the <<,>>-dual of
  // Q; for B/C/F/G the dual of the root lattice is strictly bigger than P.
  // Groups here are small, so match multisets of (order, value) pairs.
  for (const auto& t : {"A1", "A2", "A3", "A7", "D4", "D5", "D6", "E6", "E7", "E8"}) {
    CAPTURE(t);
    const RootDatum& d = build_root_datum(LieType::parse(t));
    auto gs = d.gram(FormKind::Short);
    IntMat gram(d.rank(), std::vector<BigInt>(d.rank()));
    for (std::size_t i = 0; i < d.rank(); ++i)
      for (std::size_t j = 0; j < d.rank(); ++j) gram[i][j] = gs[i][j].as_integer();
    DiscriminantForm df = discriminant_form(EvenLattice{gram});
    QuadForm ql = quad_form_lie(d, 1);
    REQUIRE(df.group.isomorphic_to(ql.group));
    std::multiset<std::pair<std::int64_t, Rat>> lhs, rhs;
    for (std::int64_t i = 0; i < df.group.size(); ++i)
      lhs.insert({df.group.element_order(df.group.element(i)), df.q.at_index(i).exponent()});
    for (std::int64_t i = 0; i < ql.group.size(); ++i)
      rhs.insert({ql.group.element_order(ql.group.element(i)), ql.at_index(i).exponent()});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("direct sums and bicharacters") {
  QuadForm a1 = lie_form("A1", 1);
  DiscriminantForm l2 = discriminant_form(EvenLattice{{{BigInt(2)}}});
  QuadForm ds = a1.direct_sum(l2.q);
  CHECK(ds.group.size() == 4);
  CHECK(ds.at({1, 1}) == PiExp::minus_one());  // i * i
  CHECK(ds.is_valid());

  QuadForm c2 = lie_form("C2", 1);
  QuadForm triv = QuadForm::trivial(FinAbGroup());
  QuadForm ds2 = c2.direct_sum(triv);
  std::multiset<Rat> vals;
  for (const auto& v : ds2.table) vals.insert(v.exponent());
  CHECK(vals == std::multiset<Rat>{Rat(0), Rat(1)});  // {1, -1}

  QuadForm t4 = QuadForm::trivial(FinAbGroup({4}));
  CHECK(triv.direct_sum(t4).table == t4.table);

  // bicharacter examples
  Bicharacter b = bicharacter_of(a1);
  CHECK(b.at({1}, {1}) == PiExp::minus_one());  // Q(2)=1, Q(1)^2 = -1
  CHECK(b.is_symmetric());
  CHECK(b.is_biadditive());
  Bicharacter bd4 = bicharacter_of(lie_form("D4", 1));
  CHECK(bd4.is_biadditive());
  for (const auto& v : bicharacter_of(QuadForm::trivial(FinAbGroup({6}))).table)
    CHECK(v.is_one());
}

TEST_CASE("property: random even lattices give valid quadratic forms") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> dim_d(1, 3), off_d(-2, 2), diag_d(-3, 3);
  int built = 0;
  for (int attempt = 0; attempt < 200 && built < 40; ++attempt) {
    int n = dim_d(rng);
    IntMat gram(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i) {
      gram[i][i] = 2 * diag_d(rng);
      for (int j = i + 1; j < n; ++j) gram[i][j] = gram[j][i] = off_d(rng);
    }
    EvenLattice l{gram};
    if (int_det(gram) == 0) continue;
    std::int64_t det_abs = std::abs(static_cast<long long>(int_det(gram)));
    if (det_abs > 64) continue;
    DiscriminantForm df = discriminant_form(l);
    ++built;
    CHECK(df.q.is_valid());
    CHECK(df.group.size() == det_abs);
    CHECK(bicharacter_of(df.q).is_biadditive());
    // representatives really lie in the dual lattice
    for (std::int64_t i = 0; i < df.group.size(); ++i) {
      auto rep = df.rep(df.group.element(i));
      for (std::size_t r = 0; r < l.lattice_rank(); ++r) {
        Rat pairing(0);
        for (std::size_t c = 0; c < l.lattice_rank(); ++c)
          pairing += rep[c] * Rat(gram[r][c]);
        CHECK(pairing.is_integer());
      }
    }
  }
  CHECK(built == 40);
}

TEST_CASE("Q(k*a) = Q(a)^{k^2} on cyclic generators") {
  for (const auto& t : {"A5", "A7", "D5", "E6"}) {
    QuadForm q = lie_form(t, 1);
    for (std::int64_t i = 0; i < q.group.size(); ++i) {
      GrpElem a = q.group.element(i);
      for (std::int64_t k = 0; k <= 2 * q.group.size(); ++k)
        CHECK(q.at(q.group.smul(k, a)) == q.at(a).pow(BigInt(k) * BigInt(k)));
    }
  }
}
