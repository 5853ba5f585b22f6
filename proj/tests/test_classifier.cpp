#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "qtwist/classifier.hpp"

using namespace qtwist;

namespace {

ExtensionSpec single(const std::string& type, std::int64_t shift,
                     std::vector<GrpElem> gens) {
  ExtensionSpec s;
  s.factors.push_back({LieType::parse(type), shift});
  s.generators = std::move(gens);
  return s;
}

}  // namespace

TEST_CASE("extension verdicts: worked examples") {
  // (C3, N=1, I=P/Q, no lattice): admissible, super
  {
    Verdict v = decide_extension(single("C3", 1, {{1}}));
    CHECK(v.admissible);
    CHECK(v.is_super);
    CHECK(v.factor_condition == std::vector<int>{2});
    CHECK(v.odd_classes.size() == 1);
    CHECK(v.even_classes.size() == 1);
  }
  // (B3, N=1, I=P/Q): rejected, Q(lambda_3) = -i not real
  {
    Verdict v = decide_extension(single("B3", 1, {{1}}));
    CHECK(!v.admissible);
    CHECK(!v.isotropy_ok);
  }
  // (E6, N=6, I=P/Q): admissible, non-super
  {
    Verdict v = decide_extension(single("E6", 6, {{1}}));
    CHECK(v.admissible);
    CHECK(!v.is_super);
    CHECK(v.factor_condition == std::vector<int>{1});
  }
  // E6 at odd shift: no condition fires even though I = {0}
  {
    Verdict v = decide_extension(single("E6", 3, {}));
    CHECK(!v.admissible);
    CHECK(v.isotropy_ok);
    CHECK(v.factor_condition == std::vector<int>{0});
  }
  // D6 odd shift: Lambda_v passes condition (3); the spin line does not
  {
    const RootDatum& d = build_root_datum(LieType::parse("D6"));
    const DiscriminantGroup& dg = discriminant_group(d);
    Weight l1(6, 0), l6(6, 0);
    l1[0] = 1;
    l6[5] = 1;
    Verdict v1 = decide_extension(single("D6", 1, {dg.class_of(l1)}));
    CHECK(v1.admissible);
    CHECK(v1.is_super);
    CHECK(v1.factor_condition == std::vector<int>{3});
    Verdict v2 = decide_extension(single("D6", 1, {dg.class_of(l6)}));
    CHECK(!v2.admissible);
  }
  // empty spec: trivial admissible verdict
  {
    ExtensionSpec s;
    Verdict v = decide_extension(s);
    CHECK(v.admissible);
    CHECK(!v.is_super);
  }
  // invariance under generating-set change and factor permutation
  {
    ExtensionSpec s1;
    s1.factors = {{LieType::parse("C2"), 1}, {LieType::parse("C3"), 1}};
    s1.generators = {{1, 0}, {0, 1}};
    ExtensionSpec s2 = s1;
    s2.generators = {{1, 1}, {0, 1}};
    ExtensionSpec s3;
    s3.factors = {{LieType::parse("C3"), 1}, {LieType::parse("C2"), 1}};
    s3.generators = {{1, 1}, {1, 0}};
    Verdict v1 = decide_extension(s1), v2 = decide_extension(s2),
            v3 = decide_extension(s3);
    CHECK(v1.admissible == v2.admissible);
    CHECK(v1.is_super == v2.is_super);
    CHECK(v1.iso.elem_indices == v2.iso.elem_indices);
    CHECK(v3.admissible == v1.admissible);
    CHECK(v3.is_super == v1.is_super);
  }
  // verdict periodicity in N with period 2 n_g
  for (const auto& t : {"C3", "D5", "E7"}) {
    const RootDatum& d = build_root_datum(LieType::parse(t));
    for (std::int64_t n = 0; n <= 3; ++n) {
      Verdict v1 = decide_extension(single(t, n, {{1}}));
      Verdict v2 = decide_extension(single(t, n + 2 * d.n_g, {{1}}));
      CHECK(v1.admissible == v2.admissible);
      CHECK(v1.is_super == v2.is_super);
    }
  }
}

TEST_CASE("spin parity: worked examples") {
  // (C2, N=1, I=P): odd class phase -1
  {
    SpinParityReport rep = spin_parity_check(single("C2", 1, {{1}}), 6);
    CHECK(rep.pass);
    CHECK(rep.checked > 0);
  }
  // Q-coset phases are +1 for lambda in the root lattice
  {
    SpinParityReport rep = spin_parity_check(single("B4", 3, {{1}}), 6);
    CHECK(rep.pass);
  }
  // trivial I passes vacuously
  {
    SpinParityReport rep = spin_parity_check(single("E8", 2, {}), 4);
    CHECK(rep.pass);
  }
  // lattice factor, agreeing case: (C2, N=1) + [[4]] with I generated by
  // (lambda_1-class, alpha/2): factor phase -1, theta-series phase -1
  {
    ExtensionSpec s = single("C2", 1, {});
    s.lattice = EvenLattice{{{BigInt(4)}}};
    s.generators = {{1, 2}};
    Verdict v = decide_extension(s);
    REQUIRE(v.admissible);
    CHECK(!v.is_super);
    SpinParityReport rep = spin_parity_check(s, 8);
    CHECK(rep.pass);
  }
  // the worked gl-type example (A1, N=1) + [[2]]: the odd class carries
  // Delta-sum 3/4 + 1/4 = 1, so theta = +1 there and the checker must
  // report exactly that class (integer-spin odd part)
  {
    ExtensionSpec s = single("A1", 1, {});
    s.lattice = EvenLattice{{{BigInt(2)}}};
    s.generators = {{1, 1}};
    Verdict v = decide_extension(s);
    REQUIRE(v.admissible);
    CHECK(v.is_super);
    SpinParityReport rep = spin_parity_check(s, 8);
    CHECK(!rep.pass);
    CHECK(rep.counterexamples.size() == 1);
  }
}

TEST_CASE("level identities") {
  LevelIdentity a1 = level_identity(build_root_datum(LieType::parse("A1")), 1);
  CHECK(a1.identity == "1/(k+2)+1/(k'+2)=1");
  CHECK(a1.exact);
  LevelIdentity dual = level_identity(build_root_datum(LieType::parse("D5")), 0);
  CHECK(dual.identity.find("k+k'=-16") != std::string::npos);
  LevelIdentity g2 = level_identity(build_root_datum(LieType::parse("G2")), 2);
  CHECK(g2.identity == "1/(3(k+4))+1/(3(k'+4))=2");
  CHECK(g2.lacing == 3);
}

namespace {

// expected nontrivial rows of the scan, derived from the quadratic-space
// data: see the table tests below
std::set<TableRow> expected_rows() {
  std::set<TableRow> rows;
  auto add = [&](const std::string& t, std::vector<std::int64_t> ns,
                 const std::string& l, bool s) {
    for (auto n : ns) rows.insert(TableRow{t, n, l, s, false});
  };
  std::vector<std::int64_t> all{0, 1, 2, 3, 4, 5, 6, 7};
  std::vector<std::int64_t> odd{1, 3, 5, 7}, even{0, 2, 4, 6};
  std::vector<std::int64_t> two_mod4{2, 6}, zero_mod4{0, 4};

  // B4: Q(spin) = 1, every shift admissible and non-super (the family
  // pattern B_{2n} | 1+2Z | P | S holds only for rank = 2 mod 4)
  add("B4", all, "P", false);
  // B5: spin value i
  add("B5", two_mod4, "P", true);
  add("B5", zero_mod4, "P", false);
  // C3
  add("C3", odd, "P", true);
  add("C3", even, "P", false);
  // D4: spin value -1 (= vector value); Lambda_v only at odd shifts
  add("D4", odd, "Lambda_v", true);
  add("D4", even, "Lambda_v", false);
  add("D4", even, "Lambda_s", false);
  add("D4", even, "Lambda_c", false);
  add("D4", even, "P", false);
  // D5: Z/4, generator value exp(5 pi i/4)
  add("D5", odd, "Lambda_v", true);
  add("D5", even, "Lambda_v", false);
  add("D5", {4}, "P", true);
  add("D5", {0}, "P", false);
  // D6: spin value -i
  add("D6", odd, "Lambda_v", true);
  add("D6", even, "Lambda_v", false);
  add("D6", two_mod4, "Lambda_s", true);
  add("D6", zero_mod4, "Lambda_s", false);
  add("D6", two_mod4, "Lambda_c", true);
  add("D6", zero_mod4, "Lambda_c", false);
  add("D6", two_mod4, "P", true);
  add("D6", zero_mod4, "P", false);
  // D7: Z/4, generator value exp(7 pi i/4)
  add("D7", odd, "Lambda_v", true);
  add("D7", even, "Lambda_v", false);
  add("D7", {4}, "P", true);
  add("D7", {0}, "P", false);
  // E6: Z/3
  add("E6", {0, 6}, "P", false);
  // E7: Z/2, value -i
  add("E7", two_mod4, "P", true);
  add("E7", zero_mod4, "P", false);
  // trivial P/Q: the unique lattice is P itself, even shifts only
  add("E8", even, "P", false);
  add("F4", even, "P", false);
  add("G2", even, "P", false);
  return rows;
}

}  // namespace

TEST_CASE("table scan reproduces the classification") {
  TableScan scan = generate_tables(false);
  std::set<TableRow> got;
  for (const auto& r : scan.rows)
    if (!r.trivial) got.insert(r);
  std::set<TableRow> expect = expected_rows();
  // report differences for debugging
  for (const auto& r : got)
    if (!expect.count(r)) {
      CAPTURE(r.type);
      CAPTURE(r.shift);
      CAPTURE(r.lattice);
      CAPTURE(r.super);
      CHECK_MESSAGE(false, "unexpected extra row");
    }
  for (const auto& r : expect)
    if (!got.count(r)) {
      CAPTURE(r.type);
      CAPTURE(r.shift);
      CAPTURE(r.lattice);
      CAPTURE(r.super);
      CHECK_MESSAGE(false, "missing row");
    }
  CHECK(got == expect);

  // the B_{2n+1} | Z | Q row: trivial triples exist at every shift for B5
  int b5_trivial = 0;
  for (const auto& r : scan.rows)
    if (r.trivial && r.type == "B5") ++b5_trivial;
  CHECK(b5_trivial == 8);

  // markdown is byte-stable and folds to the condensed presentation
  TableScan again = generate_tables(false);
  CHECK(scan.markdown == again.markdown);
  for (const auto& line : {"| D4 | 1+2Z | Lambda_v | S |", "| B4 | 0+1Z | P |  |",
                           "| D6 | 2+4Z | P | S |", "| E6 | 0+6Z | P |  |",
                           "| D5 | 4+8Z | P | S |", "| G2 | 0+2Z | P |  |"})
    CHECK(scan.markdown.find(line) != std::string::npos);
  CHECK(scan.rows.size() == again.rows.size());

  // parallel fan-out merges to the same result
  TableScan par = generate_tables(true);
  CHECK(par.markdown == scan.markdown);
}

TEST_CASE("B-family law at rank 2 mod 4") {
  // B6 at odd shift is genuinely super (i^6 = -1): the family pattern
  // B_{2n}|1+2Z|P|S is correct exactly when the rank is 2 mod 4
  Verdict v6 = decide_extension(single("B6", 1, {{1}}));
  CHECK(v6.admissible);
  CHECK(v6.is_super);
  Verdict v4 = decide_extension(single("B4", 1, {{1}}));
  CHECK(v4.admissible);
  CHECK(!v4.is_super);
  Verdict v8 = decide_extension(single("B8", 1, {{1}}));
  CHECK(v8.admissible);
  CHECK(!v8.is_super);
}

TEST_CASE("worked example families") {
  SuiteReport r = worked_examples_report();
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.pass);
  }
}

TEST_CASE("graded character: A1 examples") {
  // (A1, N=2, I=P): coefficient 4 at 3/2; constant term 1; exponents in Z/2
  {
    GradedSeries s = graded_character(single("A1", 2, {{1}}), Rat(4));
    CHECK(s.coeff(Rat(0)) == 1);
    CHECK(s.coeff(Rat(3, 2)) == 4);
    for (const auto& [e, c] : s.terms) {
      Rat twice = e * Rat(2);
      CHECK(twice.is_integer());
      CHECK(c > 0);
    }
    // half-integer exponents occur exactly on the odd coset: the even part
    // alone gives integer exponents
    GradedSeries even_part = graded_character(single("A1", 2, {}), Rat(4));
    for (const auto& [e, c] : even_part.terms) CHECK(e.is_integer());
  }
  // vacuum-only spec
  {
    GradedSeries s = graded_character(single("C3", 2, {}), Rat(2));
    CHECK(s.coeff(Rat(0)) == 1);
  }
  // lattice factor contributes theta terms
  {
    ExtensionSpec spec = single("A1", 1, {});
    spec.lattice = EvenLattice{{{BigInt(2)}}};
    spec.generators = {{1, 1}};
    GradedSeries s = graded_character(spec, Rat(2));
    CHECK(s.coeff(Rat(0)) == 1);
    for (const auto& [e, c] : s.terms) CHECK((e * Rat(2)).is_integer());
  }
  CHECK_THROWS(graded_character(single("A1", 0, {{1}}), Rat(2)));
  {
    ExtensionSpec bad = single("A1", 2, {});
    bad.lattice = EvenLattice{{{BigInt(-2)}}};
    bad.generators = {{0, 0}};
    CHECK_THROWS_AS(graded_character(bad, Rat(2)), std::domain_error);
  }
}
