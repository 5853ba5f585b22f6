#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qtwist/ab_cocycle.hpp"
#include "qtwist/quad_form.hpp"
#include "qtwist/root_datum.hpp"

using namespace qtwist;

namespace {

QuadForm lie_form(const std::string& type, std::int64_t n) {
  return quad_form_lie(build_root_datum(LieType::parse(type)), n);
}

QuadForm cyclic_form(std::int64_t d, Rat t) {
  // Q(a) = exp(pi i t a^2) on Z/d; caller guarantees well-definedness
  QuadForm q;
  q.group = FinAbGroup({d});
  q.table.resize(d);
  for (std::int64_t a = 0; a < d; ++a) q.table[a] = PiExp(t * Rat(a) * Rat(a));
  return q;
}

Subgroup whole_group(const FinAbGroup& g) {
  std::vector<GrpElem> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    GrpElem e = g.zero();
    e[i] = 1;
    gens.push_back(e);
  }
  return make_subgroup(g, gens);
}

Cochain2 random_cochain(const FinAbGroup& g, std::mt19937& rng) {
  Subgroup whole = whole_group(g);
  Cochain2 k;
  k.ambient = g;
  k.sub = whole;
  std::size_t m = whole.order();
  k.k.assign(m * m, PiExp::one());
  std::uniform_int_distribution<int> dist(0, 7);
  std::size_t zero = static_cast<std::size_t>(whole.position(g.index_of(g.zero())));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != zero && j != zero) k.k[i * m + j] = PiExp(dist(rng), 4);
  return k;
}

}  // namespace

TEST_CASE("em_inverse on Z/2 matches the explicit appendix cocycle") {
  for (int n = 0; n <= 8; ++n) {
    QuadForm q = cyclic_form(2, Rat(n, 2));  // Q(1) = i^n
    AbCocycle x = em_inverse(q);
    CHECK(x.w({1}, {1}, {1}) == PiExp(n, 1));          // (-1)^n
    CHECK(x.cc({1}, {1}) == PiExp(n, 2));              // i^n
    CHECK(verify_cocycle(x));
  }
}

TEST_CASE("em_inverse diagonal recovers Q across the corpus") {
  std::vector<QuadForm> corpus;
  for (const auto& t : {"A1", "A2", "A4", "A7", "B3", "C5", "D4", "D5", "D7", "E6", "E7"})
    for (std::int64_t n : {0, 1, 2, 3, 5})
      corpus.push_back(lie_form(t, n));
  corpus.push_back(discriminant_form(EvenLattice{{{BigInt(-4)}}}).q);
  corpus.push_back(cyclic_form(4, Rat(3, 4)));  // the D3-type Z/4 form
  corpus.push_back(lie_form("A1", 1).direct_sum(discriminant_form(EvenLattice{{{BigInt(2)}}}).q));
  for (const auto& q : corpus) {
    AbCocycle x = em_inverse(q);
    CHECK(verify_cocycle(x));
    QuadForm back = x.em_quadratic_form();
    CHECK(back.table == q.table);
  }
}

TEST_CASE("em_inverse table cap") {
  CHECK_THROWS_AS(em_inverse(QuadForm::trivial(FinAbGroup({128}))), std::length_error);
}

TEST_CASE("verify_cocycle rejects perturbations") {
  QuadForm q = lie_form("A3", 1);
  AbCocycle x = em_inverse(q);
  REQUIRE(verify_cocycle(x));
  std::int64_t n = x.group.size();
  AbCocycle bad = x;
  bad.omega[(1 * n + 1) * n + 1] = bad.omega[(1 * n + 1) * n + 1] * PiExp(1, 2);
  CHECK(!verify_cocycle(bad));
}

TEST_CASE("coboundaries are cocycles") {
  std::mt19937 rng(12345);
  for (auto orders : std::vector<std::vector<std::int64_t>>{{2}, {4}, {2, 2}, {6}}) {
    FinAbGroup g(orders);
    for (int rep = 0; rep < 3; ++rep) {
      Cochain2 k = random_cochain(g, rng);
      AbCocycle x = coboundary(k);
      CHECK(verify_cocycle(x));
    }
  }
  // k == 1 gives the trivial cocycle
  FinAbGroup g({4});
  Cochain2 unit;
  unit.ambient = g;
  unit.sub = whole_group(g);
  unit.k.assign(16, PiExp::one());
  AbCocycle x = coboundary(unit);
  for (const auto& v : x.omega) CHECK(v.is_one());
  for (const auto& v : x.c) CHECK(v.is_one());

  // symmetric k has c_k == 1
  std::mt19937 rng2(99);
  Cochain2 sym = random_cochain(g, rng2);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < i; ++j) sym.k[i * 4 + j] = sym.k[j * 4 + i];
  AbCocycle xs = coboundary(sym);
  for (const auto& v : xs.c) CHECK(v.is_one());

  // bilinear k(a,b) = exp(pi i a b) on Z/2: d2k trivial; k is symmetric,
  // so c_k is trivial as well (the braiding -1 would come from the pair
  // (1, B) with B the bicharacter, not from a coboundary)
  FinAbGroup z2({2});
  Cochain2 bil;
  bil.ambient = z2;
  bil.sub = whole_group(z2);
  bil.k = {PiExp::one(), PiExp::one(), PiExp::one(), PiExp::minus_one()};
  AbCocycle xb = coboundary(bil);
  for (const auto& v : xb.omega) CHECK(v.is_one());
  CHECK(xb.cc({1}, {1}).is_one());
}

TEST_CASE("trivialize_on_isotropic satisfies the resolving identities") {
  // I = {0}
  {
    QuadForm q = lie_form("A2", 1);
    AbCocycle x = em_inverse(q);
    Subgroup triv = make_subgroup(q.group, {});
    Cochain2 k = trivialize_on_isotropic(x, triv, {0});
    CHECK(k.k.size() == 1);
    CHECK(k.k[0].is_one());
  }
  // Z/2 with Q(1) = -1, p(1) = 1
  {
    QuadForm q = cyclic_form(2, Rat(1));
    AbCocycle x = em_inverse(q);
    Subgroup whole = whole_group(q.group);
    Cochain2 k = trivialize_on_isotropic(x, whole, {0, 1});
    // check eq_resolve by hand
    for (std::int64_t a = 0; a < 2; ++a)
      for (std::int64_t b = 0; b < 2; ++b) {
        PiExp cb = k.at({b}, {0});  // normalization probe
        (void)cb;
        for (std::int64_t c = 0; c < 2; ++c) {
          PiExp lhs = x.w({a}, {b}, {c});
          PiExp rhs = k.at({b}, {c}) / k.at({(a + b) % 2}, {c}) *
                      k.at({a}, {(b + c) % 2}) / k.at({a}, {b});
          CHECK(lhs == rhs);
        }
      }
  }
  // C3 with N=1, I = P/Q: 2-element group, forced parity (0,1)
  {
    QuadForm q = lie_form("C3", 1);
    AbCocycle x = em_inverse(q);
    Subgroup whole = whole_group(q.group);
    CHECK_NOTHROW(trivialize_on_isotropic(x, whole, {0, 1}));
  }
  // not super isotropic: Z/2 with Q(1) = i
  {
    QuadForm q = cyclic_form(2, Rat(1, 2));
    AbCocycle x = em_inverse(q);
    CHECK_THROWS_AS(trivialize_on_isotropic(x, whole_group(q.group), {0, 1}),
                    std::domain_error);
  }
}

TEST_CASE("bicharacter trivialization dichotomy") {
  // Q_g^{2N} always splits off a bicharacter
  for (const auto& t : {"A2", "A3", "B3", "C4", "D5", "E6"}) {
    QuadForm q = lie_form(t, 2);
    CHECK(diagonal_bicharacter_exists(q));
    auto k = bicharacter_trivialization(q);
    REQUIRE(k.has_value());
    AbCocycle x = em_inverse(q);
    // omega = d2(k)
    const FinAbGroup& g = q.group;
    for (std::int64_t ia = 0; ia < g.size(); ++ia)
      for (std::int64_t ib = 0; ib < g.size(); ++ib)
        for (std::int64_t ic = 0; ic < g.size(); ++ic) {
          GrpElem a = g.element(ia), b = g.element(ib), c = g.element(ic);
          PiExp rhs = k->at(b, c) / k->at(g.add(a, b), c) * k->at(a, g.add(b, c)) /
                      k->at(a, b);
          CHECK(x.w(a, b, c) == rhs);
        }
  }
  // Z/2 with Q(1) = i admits none
  CHECK(!diagonal_bicharacter_exists(cyclic_form(2, Rat(1, 2))));
  CHECK(!bicharacter_trivialization(cyclic_form(2, Rat(1, 2))).has_value());
  // trivial Q: k == 1 works
  auto k = bicharacter_trivialization(QuadForm::trivial(FinAbGroup({3})));
  REQUIRE(k.has_value());
  // cap exceeded reported distinctly
  CHECK_THROWS_AS(diagonal_bicharacter_exists(QuadForm::trivial(FinAbGroup({128})), 64),
                  std::length_error);
  // agreement between the two sides of the dichotomy on odd lie forms
  for (const auto& t : {"A1", "A2", "D5", "E7"}) {
    QuadForm q = lie_form(t, 1);
    bool exists = diagonal_bicharacter_exists(q);
    CHECK(bicharacter_trivialization(q).has_value() == exists);
  }
}

TEST_CASE("EM group law up to coboundary") {
  std::vector<QuadForm> qs = {lie_form("A3", 1), lie_form("A3", 2), lie_form("A3", 3)};
  AbCocycle x1 = em_inverse(qs[0]);
  AbCocycle x2 = em_inverse(qs[1]);
  AbCocycle x12 = em_inverse(qs[0].product(qs[1]));
  CHECK(cohomologous(x12, x1.product(x2)));

  QuadForm d4 = lie_form("D4", 1);
  AbCocycle y1 = em_inverse(d4);
  AbCocycle y2 = em_inverse(d4.power(2));
  AbCocycle y3 = em_inverse(d4.product(d4.power(2)));
  CHECK(cohomologous(y3, y1.product(y2)));

  // sanity: a genuinely non-cohomologous pair
  AbCocycle z1 = em_inverse(cyclic_form(2, Rat(1, 2)));
  AbCocycle z0 = em_inverse(QuadForm::trivial(FinAbGroup({2})));
  CHECK(!cohomologous(z1, z0));
}

TEST_CASE("property: em_inverse round-trips random discriminant forms") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> dim_d(1, 2), off_d(-2, 2), diag_d(-3, 3);
  int built = 0;
  for (int attempt = 0; attempt < 300 && built < 25; ++attempt) {
    int n = dim_d(rng);
    IntMat gram(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i) {
      gram[i][i] = 2 * diag_d(rng);
      for (int j = i + 1; j < n; ++j) gram[i][j] = gram[j][i] = off_d(rng);
    }
    if (int_det(gram) == 0) continue;
    if (std::abs(static_cast<long long>(int_det(gram))) > 16) continue;
    QuadForm q = discriminant_form(EvenLattice{gram}).q;
    ++built;
    AbCocycle x = em_inverse(q);
    CHECK(verify_cocycle(x));
    CHECK(x.em_quadratic_form().table == q.table);
    // cocycle products stay cocycles
    CHECK(verify_cocycle(x.product(x)));
  }
  CHECK(built == 25);
}

TEST_CASE("two trivializations differ by a symmetric 2-cocycle") {
  QuadForm q = lie_form("C3", 1).direct_sum(lie_form("C2", 1));
  AbCocycle x = em_inverse(q);
  Subgroup whole = whole_group(q.group);
  std::vector<int> parity;
  for (auto idx : whole.elem_indices) {
    const PiExp& v = q.at_index(idx);
    REQUIRE(v.is_real_sign());
    parity.push_back(v.is_minus_one() ? 1 : 0);
  }
  Cochain2 k1 = trivialize_on_isotropic(x, whole, parity);
  // second solution: multiply by a symmetric bicharacter-like perturbation
  // then re-solve after permuting... simpler: perturb by an explicit
  // symmetric 2-coboundary k'(a,b) = f(a)+f(b)-f(a+b) and check both satisfy
  // the identities; their ratio is symmetric and a 2-cocycle.
  const FinAbGroup& g = q.group;
  std::size_t m = whole.order();
  std::vector<Rat> f(m, Rat(0));
  for (std::size_t i = 0; i < m; ++i) f[i] = Rat(static_cast<long long>(i % 3), 2);
  Cochain2 k2 = k1;
  auto pos = [&](const GrpElem& e) {
    return static_cast<std::size_t>(whole.position(g.index_of(e)));
  };
  std::size_t zero = pos(g.zero());
  f[zero] = Rat(0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      GrpElem a = g.element(whole.elem_indices[i]);
      GrpElem b = g.element(whole.elem_indices[j]);
      Rat delta = f[i] + f[j] - f[pos(g.add(a, b))];
      k2.k[i * m + j] = k2.k[i * m + j] * PiExp(delta);
    }
  // k2 still satisfies eq_resolve (coboundary of a 1-cochain drops out)
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      GrpElem a = g.element(whole.elem_indices[i]);
      GrpElem b = g.element(whole.elem_indices[j]);
      PiExp ratio = (k1.k[i * m + j] / k2.k[i * m + j]);
      PiExp ratio_t = (k1.k[j * m + i] / k2.k[j * m + i]);
      CHECK(ratio == ratio_t);  // symmetric
      for (std::size_t l = 0; l < m; ++l) {
        GrpElem c = g.element(whole.elem_indices[l]);
        PiExp d2 = (k1.k[j * m + l] / k2.k[j * m + l]) /
                   (k1.k[pos(g.add(a, b)) * m + l] / k2.k[pos(g.add(a, b)) * m + l]) *
                   (k1.k[i * m + pos(g.add(b, c))] / k2.k[i * m + pos(g.add(b, c))]) /
                   ratio;
        CHECK(d2.is_one());  // 2-cocycle with trivial coboundary
      }
    }
}
