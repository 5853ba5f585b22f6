#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtwist/pbw.hpp"
#include "qtwist/qsuites.hpp"
#include "qtwist/sl2_module.hpp"

using namespace qtwist;

TEST_CASE("laurent scalars") {
  RatFunc q = RatFunc::v_power(1);
  CHECK(qint(1) == RatFunc(1));
  CHECK(qint(2) == q + q.inverse());
  CHECK(qint(3) == RatFunc::v_power(2) + RatFunc(1) + RatFunc::v_power(-2));
  CHECK(qint(5).eval_one() == Rat(5));
  CHECK((q * q.inverse()) == RatFunc(1));
  CHECK((qint(6) / qint(3) * qint(3)) == qint(6));
  CHECK(qbinom(4, 2) == qint(4) * qint(3) / qint(2));
  CHECK(qint(4).substitute_neg() == -qint(4));
  CHECK(qint(3).substitute_neg() == qint(3));
  CHECK_THROWS(RatFunc(1) / RatFunc(0));
}

TEST_CASE("phase algebra") {
  Phase p(Rat(1, 2), Rat(1, 4));
  CHECK((p * p.inverse()).is_one());
  CHECK(p.shift_rho(2) == Phase(Rat(1, 2), Rat(5, 4)));
  CHECK(Phase(Rat(0), Rat(2)).is_one());
  CHECK(Phase(Rat(1), Rat(0)) != Phase(Rat(0), Rat(1)));
  // exp(pi i (a rho + b)) = 1 iff a = 0 and b even
  CHECK(!Phase(Rat(2), Rat(0)).is_one());
}

TEST_CASE("pbw algebra relations") {
  using namespace pbw;
  // K E K^{-1} = q^2 E
  PBWElem keki = mul(gen_k(1), mul(gen_e(), gen_k(-1)));
  CHECK(keki == scale(qpow(2), gen_e()));
  // [E, F] = (K - K^{-1})/(q - q^{-1})
  PBWElem comm = sub(mul(gen_e(), gen_f()), mul(gen_f(), gen_e()));
  PBWElem target = scale(qminus_qinv().inverse(), sub(gen_k(1), gen_k(-1)));
  CHECK(comm == target);
  // associativity smoke: (EF)F == E(FF)
  CHECK(mul(mul(gen_e(), gen_f()), gen_f()) == mul(gen_e(), mul(gen_f(), gen_f())));
  // commutator identity against module matrices, m <= 3, a <= 3
  for (int m = 1; m <= 3; ++m) {
    Sl2Module mod{m};
    REQUIRE(mod.relations_hold());
    for (int a = 1; a <= 3; ++a) {
      PBWElem fa = one();
      for (int i = 0; i < a; ++i) fa = mul(gen_f(), fa);
      PBWElem lhs = sub(mul(gen_e(), fa), mul(fa, gen_e()));
      CHECK(mat_eq(mod.act(lhs),
                   mat_sub(mat_mul(mod.act(gen_e()), mod.act(fa)),
                           mat_mul(mod.act(fa), mod.act(gen_e())))));
    }
  }
  // coproduct is an algebra map on a sample
  PBW2Elem d_ef = coproduct(mul(gen_e(), gen_f()));
  PBW2Elem d_e_d_f = mul2(coproduct(gen_e()), coproduct(gen_f()));
  CHECK(sub2(d_ef, d_e_d_f).empty());
}

TEST_CASE("theta pairing and intertwining") {
  using namespace pbw;
  CHECK(theta_coeff(0) == RatFunc(1));
  CHECK(theta_coeff(1) == -(qminus_qinv()));
  CHECK(verify_theta_intertwines(2));
  CHECK(verify_theta_intertwines(8));
  CHECK(verify_theta_uniqueness(8));
  CHECK(omega_invariance_check(8));
  // mutation: flip the sign of c_1 and the intertwining must fail at D = 2
  {
    PBW2Elem t = theta_truncated(2);
    PBWPair key{PBWMono{1, 0, 0}, PBWMono{0, 0, 1}};
    t[key] = -t[key];
    PBW2Elem diff = sub2(mul2(coproduct(gen_e()), t), mul2(t, coproduct_tau(gen_e())));
    bool nonboundary_nonzero = false;
    for (const auto& [m, c] : diff) {
      if (c.is_zero()) continue;
      int d1 = m.first.e - m.first.f, d2 = m.second.e - m.second.f;
      bool boundary = false;
      for (auto [e1, e2] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}})
        if (e1 - d1 == d2 - e2 && e1 - d1 > 2) boundary = true;
      if (!boundary) nonboundary_nonzero = true;
    }
    CHECK(nonboundary_nonzero);
  }
}

TEST_CASE("rmatrix suite") {
  SuiteReport r = run_rmatrix_suite();
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CHECK(c.pass);
  }
}

TEST_CASE("qint suite and sign law") {
  SuiteReport r = run_qint_suite();
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CHECK(c.pass);
  }
}

TEST_CASE("phase suites: twist identities and periodicity") {
  SuiteReport r = run_phases_suite();
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CHECK(c.pass);
  }
  // spec examples
  CHECK(twist_identity_check(LieType::parse("A3"), 1));
  CHECK(twist_identity_check(LieType::parse("C3"), 1));
  CHECK(twist_identity_check(LieType::parse("D4"), 0));
  CHECK_THROWS(twist_identity_check(LieType::parse("B3"), 1));
  // wrong Q-value would break the identity: simulate by shifting the norm
  {
    Phase eig(Rat(1, 2), Rat(0));
    Phase wrong_q(Rat(0), Rat(1, 3));
    CHECK((wrong_q * eig) != eig.shift_rho(1));
  }
  CHECK(f_rho_periodicity(build_root_datum(LieType::parse("A1")), 1));
}

TEST_CASE("appendix suite") {
  SuiteReport r = run_appendix_suite(4);
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.pass);
  }
  // n = 2 and n = 3 cocycle values from the closed form
  SuiteReport r8 = run_appendix_suite(8);
  CHECK(r8.all_pass());
}
