#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "qtwist/modsolve.hpp"
#include "qtwist/pi_exp.hpp"
#include "qtwist/rational.hpp"
#include "qtwist/smith.hpp"

using namespace qtwist;

TEST_CASE("rational arithmetic and normalization") {
  Rat a(2, 4), b(1, 3);
  CHECK(a == Rat(1, 2));
  CHECK((a + b) == Rat(5, 6));
  CHECK((a * b) == Rat(1, 6));
  CHECK((a - Rat(1)) == Rat(-1, 2));
  CHECK((Rat(-3, 6)).str() == "-1/2");
  CHECK(Rat::parse("-7/3") == Rat(-7, 3));
  CHECK(Rat::parse("5") == Rat(5));
  CHECK(Rat(-7, 3).floor() == -3);
  CHECK(Rat(7, 3).floor() == 2);
  CHECK_THROWS(Rat(1, 0));
  CHECK_THROWS(Rat(1, 2).as_integer());
}

TEST_CASE("pi exponents reduce mod 2") {
  CHECK(PiExp(Rat(5, 2)) == PiExp(Rat(1, 2)));
  CHECK(PiExp(Rat(-1, 2)) == PiExp(Rat(3, 2)));
  CHECK(PiExp(Rat(2)).is_one());
  CHECK(PiExp(Rat(3)).is_minus_one());
  CHECK((PiExp(1, 2) * PiExp(1, 2)).is_minus_one());  // i * i = -1
  CHECK(PiExp(1, 2).pow(BigInt(4)).is_one());
  CHECK(PiExp(1, 2).inverse() == PiExp(3, 2));
}

TEST_CASE("smith normal form of cartan-like matrices") {
  IntMat a = {{2, -1}, {-1, 2}};  // A2 cartan: coker Z/3
  SmithResult s = smith_normal_form(a);
  CHECK(s.d[0][0] == 1);
  CHECK(s.d[1][1] == 3);
  IntMat uav = mat_mul(mat_mul(s.u, a), s.v);
  CHECK(uav == s.d);

  IntMat b = {{2, 0}, {0, -4}};
  SmithResult sb = smith_normal_form(b);
  CHECK(sb.d[0][0] == 2);
  CHECK(sb.d[1][1] == 4);

  CHECK(int_det({{2, 1}, {1, 2}}) == 3);
  CHECK(int_det({{0, 1}, {1, 0}}) == -1);
  CHECK(int_det({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}) == 4);
}

TEST_CASE("modular solver handles composite moduli") {
  // 2x = 2 (mod 4) has solutions 1, 3
  {
    std::vector<ModRow> rows{{{{0, 2}}, 2}};
    auto x = solve_mod(rows, 1, 4);
    REQUIRE(x);
    CHECK((*x)[0] * 2 % 4 == 2);
  }
  // 2x = 1 (mod 4) unsolvable
  {
    std::vector<ModRow> rows{{{{0, 2}}, 1}};
    CHECK(!solve_mod(rows, 1, 4));
  }
  // 2x + y = 1 (mod 4): solvable only through the free variable
  {
    std::vector<ModRow> rows{{{{0, 2}, {1, 1}}, 1}};
    auto x = solve_mod(rows, 2, 4);
    REQUIRE(x);
    CHECK((2 * (*x)[0] + (*x)[1]) % 4 == 1);
  }
  // inconsistent pair
  {
    std::vector<ModRow> rows{{{{0, 1}, {1, 1}}, 1}, {{{0, 1}, {1, 1}}, 2}};
    CHECK(!solve_mod(rows, 2, 6));
  }
  // random-ish consistent system mod 12
  {
    std::vector<ModRow> rows{
        {{{0, 3}, {1, 4}, {2, 1}}, 7},
        {{{0, 1}, {2, 5}}, 9},
        {{{1, 6}, {2, 2}}, 10},
    };
    auto x = solve_mod(rows, 3, 12);
    REQUIRE(x);
    CHECK((3 * (*x)[0] + 4 * (*x)[1] + (*x)[2]) % 12 == 7);
    CHECK(((*x)[0] + 5 * (*x)[2]) % 12 == 9);
    CHECK((6 * (*x)[1] + 2 * (*x)[2]) % 12 == 10);
  }
}

TEST_CASE("property: modular solver against planted solutions and brute force") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> m_d(2, 48), nvar_d(1, 4), nrow_d(1, 6),
      coeff_d(-6, 6);
  // planted solutions must always be found (solve_mod self-verifies)
  for (int trial = 0; trial < 300; ++trial) {
    int m = m_d(rng), nv = nvar_d(rng), nr = nrow_d(rng);
    std::vector<std::int64_t> planted(nv);
    for (auto& v : planted) v = std::abs(coeff_d(rng)) % m;
    std::vector<ModRow> rows(nr);
    for (auto& row : rows) {
      std::int64_t rhs = 0;
      for (int v = 0; v < nv; ++v) {
        std::int64_t ccc = coeff_d(rng);
        if (ccc == 0) continue;
        row.terms.push_back({v, ccc});
        rhs += ccc * planted[v];
      }
      row.rhs = ((rhs % m) + m) % m;
    }
    auto x = solve_mod(rows, nv, m);
    CHECK(x.has_value());
  }
  // solvability agrees with exhaustive enumeration on tiny systems
  std::uniform_int_distribution<int> small_m(2, 8), rhs_d(0, 7);
  for (int trial = 0; trial < 200; ++trial) {
    int m = small_m(rng), nv = nvar_d(rng) % 3 + 1, nr = nrow_d(rng) % 3 + 1;
    std::vector<ModRow> rows(nr);
    for (auto& row : rows) {
      for (int v = 0; v < nv; ++v) {
        std::int64_t ccc = coeff_d(rng);
        if (ccc != 0) row.terms.push_back({v, ccc});
      }
      row.rhs = rhs_d(rng) % m;
    }
    bool brute = false;
    std::vector<std::int64_t> x(nv, 0);
    std::function<void(int)> walk = [&](int pos) {
      if (brute) return;
      if (pos == nv) {
        for (const auto& row : rows) {
          std::int64_t acc = 0;
          for (auto& [v, ccc] : row.terms) acc += ccc * x[v];
          if (((acc % m) + m) % m != row.rhs) return;
        }
        brute = true;
        return;
      }
      for (x[pos] = 0; x[pos] < m; ++x[pos]) walk(pos + 1);
    };
    walk(0);
    CHECK(solve_mod(rows, nv, m).has_value() == brute);
  }
}
