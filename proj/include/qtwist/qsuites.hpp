#pragma once

#include <string>
#include <vector>

#include "qtwist/laurent.hpp"
#include "qtwist/root_datum.hpp"

namespace qtwist {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  CheckResult& add(std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(detail)});
    return checks.back();
  }
};

/// n_{-q} = (-1)^{n+1} n_q as polynomial identities, n <= n_max.
bool qint_sign_law(std::int64_t n_max);

/// Phase-level twist identity for the vector-representation braiding
/// eigenvalues: Q_g^N(lambda_X) * eig(rho) = eig(rho + N) per constituent.
/// Families A, C, D; throws std::invalid_argument otherwise.
bool twist_identity_check(LieType t, std::int64_t n_shift);

/// f_rho = f_{rho + 2 n_g N}: 2 n_g N <<lambda_i, lambda_j>> even for all
/// fundamental-weight pairs.
bool f_rho_periodicity(const RootDatum& d, std::int64_t n_shift);
/// Same check with an explicit (possibly wrong) period multiplier.
bool f_rho_periodicity_with(const RootDatum& d, std::int64_t n_shift,
                            std::int64_t period_base);

SuiteReport run_qint_suite();
SuiteReport run_theta_suite(int d_cap);
SuiteReport run_rmatrix_suite();
SuiteReport run_phases_suite();
SuiteReport run_appendix_suite(int n_max);

}  // namespace qtwist
