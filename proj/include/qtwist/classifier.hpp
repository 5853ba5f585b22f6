#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtwist/isotropy.hpp"
#include "qtwist/qsuites.hpp"
#include "qtwist/quad_form.hpp"
#include "qtwist/rep_calc.hpp"
#include "qtwist/root_datum.hpp"

namespace qtwist {

struct FactorSpec {
  LieType type;
  std::int64_t shift = 0;  // N_i
};

/// Input of the decision procedure: affine factors with shifts, an optional
/// even lattice, and generators of I inside A = (+ P_i/Q_i) (+) M^v/M.
/// Generator coordinates concatenate the per-factor discriminant-group
/// coordinates followed by the lattice discriminant coordinates.
struct ExtensionSpec {
  std::vector<FactorSpec> factors;
  std::optional<EvenLattice> lattice;
  std::vector<GrpElem> generators;
};

/// The assembled quadratic space of a spec, with per-part bookkeeping.
struct AmbientSpace {
  FinAbGroup group;
  QuadForm q;
  struct Part {
    std::size_t offset = 0;
    std::size_t width = 0;
  };
  std::vector<Part> factor_parts;
  Part lattice_part;
  std::optional<DiscriminantForm> lattice_disc;

  GrpElem project(const GrpElem& x, const Part& p) const {
    return GrpElem(x.begin() + p.offset, x.begin() + p.offset + p.width);
  }
};

AmbientSpace build_ambient(const ExtensionSpec& spec);

struct Verdict {
  bool admissible = false;
  bool is_super = false;
  bool isotropy_ok = false;
  std::vector<int> factor_condition;  // 1, 2 or 3 per factor; 0 = none holds
  std::vector<std::string> reasons;
  Subgroup iso;               // I
  std::vector<int> parity;            // by position in iso.elem_indices
  std::vector<GrpElem> even_classes;  // cosets with p = 0
  std::vector<GrpElem> odd_classes;   // cosets with p = 1
};

Verdict decide_extension(const ExtensionSpec& spec);

/// exp(2 pi i Delta-sum) = (-1)^p over every coset representative of
/// coefficient height <= cutoff in every factor.
struct SpinParityReport {
  bool pass = false;
  std::vector<std::string> counterexamples;
  std::int64_t checked = 0;
};
SpinParityReport spin_parity_check(const ExtensionSpec& spec, std::int64_t height_cutoff);

/// One admissible triple of the classification scan.
struct TableRow {
  std::string type;
  std::int64_t shift = 0;   // representative N in 0..7
  std::string lattice;      // "Q", "Lambda_v", "Lambda_s", "Lambda_c", "P", "<m>"
  bool super = false;
  bool trivial = false;     // I = {0}

  bool operator==(const TableRow& o) const {
    return type == o.type && shift == o.shift && lattice == o.lattice &&
           super == o.super;
  }
  bool operator<(const TableRow& o) const {
    return std::tie(type, shift, lattice, super) <
           std::tie(o.type, o.shift, o.lattice, o.super);
  }
};

struct TableScan {
  std::vector<TableRow> rows;   // sorted, deduplicated
  std::string markdown;         // byte-stable rendering
};

/// Scan representatives x N in {0..7} x all Q <= L <= P; optionally fan out
/// across (type, N) pairs.
TableScan generate_tables(bool parallel = false);
const std::vector<std::string>& table_scan_representatives();

/// Worked example families rebuilt through the decision procedure; each
/// check records pass/fail plus any recorded deviation from the condensed
/// family-level claim.
SuiteReport worked_examples_report();

/// Graded character of an admissible extension, exponents in (1/2) Z.
/// Requires positive factor shifts and a positive-definite (or absent)
/// lattice.
GradedSeries graded_character(const ExtensionSpec& spec, const Rat& cutoff);

/// Level arithmetic report: the identity the shift encodes, plus the dual
/// level form at N = 0.
struct LevelIdentity {
  int h_dual = 0;
  int lacing = 1;
  std::int64_t shift = 0;
  std::string identity;
  bool exact = false;  // symbolic check of (rho + N) + (-rho) = N
};
LevelIdentity level_identity(const RootDatum& d, std::int64_t n_shift);

}  // namespace qtwist
