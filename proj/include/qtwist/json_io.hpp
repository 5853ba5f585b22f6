#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qtwist/ab_cocycle.hpp"
#include "qtwist/classifier.hpp"
#include "qtwist/quad_form.hpp"
#include "qtwist/rep_calc.hpp"
#include "qtwist/root_datum.hpp"

namespace qtwist::io {

using nlohmann::json;

/// Rational exponents serialize as strings "p/q" throughout.
json quad_form_to_json(const QuadForm& q);
QuadForm quad_form_from_json(const json& j);

json cocycle_to_json(const AbCocycle& x);
/// verify = re-check the cocycle identities on load (throws on failure).
AbCocycle cocycle_from_json(const json& j, bool verify);

json root_datum_to_json(const RootDatum& d);

EvenLattice lattice_from_json(const json& j);
json lattice_to_json(const EvenLattice& l);

ExtensionSpec spec_from_json(const json& j);
json spec_to_json(const ExtensionSpec& s);

json verdict_to_json(const Verdict& v, const AmbientSpace& a);
json series_to_json(const GradedSeries& s);
json super_isotropic_to_json(const SuperIsotropic& si, const FinAbGroup& g);

json suite_report_to_json(const SuiteReport& r);

}  // namespace qtwist::io
