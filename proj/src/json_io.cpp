#include "qtwist/json_io.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace qtwist::io {

namespace {

std::string elem_key(const GrpElem& e) { return FinAbGroup::elem_str(e); }

GrpElem parse_elem_key(const std::string& s, std::size_t rank) {
  GrpElem e;
  std::string body = s;
  if (!body.empty() && body.front() == '(') body = body.substr(1, body.size() - 2);
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) e.push_back(std::stoll(tok));
  if (e.size() != rank) throw std::invalid_argument("bad element key: " + s);
  return e;
}

json rat_str(const Rat& r) { return r.str(); }

}  // namespace

json quad_form_to_json(const QuadForm& q) {
  json j;
  j["factors"] = q.group.orders();
  json exps = json::object();
  for (std::int64_t i = 0; i < q.group.size(); ++i)
    exps[elem_key(q.group.element(i))] = q.at_index(i).exponent().str();
  j["exponents"] = std::move(exps);
  return j;
}

QuadForm quad_form_from_json(const json& j) {
  QuadForm q;
  std::vector<std::int64_t> orders = j.at("factors").get<std::vector<std::int64_t>>();
  q.group = FinAbGroup(orders);
  q.table.assign(q.group.size(), PiExp::one());
  for (const auto& [key, val] : j.at("exponents").items()) {
    GrpElem e = parse_elem_key(key, q.group.rank());
    q.table[q.group.index_of(e)] = PiExp(Rat::parse(val.get<std::string>()));
  }
  if (!q.is_valid()) throw std::invalid_argument("quadratic form failed validation");
  return q;
}

json cocycle_to_json(const AbCocycle& x) {
  json j;
  j["factors"] = x.group.orders();
  json womega = json::object(), wc = json::object();
  std::int64_t n = x.group.size();
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t k = 0; k < n; ++k) {
      GrpElem a = x.group.element(i), b = x.group.element(k);
      wc[elem_key(a) + elem_key(b)] = x.c[i * n + k].exponent().str();
      for (std::int64_t l = 0; l < n; ++l) {
        GrpElem c = x.group.element(l);
        womega[elem_key(a) + elem_key(b) + elem_key(c)] =
            x.omega[(i * n + k) * n + l].exponent().str();
      }
    }
  j["omega"] = std::move(womega);
  j["c"] = std::move(wc);
  return j;
}

AbCocycle cocycle_from_json(const json& j, bool verify) {
  AbCocycle x;
  std::vector<std::int64_t> orders = j.at("factors").get<std::vector<std::int64_t>>();
  x.group = FinAbGroup(orders);
  std::int64_t n = x.group.size();
  x.omega.assign(n * n * n, PiExp::one());
  x.c.assign(n * n, PiExp::one());
  // keys are concatenated element tuples "(a)(b)" / "(a)(b)(c)"
  auto split = [&](const std::string& s) {
    std::vector<GrpElem> parts;
    std::size_t pos = 0;
    while (pos < s.size()) {
      std::size_t end = s.find(')', pos);
      parts.push_back(parse_elem_key(s.substr(pos, end - pos + 1), x.group.rank()));
      pos = end + 1;
    }
    return parts;
  };
  for (const auto& [key, val] : j.at("c").items()) {
    auto parts = split(key);
    x.c[x.group.index_of(parts[0]) * n + x.group.index_of(parts[1])] =
        PiExp(Rat::parse(val.get<std::string>()));
  }
  for (const auto& [key, val] : j.at("omega").items()) {
    auto parts = split(key);
    x.omega[(x.group.index_of(parts[0]) * n + x.group.index_of(parts[1])) * n +
            x.group.index_of(parts[2])] = PiExp(Rat::parse(val.get<std::string>()));
  }
  if (verify && !verify_cocycle(x))
    throw std::invalid_argument("cocycle failed the identity re-check on load");
  return x;
}

json root_datum_to_json(const RootDatum& d) {
  json j;
  j["type"] = d.type.str();
  j["h_dual"] = d.h_dual;
  j["lacing"] = d.lacing;
  j["n_g"] = d.n_g;
  j["cartan"] = d.cartan;
  auto mat = [&](FormKind k) {
    json rows = json::array();
    for (const auto& row : d.gram(k)) {
      json r = json::array();
      for (const auto& x : row) r.push_back(x.str());
      rows.push_back(std::move(r));
    }
    return rows;
  };
  j["form_short"] = mat(FormKind::Short);
  j["form_long"] = mat(FormKind::Long);
  json fw = json::array();
  for (const auto& w : d.fundamental_weights) {
    json r = json::array();
    for (const auto& x : w) r.push_back(x.str());
    fw.push_back(std::move(r));
  }
  j["fundamental_weights"] = std::move(fw);
  j["dual_involution"] = d.dual_involution;
  j["positive_root_count"] = d.positive_roots.size();
  return j;
}

EvenLattice lattice_from_json(const json& j) {
  EvenLattice l;
  for (const auto& row : j.at("gram")) {
    std::vector<BigInt> r;
    for (const auto& x : row) r.push_back(BigInt(x.get<long long>()));
    l.gram.push_back(std::move(r));
  }
  l.validate();
  return l;
}

json lattice_to_json(const EvenLattice& l) {
  json rows = json::array();
  for (const auto& row : l.gram) {
    json r = json::array();
    for (const auto& x : row) r.push_back(static_cast<long long>(x));
    rows.push_back(std::move(r));
  }
  return json{{"gram", rows}};
}

ExtensionSpec spec_from_json(const json& j) {
  ExtensionSpec s;
  for (const auto& key : j.items()) {
    if (key.key() != "factors" && key.key() != "lattice" &&
        key.key() != "isotropic_generators")
      throw std::invalid_argument("unknown spec key: " + key.key());
  }
  if (j.contains("factors"))
    for (const auto& f : j.at("factors"))
      s.factors.push_back({LieType::parse(f.at("type").get<std::string>()),
                           f.at("shift").get<std::int64_t>()});
  if (j.contains("lattice") && !j.at("lattice").is_null())
    s.lattice = lattice_from_json(j.at("lattice"));
  if (j.contains("isotropic_generators"))
    for (const auto& g : j.at("isotropic_generators"))
      s.generators.push_back(g.get<GrpElem>());
  return s;
}

json spec_to_json(const ExtensionSpec& s) {
  json j;
  json fs = json::array();
  for (const auto& f : s.factors)
    fs.push_back({{"type", f.type.str()}, {"shift", f.shift}});
  j["factors"] = std::move(fs);
  if (s.lattice) j["lattice"] = lattice_to_json(*s.lattice);
  j["isotropic_generators"] = s.generators;
  return j;
}

json verdict_to_json(const Verdict& v, const AmbientSpace& a) {
  json j;
  j["admissible"] = v.admissible;
  j["super"] = v.is_super;
  j["isotropy_ok"] = v.isotropy_ok;
  j["factor_conditions"] = v.factor_condition;
  j["reasons"] = v.reasons;
  j["ambient_factors"] = a.group.orders();
  json members = json::array();
  for (std::size_t p = 0; p < v.iso.order(); ++p) {
    json m;
    m["element"] = a.group.element(v.iso.elem_indices[p]);
    if (v.admissible) m["parity"] = v.parity[p];
    members.push_back(std::move(m));
  }
  j["subgroup"] = std::move(members);
  if (v.admissible) {
    j["even_classes"] = v.even_classes;
    j["odd_classes"] = v.odd_classes;
  }
  return j;
}

json series_to_json(const GradedSeries& s) {
  json arr = json::array();
  for (const auto& [e, c] : s.terms)
    arr.push_back({{"exp", e.str()}, {"coeff", c.str()}});
  return arr;
}

json super_isotropic_to_json(const SuperIsotropic& si, const FinAbGroup& g) {
  json j;
  json gens = json::array();
  for (const auto& e : si.sub.generators) gens.push_back(e);
  j["generators"] = std::move(gens);
  j["parity"] = si.parity;
  j["order"] = si.sub.order();
  j["isotropic"] = si.isotropic;
  json elems = json::array();
  for (auto idx : si.sub.elem_indices) elems.push_back(g.element(idx));
  j["elements"] = std::move(elems);
  return j;
}

json suite_report_to_json(const SuiteReport& r) {
  json j;
  j["suite"] = r.suite;
  j["pass"] = r.all_pass();
  json checks = json::array();
  for (const auto& c : r.checks) {
    json cj{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace qtwist::io
