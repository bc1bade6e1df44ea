#include "linserlab/json_io.hpp"

#include <algorithm>
#include <set>

namespace linserlab::json_io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw JsonError(path + ": " + what); }

const json& object(const json& j, const std::string& path, std::initializer_list<const char*> required,
                   std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) fail(path, "expected an object");
  std::set<std::string> allowed;
  for (auto k : required) {
    allowed.insert(k);
    if (!j.contains(k)) fail(path, std::string("missing key \"") + k + "\"");
  }
  for (auto k : optional) allowed.insert(k);
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) fail(path, "unknown key \"" + k + "\"");
  return j;
}

const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

std::int64_t int_from(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  if (j.is_number_unsigned() && j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) fail(path, "integer out of range");
  return j.get<std::int64_t>();
}

std::vector<std::int64_t> ints_from(const json& j, const std::string& path) {
  std::vector<std::int64_t> v;
  std::size_t i = 0;
  for (const auto& x : array(j, path)) v.push_back(int_from(x, path + "[" + std::to_string(i++) + "]"));
  return v;
}

bool bool_from(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected a boolean");
  return j.get<bool>();
}

std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

json ints_json(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back(integer_to_json(z));
  return a;
}

}  // namespace

json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    const bool digits = s.size() > start && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                                        [](char c) { return c >= '0' && c <= '9'; });
    if (!digits || (s[start] == '0' && s.size() > start + 1) || s == "-0") fail(path, "malformed integer string");
    return Integer(s);
  }
  fail(path, "expected an integer");
}

json rational_to_json(const Rational& q) {
  return json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

Rational rational_from_json(const json& j, const std::string& path) {
  if (j.is_array()) {
    if (j.size() != 2) fail(path, "expected [num, den]");
    const Integer n = integer_from_json(j[0], at(path, std::size_t{0}));
    const Integer d = integer_from_json(j[1], at(path, std::size_t{1}));
    if (d <= 0) fail(path, "denominator must be positive");
    return make_rational(n, d);
  }
  return Rational(integer_from_json(j, path));
}

json point_to_json(const lattice::LatticePoint& p) { return json::array({p.x, p.y}); }

lattice::LatticePoint point_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected [x, y]");
  return {int_from(j[0], at(path, std::size_t{0})), int_from(j[1], at(path, std::size_t{1}))};
}

json points_to_json(const lattice::PointList& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(point_to_json(p));
  return a;
}

lattice::PointList points_from_json(const json& j, const std::string& path) {
  lattice::PointList v;
  std::size_t i = 0;
  for (const auto& p : array(j, path)) v.push_back(point_from_json(p, at(path, i++)));
  return v;
}

json cut_to_json(const lattice::CutFunctional& f) {
  return json::array({rational_to_json(f.a), rational_to_json(f.b), rational_to_json(f.c)});
}

lattice::CutFunctional cut_from_json(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) fail(path, "expected [a, b, c]");
  try {
    return {rational_from_json(j[0], at(path, std::size_t{0})), rational_from_json(j[1], at(path, std::size_t{1})),
            rational_from_json(j[2], at(path, std::size_t{2}))};
  } catch (const JsonError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

// ---------------------------------------------------------------------------

json system_to_json(const fatpoints::FatPointSystem& s) {
  json pts = json::array();
  for (const auto& p : s.points) {
    json c = json::array();
    for (const auto& q : p.coords()) c.push_back(rational_to_json(q));
    pts.push_back(c);
  }
  json j = {{"degree", s.degree}, {"points", pts}, {"mults", s.mults}};
  if (!s.field.is_rational()) j["field"] = s.field.prime;
  return j;
}

fatpoints::FatPointSystem system_from_json(const json& j) {
  object(j, "$", {"degree", "points", "mults"}, {"field"});
  fatpoints::FatPointSystem s;
  s.degree = int_from(j["degree"], "$.degree");
  std::size_t i = 0;
  for (const auto& p : array(j["points"], "$.points")) {
    const std::string path = at("$.points", i++);
    if (!p.is_array() || p.size() != 3) fail(path, "expected three coordinates");
    try {
      s.points.emplace_back(rational_from_json(p[0], at(path, std::size_t{0})),
                            rational_from_json(p[1], at(path, std::size_t{1})),
                            rational_from_json(p[2], at(path, std::size_t{2})));
    } catch (const JsonError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
  }
  s.mults = ints_from(j["mults"], "$.mults");
  if (j.contains("field")) {
    const auto p = int_from(j["field"], "$.field");
    if (p != 0) {
      try {
        s.field = fatpoints::FieldSpec::prime_field(static_cast<std::uint64_t>(p));
      } catch (const std::invalid_argument& e) {
        fail("$.field", e.what());
      }
    }
  }
  try {
    fatpoints::validate(s);
  } catch (const std::invalid_argument& e) {
    fail("$", e.what());
  }
  return s;
}

json report_to_json(const fatpoints::SystemReport& r) {
  return {{"h0", r.h0}, {"h1", r.h1}, {"chi", r.chi}, {"expected", r.expected}, {"special", r.special}};
}

fatpoints::SystemReport report_from_json(const json& j) {
  object(j, "$", {"h0", "h1", "chi", "expected", "special"});
  return {int_from(j["h0"], "$.h0"), int_from(j["h1"], "$.h1"), int_from(j["chi"], "$.chi"),
          int_from(j["expected"], "$.expected"), bool_from(j["special"], "$.special")};
}

json problem_to_json(const EmptinessProblem& p) {
  json j = {{"domain", points_to_json(p.domain.points())}, {"mults", p.mults}};
  if (p.cuts) {
    json c = json::array();
    for (const auto& f : *p.cuts) c.push_back(cut_to_json(f));
    j["cuts"] = c;
  }
  return j;
}

EmptinessProblem problem_from_json(const json& j) {
  object(j, "$", {"domain", "mults"}, {"cuts"});
  EmptinessProblem p;
  try {
    p.domain = lattice::MonomialSet(points_from_json(j["domain"], "$.domain"));
  } catch (const JsonError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    fail("$.domain", e.what());
  }
  p.mults = ints_from(j["mults"], "$.mults");
  for (auto m : p.mults)
    if (m < 1) fail("$.mults", "multiplicities must be positive");
  if (j.contains("cuts")) {
    std::vector<lattice::CutFunctional> cuts;
    std::size_t i = 0;
    for (const auto& c : array(j["cuts"], "$.cuts")) cuts.push_back(cut_from_json(c, at("$.cuts", i++)));
    if (cuts.size() + 1 != p.mults.size()) fail("$.cuts", "need one cut fewer than multiplicities");
    p.cuts = cuts;
  }
  return p;
}

// ---------------------------------------------------------------------------

json subdivision_to_json(const toric::Subdivision& s) {
  json cells = json::array();
  for (const auto& c : s.cells) cells.push_back(points_to_json(c.vertices()));
  json heights = json::array();
  for (const auto& [p, h] : s.heights) heights.push_back(json::array({point_to_json(p), integer_to_json(h.get_num()), integer_to_json(h.get_den())}));
  return {{"cells", cells}, {"heights", heights}};
}

toric::Subdivision subdivision_from_json(const json& j) {
  object(j, "$", {"cells", "heights"});
  toric::Subdivision s;
  std::size_t i = 0;
  for (const auto& c : array(j["cells"], "$.cells")) {
    const std::string path = at("$.cells", i++);
    try {
      s.cells.emplace_back(points_from_json(c, path));
    } catch (const JsonError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      fail(path, e.what());
    }
  }
  i = 0;
  for (const auto& h : array(j["heights"], "$.heights")) {
    const std::string path = at("$.heights", i++);
    if (!h.is_array() || h.size() != 3) fail(path, "expected [point, num, den]");
    const auto p = point_from_json(h[0], at(path, std::size_t{0}));
    const Rational q = rational_from_json(json::array({h[1], h[2]}), path);
    if (!s.heights.emplace(p, q).second) fail(path, "duplicate point");
  }
  return s;
}

json fan_to_json(const toric::NormalFan& f) {
  json cones = json::array();
  for (const auto& c : f.cones) cones.push_back(points_to_json(c.generators));
  return {{"cones", cones}, {"rays", points_to_json(f.rays)}};
}

json lift_to_json(const toric::PiecewiseLinearLift& F) {
  json pieces = json::array();
  for (const auto& L : F.pieces) pieces.push_back(json::array({rational_to_json(L.a), rational_to_json(L.b), rational_to_json(L.c)}));
  json values = json::array();
  for (const auto& [p, v] : F.values) values.push_back(json::array({point_to_json(p), integer_to_json(v.get_num()), integer_to_json(v.get_den())}));
  return {{"pieces", pieces}, {"values", values}};
}

LiftInput lift_input_from_json(const json& j) {
  object(j, "$", {"points"}, {"heights", "recession"});
  LiftInput in;
  in.points = points_from_json(j["points"], "$.points");
  if (j.contains("heights")) {
    std::size_t i = 0;
    for (const auto& h : array(j["heights"], "$.heights")) in.heights.push_back(rational_from_json(h, at("$.heights", i++)));
    if (in.heights.size() != in.points.size()) fail("$.heights", "one height per point");
  }
  if (j.contains("recession")) in.recession = points_from_json(j["recession"], "$.recession");
  return in;
}

// ---------------------------------------------------------------------------

json kollar_to_json(const surfaces::KollarReport& r) {
  return {{"n", r.n},
          {"An", ints_json(r.An.coeffs)},
          {"AnSq", integer_to_json(r.AnSq)},
          {"An_dot_F1F2", integer_to_json(r.An_dot_F1F2)},
          {"nAn_minus_R_sq", integer_to_json(r.nAn_minus_R_sq)},
          {"chi", integer_to_json(r.chi)},
          {"h1_lower", integer_to_json(r.h1_lower)},
          {"h1_printed", integer_to_json(r.h1_printed)},
          {"h0_Cn", integer_to_json(r.h0_Cn)},
          {"nef", r.nef}};
}

surfaces::KollarReport kollar_from_json(const json& j) {
  object(j, "$", {"n", "An", "AnSq", "An_dot_F1F2", "nAn_minus_R_sq", "chi", "h1_lower", "h1_printed", "h0_Cn", "nef"});
  surfaces::KollarReport r;
  r.n = int_from(j["n"], "$.n");
  std::size_t i = 0;
  for (const auto& z : array(j["An"], "$.An")) r.An.coeffs.push_back(integer_from_json(z, at("$.An", i++)));
  r.AnSq = integer_from_json(j["AnSq"], "$.AnSq");
  r.An_dot_F1F2 = integer_from_json(j["An_dot_F1F2"], "$.An_dot_F1F2");
  r.nAn_minus_R_sq = integer_from_json(j["nAn_minus_R_sq"], "$.nAn_minus_R_sq");
  r.chi = integer_from_json(j["chi"], "$.chi");
  r.h1_lower = integer_from_json(j["h1_lower"], "$.h1_lower");
  r.h1_printed = integer_from_json(j["h1_printed"], "$.h1_printed");
  r.h0_Cn = integer_from_json(j["h0_Cn"], "$.h0_Cn");
  r.nef = bool_from(j["nef"], "$.nef");
  return r;
}

json incidence_to_json(const surfaces::IncidenceConfig& c) {
  static const char* kinds[] = {"general_lines", "projective_plane", "collinear", "exceptional_only"};
  const auto coords = [](const std::vector<surfaces::Coords>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(json::array({x[0], x[1], x[2]}));
    return a;
  };
  return {{"kind", kinds[static_cast<int>(c.kind)]},
          {"modulus", c.modulus},
          {"points", coords(c.points)},
          {"lines", coords(c.lines)},
          {"incidence", c.incidence},
          {"c_squared", integer_to_json(surfaces::c_squared(c))},
          {"lines_lower_bound", integer_to_json(surfaces::lines_lower_bound(c))},
          {"ratio", rational_to_json(surfaces::ratio_report(c))}};
}

json nodal_to_json(const surfaces::NodalCurve& c) {
  return {{"n", c.n}, {"Csq", c.Csq}, {"ratio", rational_to_json(c.ratio)}};
}

// ---------------------------------------------------------------------------

json ideal_to_json(const symbolic::MonomialIdeal& I) {
  json vars = json::array();
  for (std::size_t i = 0; i < I.nvars(); ++i) {
    symbolic::Monomial m{std::vector<std::int64_t>(I.nvars(), 0)};
    m.exps[i] = 1;
    vars.push_back(symbolic::to_string(m));
  }
  json gens = json::array();
  for (const auto& g : I.gens()) gens.push_back(g.exps);
  return {{"vars", vars}, {"gens", gens}};
}

symbolic::MonomialIdeal ideal_from_json(const json& j) {
  object(j, "$", {"vars", "gens"});
  std::size_t n = 0;
  std::set<std::string> seen;
  for (const auto& v : array(j["vars"], "$.vars")) {
    if (!v.is_string() || v.get_ref<const std::string&>().empty()) fail(at("$.vars", n), "expected a variable name");
    if (!seen.insert(v.get<std::string>()).second) fail(at("$.vars", n), "duplicate variable name");
    ++n;
  }
  if (n > symbolic::kMaxVariables) fail("$.vars", "at most 12 variables");
  std::vector<symbolic::Monomial> gens;
  std::size_t i = 0;
  for (const auto& g : array(j["gens"], "$.gens")) {
    const std::string path = at("$.gens", i++);
    auto e = ints_from(g, path);
    if (e.size() != n) fail(path, "exponent vector length differs from the number of variables");
    for (auto x : e)
      if (x < 0) fail(path, "negative exponent");
    gens.push_back({std::move(e)});
  }
  return symbolic::MonomialIdeal(n, std::move(gens));
}

json containment_to_json(const symbolic::ContainmentReport& r) {
  return {{"r", r.r},      {"e", r.e},     {"n", r.n},     {"els", r.els}, {"harbourne", r.harbourne},
          {"hh1", r.hh1}, {"hh2", r.hh2}, {"hh3", r.hh3}, {"hh4", r.hh4}};
}

symbolic::ContainmentReport containment_from_json(const json& j) {
  object(j, "$", {"r", "e", "n", "els", "harbourne", "hh1", "hh2", "hh3", "hh4"});
  symbolic::ContainmentReport r;
  r.r = int_from(j["r"], "$.r");
  r.e = static_cast<std::size_t>(int_from(j["e"], "$.e"));
  r.n = static_cast<std::size_t>(int_from(j["n"], "$.n"));
  r.els = bool_from(j["els"], "$.els");
  r.harbourne = bool_from(j["harbourne"], "$.harbourne");
  r.hh1 = bool_from(j["hh1"], "$.hh1");
  r.hh2 = bool_from(j["hh2"], "$.hh2");
  r.hh3 = bool_from(j["hh3"], "$.hh3");
  r.hh4 = bool_from(j["hh4"], "$.hh4");
  return r;
}

json chain_to_json(const symbolic::ElsChain& c) {
  return {{"left", c.left}, {"middle", c.middle}, {"right", c.right}};
}

// ---------------------------------------------------------------------------

json arrangement_to_json(const arrangements::LineArrangement& A) {
  json lines = json::array();
  for (const auto& f : A.forms()) lines.push_back(json::array({rational_to_json(f[0]), rational_to_json(f[1]), rational_to_json(f[2])}));
  return {{"lines", lines}};
}

arrangements::LineArrangement arrangement_from_json(const json& j) {
  object(j, "$", {"lines"});
  std::vector<arrangements::Form> forms;
  std::size_t i = 0;
  for (const auto& l : array(j["lines"], "$.lines")) {
    const std::string path = at("$.lines", i++);
    if (!l.is_array() || l.size() != 3) fail(path, "expected [a, b, c]");
    forms.push_back({rational_from_json(l[0], at(path, std::size_t{0})), rational_from_json(l[1], at(path, std::size_t{1})),
                     rational_from_json(l[2], at(path, std::size_t{2}))});
  }
  try {
    return arrangements::LineArrangement(std::move(forms));
  } catch (const std::invalid_argument& e) {
    fail("$.lines", e.what());
  }
}

json counts_to_json(const arrangements::GradedCounts& g) {
  json dims = json::array(), gens = json::array();
  for (const auto& [k, v] : g.ideal_dim) dims.push_back(v);
  for (const auto& [k, v] : g.min_gens) gens.push_back(v);
  return {{"max_deg", g.max_deg}, {"ideal_dim", dims}, {"min_gens", gens}, {"linear_syzygies", g.linear_syzygies}};
}

arrangements::GradedCounts counts_from_json(const json& j) {
  object(j, "$", {"max_deg", "ideal_dim", "min_gens", "linear_syzygies"});
  arrangements::GradedCounts g;
  g.max_deg = static_cast<std::size_t>(int_from(j["max_deg"], "$.max_deg"));
  const auto dims = ints_from(j["ideal_dim"], "$.ideal_dim");
  const auto gens = ints_from(j["min_gens"], "$.min_gens");
  if (dims.size() != g.max_deg || gens.size() != g.max_deg) fail("$", "one entry per degree 1..max_deg");
  for (std::size_t k = 0; k < g.max_deg; ++k) {
    g.ideal_dim[static_cast<int>(k + 1)] = static_cast<std::size_t>(dims[k]);
    g.min_gens[static_cast<int>(k + 1)] = static_cast<std::size_t>(gens[k]);
  }
  g.linear_syzygies = static_cast<std::size_t>(int_from(j["linear_syzygies"], "$.linear_syzygies"));
  return g;
}

json circuit_to_json(const arrangements::Circuit& c) { return {{"indices", c.indices}, {"coeffs", ints_json(c.coeffs)}}; }

json da_to_json(const arrangements::DaReport& r) {
  return {{"class", ints_json(r.D.coeffs)},
          {"line_pairings", ints_json(r.line_pairings)},
          {"exceptional_pairings", ints_json(r.exceptional_pairings)},
          {"nef_partial", r.nef_partial},
          {"lines_contracted", r.lines_contracted}};
}

}  // namespace linserlab::json_io
