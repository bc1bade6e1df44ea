#include "linserlab/cli.hpp"

#include <fstream>
#include <sstream>

#include "linserlab/arrangements.hpp"
#include "linserlab/certificate.hpp"
#include "linserlab/dumnicki.hpp"
#include "linserlab/fatpoints.hpp"
#include "linserlab/json_io.hpp"
#include "linserlab/surfaces.hpp"
#include "linserlab/symbolic.hpp"
#include "linserlab/toric.hpp"

namespace linserlab::cli {

using nlohmann::json;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

const std::vector<SubcommandDef> kSubcommands = {
    {"cohomology",
     "h0 and h1 of a fat-point system",
     {},
     {{"degree", "degree d"},
      {"mults", "multiplicities, e.g. 2,2,2 or 4^9"},
      {"trials", "random point sets tried (default 3)"},
      {"system", "system JSON file with explicit points"}}},
    {"alpha",
     "initial degree a(S, m) of a point configuration",
     {},
     {{"config", "random | collinear | star | pencil_products"},
      {"param", "configuration size parameter"},
      {"m", "uniform multiplicity (default 1)"},
      {"system", "take the points from a system JSON file"}}},
    {"waldschmidt",
     "Waldschmidt sandwich and Chudnovsky bound",
     {},
     {{"config", "random | collinear | star | pencil_products"},
      {"param", "configuration size parameter"},
      {"k", "sandwich index (default 1)"},
      {"system", "take the points from a system JSON file"}}},
    {"empty",
     "certify emptiness of a toric linear system by cutting",
     {},
     {{"family", "built-in family: nine-cut"},
      {"n", "family parameter"},
      {"problem", "problem JSON file {domain, mults, cuts?}"},
      {"nodes", "cut search node budget when no cuts are given"}}},
    {"toric",
     "normal fans, regular subdivisions and split lifts",
     {"fan", "subdivide", "split"},
     {{"input", "JSON file {points, heights?, recession?}", {"fan", "subdivide"}},
      {"example", "twisted-cubic", {"fan"}},
      {"family", "nine-cut", {"split"}},
      {"n", "family parameter", {"split"}}}},
    {"surface",
     "Kollar numbers, counterexample index, nodal curves",
     {"kollar", "counterexample", "nodal"},
     {{"n", "index n >= 2", {"kollar"}}, {"c", "constant c >= 0", {"counterexample"}}, {"d", "degree d >= 3", {"nodal"}}}},
    {"negativity",
     "self-intersection of line configurations",
     {},
     {{"config", "pg2 | general | collinear | exceptional"},
      {"q", "pg2: prime q"},
      {"s", "general: number of lines"},
      {"n", "collinear, exceptional: number of points"}}},
    {"symbolic",
     "symbolic powers and multiplier ideals of monomial ideals",
     {"suite", "chain", "multiplier", "howald"},
     {{"ideal", "ideal JSON file {vars, gens}"},
      {"example", "triangle: (xy, xz, yz)"},
      {"r", "power r", {"suite", "chain"}},
      {"t", "rational t, e.g. 3/2", {"multiplier"}},
      {"c", "rational c", {"howald"}}}},
    {"ot",
     "Orlik-Terao relations of a line arrangement",
     {"counts", "circuits", "da"},
     {{"arrangement", "arrangement JSON file {lines}"},
      {"example", "five | m8 | generic"},
      {"s", "number of lines for --example generic"},
      {"maxdeg", "top degree 2..4 (default 3)", {"counts"}},
      {"max-size", "largest circuit (default 4)", {"circuits"}}}},
    {"verify", "re-check an emptiness certificate", {}, {}, true},
};

// ---------------------------------------------------------------------------
// option access

bool has(const Command& cmd, const std::string& key) { return cmd.options.count(key) > 0; }

const std::string& str(const Command& cmd, const std::string& key) {
  const auto it = cmd.options.find(key);
  if (it == cmd.options.end()) throw UsageError("missing --" + key);
  return it->second;
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(what + ": expected an integer, got \"" + s + "\"");
  }
}

std::int64_t get_int(const Command& cmd, const std::string& key) { return parse_int(str(cmd, key), "--" + key); }

std::int64_t get_int(const Command& cmd, const std::string& key, std::int64_t fallback) {
  return has(cmd, key) ? get_int(cmd, key) : fallback;
}

std::int64_t get_positive(const Command& cmd, const std::string& key, std::int64_t lo = 1) {
  const auto v = get_int(cmd, key);
  if (v < lo) throw UsageError("--" + key + " must be at least " + std::to_string(lo));
  return v;
}

// "2,2,2" or "5,4^9"
std::vector<std::int64_t> parse_list(const std::string& s, const std::string& what) {
  std::vector<std::int64_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto caret = tok.find('^');
    if (caret == std::string::npos) {
      out.push_back(parse_int(tok, what));
    } else {
      const auto v = parse_int(tok.substr(0, caret), what);
      const auto k = parse_int(tok.substr(caret + 1), what);
      if (k < 0 || k > 100000) throw UsageError(what + ": bad repeat count");
      out.insert(out.end(), static_cast<std::size_t>(k), v);
    }
  }
  if (out.empty()) throw UsageError(what + ": empty list");
  return out;
}

Rational parse_rational(const std::string& s, const std::string& what) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    const Integer num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return make_rational(num, den);
  } catch (const std::exception&) {
    throw UsageError(what + ": expected a rational a/b, got \"" + s + "\"");
  }
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

template <class F>
auto parse_file(const std::string& path, F parse) {
  const json j = read_json(path);
  try {
    return parse(j);
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string approx(const Rational& q) {
  std::ostringstream os;
  os.precision(6);
  os << to_string(q);
  if (q.get_den() != 1) os << " (~" << q.get_d() << ")";
  return os.str();
}

struct Result {
  int code = kSuccess;
  std::string text;
  json result;
  std::optional<json> artifact;
};

// ---------------------------------------------------------------------------
// fat points

std::vector<fatpoints::ProjectivePoint> config_points(const Command& cmd) {
  if (has(cmd, "system")) {
    if (has(cmd, "config") || has(cmd, "param")) throw UsageError("--system excludes --config and --param");
    return parse_file(str(cmd, "system"), json_io::system_from_json).points;
  }
  fatpoints::ConfigKind kind;
  try {
    kind = fatpoints::parse_config_kind(str(cmd, "config"));
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return fatpoints::make_config(kind, get_positive(cmd, "param"), cmd.seed);
}

Result do_cohomology(const Command& cmd) {
  Result r;
  fatpoints::SystemReport rep;
  if (has(cmd, "system")) {
    for (const char* k : {"degree", "mults", "trials"})
      if (has(cmd, k)) throw UsageError(std::string("--system excludes --") + k);
    const auto sys = parse_file(str(cmd, "system"), json_io::system_from_json);
    rep = fatpoints::cohomology(sys);
    r.result["system"] = json_io::system_to_json(sys);
  } else {
    const auto d = get_int(cmd, "degree");
    const auto mults = parse_list(str(cmd, "mults"), "--mults");
    const auto trials = get_int(cmd, "trials", 3);
    if (d < 0) throw UsageError("--degree must be nonnegative");
    if (trials < 1) throw UsageError("--trials must be positive");
    for (auto m : mults)
      if (m < 0) throw UsageError("--mults must be nonnegative");
    rep = fatpoints::generic_cohomology(d, mults, cmd.seed, trials);
    r.result["degree"] = d;
    r.result["mults"] = mults;
    r.result["trials"] = trials;
  }
  r.result["report"] = json_io::report_to_json(rep);
  r.text = "h0=" + std::to_string(rep.h0) + " h1=" + std::to_string(rep.h1) + " chi=" + std::to_string(rep.chi) +
           " expected=" + std::to_string(rep.expected) + (rep.special ? " special" : " non-special") + "\n";
  return r;
}

Result do_alpha(const Command& cmd) {
  Result r;
  const auto pts = config_points(cmd);
  const auto m = get_int(cmd, "m", 1);
  if (m < 1) throw UsageError("--m must be positive");
  const auto a = fatpoints::alpha(pts, m);
  r.result = {{"points", pts.size()}, {"m", m}, {"alpha", a}};
  r.text = "alpha(S, " + std::to_string(m) + ") = " + std::to_string(a) + " for " + std::to_string(pts.size()) + " points\n";
  return r;
}

Result do_waldschmidt(const Command& cmd) {
  Result r;
  const auto pts = config_points(cmd);
  const auto k = get_int(cmd, "k", 1);
  if (k < 1) throw UsageError("--k must be positive");
  const auto [lo, hi] = fatpoints::waldschmidt_sandwich(pts, k);
  const auto ch = fatpoints::chudnovsky_report(pts);
  r.result = {{"points", pts.size()},
              {"k", k},
              {"lower", json_io::rational_to_json(lo)},
              {"upper", json_io::rational_to_json(hi)},
              {"chudnovsky",
               {{"alpha1", ch.alpha1},
                {"alpha2", ch.alpha2},
                {"bound", json_io::rational_to_json(ch.bound)},
                {"equality", ch.equality_witness}}}};
  r.text = approx(lo) + " <= e(S) <= " + approx(hi) + "\nalpha1=" + std::to_string(ch.alpha1) +
           " alpha2=" + std::to_string(ch.alpha2) + " Chudnovsky bound " + approx(ch.bound) +
           (ch.equality_witness ? " attained\n" : " strict\n");
  return r;
}

// ---------------------------------------------------------------------------
// emptiness

dumnicki::FamilyInstance family(const Command& cmd) {
  if (str(cmd, "family") != "nine-cut") throw UsageError("unknown --family " + str(cmd, "family"));
  return dumnicki::nine_cut_family(get_positive(cmd, "n"));
}

Result do_empty(const Command& cmd) {
  Result r;
  json_io::EmptinessProblem prob;
  if (has(cmd, "problem")) {
    if (has(cmd, "family") || has(cmd, "n")) throw UsageError("--problem excludes --family and --n");
    prob = parse_file(str(cmd, "problem"), json_io::problem_from_json);
  } else {
    if (has(cmd, "nodes")) throw UsageError("--nodes applies to --problem without cuts");
    auto f = family(cmd);
    prob = {f.D, f.mults, f.cuts};
  }
  if (!prob.cuts) {
    dumnicki::SearchBudget budget;
    budget.nodes = get_int(cmd, "nodes", budget.nodes);
    prob.cuts = dumnicki::search_cuts(prob.domain, prob.mults, budget);
    if (!prob.cuts) {
      r.code = kUndecided;
      r.result = {{"status", "undecided"}, {"reason", "no cut sequence found within the search budget"}};
      r.text = "undecided: no cut sequence found\n";
      return r;
    }
  }
  const auto proof = dumnicki::prove_empty(prob.domain, prob.mults, *prob.cuts);
  switch (proof.status) {
    case dumnicki::ProofStatus::Certified: {
      const json cert = certificate::to_json(*proof.certificate);
      const auto check = certificate::verify(cert);
      if (!check.valid) throw std::logic_error("emitted certificate does not verify: " + check.reason);
      r.result = {{"status", "certified"}, {"pieces", proof.certificate->pieces.size()}, {"certificate", cert}};
      r.artifact = cert;
      r.text = "certified empty: " + std::to_string(proof.certificate->pieces.size()) + " pieces, " +
               std::to_string(prob.cuts->size()) + " cuts\n";
      break;
    }
    case dumnicki::ProofStatus::Nonempty:
    case dumnicki::ProofStatus::Undecided: {
      const bool nonempty = proof.status == dumnicki::ProofStatus::Nonempty;
      r.code = nonempty ? kCounterWitness : kUndecided;
      r.result = {{"status", nonempty ? "nonempty" : "undecided"}};
      if (proof.failed_piece) r.result["failed_piece"] = *proof.failed_piece;
      if (proof.failure) r.result["piece_dim"] = proof.failure->dim;
      r.text = std::string(nonempty ? "nonempty" : "undecided") +
               (proof.failed_piece ? " at piece " + std::to_string(*proof.failed_piece) : std::string()) + "\n";
      break;
    }
  }
  return r;
}

Result do_verify(const Command& cmd) {
  Result r;
  if (!cmd.input) throw UsageError("verify needs a certificate file");
  const json j = read_json(*cmd.input);
  const auto v = certificate::verify(j);
  r.result = {{"valid", v.valid}, {"reason", v.reason}};
  if (v.failing_piece) r.result["failing_piece"] = *v.failing_piece;
  if (v.valid) {
    r.text = "certificate valid\n";
  } else {
    r.code = kCounterWitness;
    r.text = "certificate rejected" + (v.failing_piece ? " at piece " + std::to_string(*v.failing_piece) : std::string()) +
             ": " + v.reason + "\n";
  }
  return r;
}

// ---------------------------------------------------------------------------
// toric

Result do_toric(const Command& cmd) {
  Result r;
  if (cmd.action == "fan") {
    toric::NormalFan fan;
    if (has(cmd, "example")) {
      if (has(cmd, "input")) throw UsageError("--example excludes --input");
      if (str(cmd, "example") != "twisted-cubic") throw UsageError("unknown --example " + str(cmd, "example"));
      fan = toric::normal_fan(toric::twisted_cubic_polyhedron());
    } else {
      const auto in = parse_file(str(cmd, "input"), json_io::lift_input_from_json);
      if (!in.heights.empty()) throw UsageError("fan: heights are not used");
      try {
        fan = in.recession.empty() ? toric::normal_fan(lattice::LatticePolygon::hull_of(in.points))
                                   : toric::normal_fan(toric::Polyhedron2{in.points, in.recession});
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    r.result = json_io::fan_to_json(fan);
    r.text = std::to_string(fan.cones.size()) + " cones, rays:";
    for (const auto& v : fan.rays) r.text += " (" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
    r.text += "\n";
  } else if (cmd.action == "subdivide") {
    const auto in = parse_file(str(cmd, "input"), json_io::lift_input_from_json);
    if (in.heights.empty()) throw UsageError("subdivide: heights are required");
    if (!in.recession.empty()) throw UsageError("subdivide: recession is not used");
    toric::Heights h;
    for (std::size_t i = 0; i < in.points.size(); ++i)
      if (!h.emplace(in.points[i], in.heights[i]).second) throw UsageError("subdivide: repeated point");
    toric::Subdivision sub;
    try {
      sub = toric::lower_hull_subdivision(in.points, h);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const auto lift = toric::induced_lift(sub);
    const bool convex = toric::check_strict_convexity(sub, lift);
    r.result = {{"subdivision", json_io::subdivision_to_json(sub)}, {"lift", json_io::lift_to_json(lift)}, {"strictly_convex", convex}};
    r.code = convex ? kSuccess : kCounterWitness;
    r.text = std::to_string(sub.cells.size()) + " cells, induced lift " + (convex ? "strictly convex" : "not strictly convex") + "\n";
  } else {
    const auto f = family(cmd);
    const auto lift = toric::iterated_split_lift(f.D, f.cuts);
    const auto parts = toric::lift_parts(lift);
    const bool match = parts == dumnicki::reduce_partition(f.D, f.cuts);
    json sizes = json::array();
    for (const auto& p : parts) sizes.push_back(p.points().size());
    r.result = {{"lift", json_io::lift_to_json(lift)}, {"part_sizes", sizes}, {"matches_partition", match}};
    r.code = match ? kSuccess : kCounterWitness;
    r.text = std::to_string(parts.size()) + " parts, " + (match ? "equal to" : "different from") + " the cut partition\n";
  }
  return r;
}

// ---------------------------------------------------------------------------
// surfaces

Result do_surface(const Command& cmd) {
  Result r;
  if (cmd.action == "kollar") {
    const auto rep = surfaces::kollar_report(get_positive(cmd, "n", 2));
    r.result = json_io::kollar_to_json(rep);
    r.text = "n=" + std::to_string(rep.n) + " An^2=" + to_string(rep.AnSq) + " An.(F1+F2)=" + to_string(rep.An_dot_F1F2) +
             " (nAn-R)^2=" + to_string(rep.nAn_minus_R_sq) + " h1>=" + to_string(rep.h1_lower) + " h0(Cn)=" +
             to_string(rep.h0_Cn) + (rep.nef ? " nef" : " not nef") + "\n";
  } else if (cmd.action == "counterexample") {
    const auto c = get_positive(cmd, "c", 0);
    const auto n = surfaces::counterexample_n(c);
    r.result = {{"c", c}, {"n", n}};
    r.text = "least n with (n-1)^3 > c n^2: " + std::to_string(n) + "\n";
  } else {
    const auto nc = surfaces::rational_curve_nodes(get_positive(cmd, "d", 3));
    r.result = json_io::nodal_to_json(nc);
    r.text = std::to_string(nc.n) + " nodes, C^2=" + std::to_string(nc.Csq) + " ratio " + approx(nc.ratio) + "\n";
  }
  return r;
}

Result do_negativity(const Command& cmd) {
  Result r;
  const auto& kind = str(cmd, "config");
  const std::map<std::string, std::string> param = {{"pg2", "q"}, {"general", "s"}, {"collinear", "n"}, {"exceptional", "n"}};
  const auto it = param.find(kind);
  if (it == param.end()) throw UsageError("unknown --config " + kind);
  for (const char* k : {"q", "s", "n"})
    if (has(cmd, k) && it->second != k) throw UsageError("--" + std::string(k) + " does not apply to " + kind);
  surfaces::IncidenceConfig cfg;
  try {
    if (kind == "pg2") cfg = surfaces::projective_plane(get_int(cmd, "q"));
    if (kind == "general") cfg = surfaces::general_lines(get_int(cmd, "s"), cmd.seed);
    if (kind == "collinear") cfg = surfaces::collinear(get_int(cmd, "n"));
    if (kind == "exceptional") cfg = surfaces::exceptional_only(get_int(cmd, "n"));
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  r.result = json_io::incidence_to_json(cfg);
  r.text = "C^2=" + to_string(surfaces::c_squared(cfg)) + " lines bound " + to_string(surfaces::lines_lower_bound(cfg)) +
           " ratio " + approx(surfaces::ratio_report(cfg)) + "\n";
  return r;
}

// ---------------------------------------------------------------------------
// symbolic

symbolic::MonomialIdeal ideal(const Command& cmd) {
  if (has(cmd, "example")) {
    if (has(cmd, "ideal")) throw UsageError("--example excludes --ideal");
    if (str(cmd, "example") != "triangle") throw UsageError("unknown --example " + str(cmd, "example"));
    return symbolic::MonomialIdeal(3, {{{1, 1, 0}}, {{1, 0, 1}}, {{0, 1, 1}}});
  }
  return parse_file(str(cmd, "ideal"), json_io::ideal_from_json);
}

Result do_symbolic(const Command& cmd) {
  Result r;
  const auto I = ideal(cmd);
  r.result["ideal"] = json_io::ideal_to_json(I);
  try {
    if (cmd.action == "suite") {
      const auto rep = symbolic::containment_suite(I, get_positive(cmd, "r"));
      r.result["containment"] = json_io::containment_to_json(rep);
      const bool all = rep.els && rep.harbourne && rep.hh1 && rep.hh2 && rep.hh3 && rep.hh4;
      r.text = "e=" + std::to_string(rep.e) + " els=" + (rep.els ? "yes" : "no") + " harbourne=" + (rep.harbourne ? "yes" : "no") +
               " hh1..hh4=" + (rep.hh1 ? "y" : "n") + (rep.hh2 ? "y" : "n") + (rep.hh3 ? "y" : "n") + (rep.hh4 ? "y" : "n") + "\n";
      if (!all) r.code = kCounterWitness;
    } else if (cmd.action == "chain") {
      const auto c = symbolic::els_chain_check(I, get_positive(cmd, "r"));
      r.result["chain"] = json_io::chain_to_json(c);
      r.text = std::string("chain ") + (c.left ? "y" : "n") + (c.middle ? "y" : "n") + (c.right ? "y" : "n") + "\n";
      if (!(c.left && c.middle && c.right)) r.code = kCounterWitness;
    } else if (cmd.action == "multiplier") {
      const auto t = parse_rational(str(cmd, "t"), "--t");
      if (t <= 0) throw UsageError("--t must be positive");
      r.result["t"] = json_io::rational_to_json(t);
      try {
        const auto J = symbolic::asymptotic_multiplier(I, t);
        r.result["multiplier"] = json_io::ideal_to_json(J);
        r.text = "J(" + to_string(t) + " . I^(*)) = " + symbolic::to_string(J) + "\n";
      } catch (const symbolic::NonStabilization& e) {
        r.code = kUndecided;
        r.result["stabilized"] = false;
        r.text = std::string("undecided: ") + e.what() + "\n";
      }
    } else {
      const auto c = parse_rational(str(cmd, "c"), "--c");
      if (c <= 0) throw UsageError("--c must be positive");
      const auto J = symbolic::howald_multiplier(I, c);
      r.result["c"] = json_io::rational_to_json(c);
      r.result["multiplier"] = json_io::ideal_to_json(J);
      r.text = "J(" + to_string(c) + " . I) = " + symbolic::to_string(J) + "\n";
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return r;
}

// ---------------------------------------------------------------------------
// arrangements

arrangements::LineArrangement arrangement(const Command& cmd) {
  if (has(cmd, "example")) {
    if (has(cmd, "arrangement")) throw UsageError("--example excludes --arrangement");
    const auto& e = str(cmd, "example");
    if (e != "generic" && has(cmd, "s")) throw UsageError("--s applies to --example generic");
    if (e == "five") return arrangements::five_line_example();
    if (e == "m8") return arrangements::m8_minus();
    if (e == "generic") {
      const auto s = get_positive(cmd, "s", 2);
      if (s > 40) throw UsageError("--s at most 40");
      return arrangements::generic_lines(static_cast<std::size_t>(s), cmd.seed);
    }
    throw UsageError("unknown --example " + e);
  }
  if (has(cmd, "s")) throw UsageError("--s applies to --example generic");
  return parse_file(str(cmd, "arrangement"), json_io::arrangement_from_json);
}

Result do_ot(const Command& cmd) {
  Result r;
  const auto A = arrangement(cmd);
  r.result["arrangement"] = json_io::arrangement_to_json(A);
  try {
    if (cmd.action == "counts") {
      const auto g = arrangements::graded_counts(A, static_cast<int>(get_int(cmd, "maxdeg", 3)));
      r.result["counts"] = json_io::counts_to_json(g);
      r.text = "minimal generators by degree:";
      for (const auto& [k, v] : g.min_gens) r.text += " " + std::to_string(k) + ":" + std::to_string(v);
      r.text += ", linear syzygies among quadrics: " + std::to_string(g.linear_syzygies) + "\n";
    } else if (cmd.action == "circuits") {
      const auto k = get_int(cmd, "max-size", 4);
      if (k < 2 || k > 6) throw UsageError("--max-size must be in 2..6");
      json cs = json::array();
      for (const auto& c : arrangements::circuits(A, static_cast<std::size_t>(k))) cs.push_back(json_io::circuit_to_json(c));
      r.result["circuits"] = cs;
      r.text = std::to_string(cs.size()) + " circuits of size <= " + std::to_string(k) + "\n";
    } else {
      const auto da = arrangements::da_divisor(A);
      r.result["da"] = json_io::da_to_json(da);
      r.text = std::string("D_A ") + (da.nef_partial ? "nonnegative" : "negative") + " on the lines and exceptional curves, " +
               (da.lines_contracted ? "contracts every line" : "does not contract every line") + "\n";
      if (!da.nef_partial) r.code = kCounterWitness;
    }
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return r;
}

}  // namespace

const std::vector<SubcommandDef>& subcommands() { return kSubcommands; }

const SubcommandDef* find_subcommand(const std::string& name) {
  for (const auto& s : kSubcommands)
    if (s.name == name) return &s;
  return nullptr;
}

Outcome run(const Command& cmd) {
  Outcome out;
  out.report = {{"tool", "linserlab"}, {"version", kVersion}, {"seed", cmd.seed}, {"subcommand", cmd.subcommand}};
  if (!cmd.action.empty()) out.report["action"] = cmd.action;
  try {
    const auto* def = find_subcommand(cmd.subcommand);
    if (!def) throw UsageError("unknown subcommand \"" + cmd.subcommand + "\"");
    if (def->actions.empty() != cmd.action.empty() ||
        (!cmd.action.empty() && std::find(def->actions.begin(), def->actions.end(), cmd.action) == def->actions.end()))
      throw UsageError(cmd.subcommand + ": bad action \"" + cmd.action + "\"");
    for (const auto& [k, v] : cmd.options)
      if (std::none_of(def->options.begin(), def->options.end(), [&](const OptionDef& o) { return o.name == k; }))
        throw UsageError(cmd.subcommand + ": unknown option --" + k);
    for (const auto& o : def->options)
      if (cmd.options.count(o.name) && !o.actions.empty() &&
          std::find(o.actions.begin(), o.actions.end(), cmd.action) == o.actions.end())
        throw UsageError("--" + o.name + " does not apply to " + cmd.subcommand + " " + cmd.action);
    if (cmd.input && !def->positional_input) throw UsageError(cmd.subcommand + ": unexpected argument " + *cmd.input);

    Result r;
    if (cmd.subcommand == "cohomology") r = do_cohomology(cmd);
    else if (cmd.subcommand == "alpha") r = do_alpha(cmd);
    else if (cmd.subcommand == "waldschmidt") r = do_waldschmidt(cmd);
    else if (cmd.subcommand == "empty") r = do_empty(cmd);
    else if (cmd.subcommand == "toric") r = do_toric(cmd);
    else if (cmd.subcommand == "surface") r = do_surface(cmd);
    else if (cmd.subcommand == "negativity") r = do_negativity(cmd);
    else if (cmd.subcommand == "symbolic") r = do_symbolic(cmd);
    else if (cmd.subcommand == "ot") r = do_ot(cmd);
    else r = do_verify(cmd);

    out.exit_code = r.code;
    out.text = std::move(r.text);
    out.report["result"] = std::move(r.result);
    out.artifact = std::move(r.artifact);
  } catch (const std::exception& e) {
    // Library preconditions that slip past the option checks are usage errors too.
    out.exit_code = kUsage;
    out.text = std::string("error: ") + e.what() + "\n";
    out.report["error"] = e.what();
  }
  return out;
}

}  // namespace linserlab::cli
