#include "linserlab/certificate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace linserlab::certificate {

using json = nlohmann::json;
using namespace linserlab::dumnicki;

namespace {

json point_json(const LatticePoint& p) { return json::array({p.x, p.y}); }

json points_json(const PointList& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(point_json(p));
  return a;
}

json rational_json(const Rational& q) {
  if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p())
    throw std::overflow_error("rational exceeds 64-bit certificate range");
  return json::array({q.get_num().get_si(), q.get_den().get_si()});
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("certificate: " + what);
}

void require_keys(const json& j, std::initializer_list<const char*> keys) {
  require(j.is_object(), "expected an object");
  require(j.size() == keys.size(), "unexpected keys");
  for (const char* k : keys) require(j.contains(k), std::string("missing key ") + k);
}

std::int64_t get_int(const json& j) {
  require(j.is_number_integer(), "expected an integer");
  if (j.is_number_unsigned()) {
    require(j.get<std::uint64_t>() <= static_cast<std::uint64_t>(INT64_MAX), "integer out of range");
  }
  return j.get<std::int64_t>();
}

LatticePoint get_point(const json& j) {
  require(j.is_array() && j.size() == 2, "point must be a pair");
  return {get_int(j[0]), get_int(j[1])};
}

PointList get_points(const json& j) {
  require(j.is_array(), "expected a point list");
  PointList out;
  for (const auto& p : j) out.push_back(get_point(p));
  return out;
}

// Keeps the order of the stored list so the verifier can insist on it.
Rational get_rational_raw(const json& j, bool& canonical) {
  require(j.is_array() && j.size() == 2, "rational must be [num, den]");
  const std::int64_t num = get_int(j[0]);
  const std::int64_t den = get_int(j[1]);
  require(den != 0, "zero denominator");
  Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  q.canonicalize();
  canonical = den > 0 && q.get_num() == num && q.get_den() == den;
  return q;
}

Integer get_big(const json& j) {
  require(j.is_string(), "expected a decimal string");
  const std::string s = j.get<std::string>();
  require(!s.empty(), "empty integer string");
  std::size_t start = s[0] == '-' ? 1 : 0;
  require(start < s.size(), "malformed integer string");
  for (std::size_t i = start; i < s.size(); ++i) require(s[i] >= '0' && s[i] <= '9', "malformed integer string");
  require(!(s.size() - start > 1 && s[start] == '0'), "non-canonical integer string");
  require(s != "-0", "non-canonical integer string");
  return Integer(s);
}

}  // namespace

json to_json(const EmptinessCertificate& c) {
  json j;
  j["format"] = kFormat;
  j["domain"] = points_json(c.domain.points());
  j["mults"] = c.mults;
  j["cuts"] = json::array();
  for (const auto& f : c.cuts) j["cuts"].push_back(json::array({rational_json(f.a), rational_json(f.b), rational_json(f.c)}));
  j["pieces"] = json::array();
  for (const auto& p : c.pieces) {
    json ev;
    if (const auto* la = std::get_if<LineAssignment>(&p.evidence)) {
      ev["kind"] = "line_assignment";
      ev["direction"] = direction_name(la->direction);
      ev["lines"] = json::array();
      for (auto [coord, label] : la->lines) ev["lines"].push_back(json::array({coord, label}));
    } else if (const auto* nd = std::get_if<NonzeroDeterminant>(&p.evidence)) {
      ev["kind"] = "nonzero_determinant";
      ev["rows"] = points_json(nd->rows);
      ev["value"] = nd->value.get_str();
    } else {
      const auto& fr = std::get<FullRank>(p.evidence);
      ev["kind"] = "full_rank";
      ev["rows"] = points_json(fr.rows);
      ev["residue"] = fr.residue;
    }
    j["pieces"].push_back({{"points", points_json(p.points.points())}, {"mult", p.mult}, {"evidence", ev}});
  }
  return j;
}

namespace {

struct Parsed {
  EmptinessCertificate cert;
  PointList raw_domain;                 // as listed
  std::vector<PointList> raw_pieces;    // as listed
  bool canonical_rationals = true;
};

Parsed parse(const json& j) {
  require_keys(j, {"format", "domain", "mults", "cuts", "pieces"});
  require(j["format"].is_string() && j["format"].get<std::string>() == kFormat, "unknown format");
  Parsed out;
  out.raw_domain = get_points(j["domain"]);
  for (const auto& p : out.raw_domain) require(p.x >= 0 && p.y >= 0, "negative domain coordinate");
  out.cert.domain = MonomialSet(out.raw_domain);
  require(j["mults"].is_array(), "mults must be an array");
  for (const auto& m : j["mults"]) out.cert.mults.push_back(get_int(m));
  require(j["cuts"].is_array(), "cuts must be an array");
  for (const auto& f : j["cuts"]) {
    require(f.is_array() && f.size() == 3, "cut must have three coefficients");
    bool ca = true, cb = true, cc = true;
    Rational a = get_rational_raw(f[0], ca), b = get_rational_raw(f[1], cb), c = get_rational_raw(f[2], cc);
    out.canonical_rationals = out.canonical_rationals && ca && cb && cc;
    require(a != 0 || b != 0, "cut with zero direction");
    out.cert.cuts.emplace_back(a, b, c);
  }
  require(j["pieces"].is_array(), "pieces must be an array");
  for (const auto& p : j["pieces"]) {
    require_keys(p, {"points", "mult", "evidence"});
    CertifiedPiece piece;
    PointList raw = get_points(p["points"]);
    for (const auto& q : raw) require(q.x >= 0 && q.y >= 0, "negative piece coordinate");
    piece.points = MonomialSet(raw);
    out.raw_pieces.push_back(std::move(raw));
    piece.mult = get_int(p["mult"]);
    const json& ev = p["evidence"];
    require(ev.is_object() && ev.contains("kind") && ev["kind"].is_string(), "evidence needs a kind");
    const std::string kind = ev["kind"].get<std::string>();
    if (kind == "line_assignment") {
      require_keys(ev, {"kind", "direction", "lines"});
      require(ev["direction"].is_string(), "direction must be a string");
      LineAssignment la;
      la.direction = parse_direction(ev["direction"].get<std::string>());
      require(ev["lines"].is_array(), "lines must be an array");
      for (const auto& l : ev["lines"]) {
        require(l.is_array() && l.size() == 2, "line entry must be [coordinate, label]");
        la.lines.emplace_back(get_int(l[0]), get_int(l[1]));
      }
      piece.evidence = la;
    } else if (kind == "nonzero_determinant") {
      require_keys(ev, {"kind", "rows", "value"});
      piece.evidence = NonzeroDeterminant{get_points(ev["rows"]), get_big(ev["value"])};
    } else if (kind == "full_rank") {
      require_keys(ev, {"kind", "rows", "residue"});
      require(ev["residue"].is_number_integer(), "residue must be an integer");
      FullRank fr{get_points(ev["rows"]), 0};
      if (ev["residue"].is_number_unsigned()) {
        fr.residue = ev["residue"].get<std::uint64_t>();
      } else {
        const auto r = ev["residue"].get<std::int64_t>();
        require(r >= 0, "negative residue");
        fr.residue = static_cast<std::uint64_t>(r);
      }
      piece.evidence = fr;
    } else {
      throw std::invalid_argument("certificate: unknown evidence kind " + kind);
    }
    out.cert.pieces.push_back(std::move(piece));
  }
  return out;
}

}  // namespace

EmptinessCertificate from_json(const json& j) { return parse(j).cert; }

// ---------------------------------------------------------------------------
// Verification. Everything below recomputes from the certificate data only.

namespace {

VerifyResult reject(std::string why, std::optional<std::size_t> piece = std::nullopt) {
  return {false, piece, std::move(why)};
}

Integer ff(std::int64_t a, std::int64_t k) {
  if (k > a) return 0;
  Integer r = 1;
  for (std::int64_t i = 0; i < k; ++i) r *= a - i;
  return r;
}

IntMatrix jet_matrix(const PointList& rows, const PointList& cols) {
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = ff(cols[j].x, rows[i].x) * ff(cols[j].y, rows[i].y);
  return m;
}

PointList staircase_rows(std::int64_t m) {
  PointList rows;
  for (std::int64_t a = 0; a < m; ++a)
    for (std::int64_t b = 0; a + b < m; ++b) rows.push_back({a, b});
  std::sort(rows.begin(), rows.end());
  return rows;
}

Rational value_at(const CutFunctional& f, const LatticePoint& p) {
  return f.a * Rational(static_cast<long>(p.x)) + f.b * Rational(static_cast<long>(p.y)) + f.c;
}

std::optional<std::vector<std::pair<std::int64_t, std::int64_t>>> canonical_lines(const PointList& pts,
                                                                                    std::int64_t m, bool vertical) {
  std::map<std::int64_t, std::int64_t> count;
  for (const auto& p : pts) count[vertical ? p.x : p.y] += 1;
  std::vector<std::pair<std::int64_t, std::int64_t>> order;
  for (auto [coord, c] : count) order.emplace_back(c, coord);
  std::sort(order.begin(), order.end());
  const auto t = static_cast<std::int64_t>(order.size());
  if (t > m) return std::nullopt;
  std::vector<std::pair<std::int64_t, std::int64_t>> lines;
  for (std::int64_t i = 0; i < t; ++i) {
    const std::int64_t label = m - t + i + 1;
    if (order[i].first > label) return std::nullopt;
    lines.emplace_back(order[i].second, label);
  }
  std::sort(lines.begin(), lines.end());
  return lines;
}

VerifyResult check_evidence(const CertifiedPiece& piece, std::size_t idx) {
  const PointList& pts = piece.points.points();
  const std::int64_t m = piece.mult;
  const auto vert = canonical_lines(pts, m, true);
  const auto horiz = vert ? std::nullopt : canonical_lines(pts, m, false);
  const std::int64_t cap = m * (m + 1) / 2;
  if (const auto* la = std::get_if<LineAssignment>(&piece.evidence)) {
    if (!vert && !horiz) return reject("no line assignment exists", idx);
    const bool want_vertical = vert.has_value();
    if ((la->direction == Direction::Vertical) != want_vertical) return reject("non-canonical line direction", idx);
    if (la->lines != (want_vertical ? *vert : *horiz)) return reject("line assignment mismatch", idx);
    // Direct check of the covering and counting condition.
    std::map<std::int64_t, std::int64_t> label_of;
    for (auto [coord, label] : la->lines) {
      if (label < 1 || label > m) return reject("label out of range", idx);
      label_of[coord] = label;
    }
    std::map<std::int64_t, std::int64_t> used;
    for (const auto& p : pts) {
      const std::int64_t coord = want_vertical ? p.x : p.y;
      auto it = label_of.find(coord);
      if (it == label_of.end()) return reject("point not covered by an assigned line", idx);
      if (++used[coord] > it->second) return reject("line carries more points than its label", idx);
    }
    return {true, std::nullopt, ""};
  }
  if (vert || horiz) return reject("a line assignment exists but other evidence was given", idx);
  if (static_cast<std::int64_t>(pts.size()) > cap) return reject("piece larger than the number of conditions", idx);
  const PointList rows = staircase_rows(m);
  if (const auto* nd = std::get_if<NonzeroDeterminant>(&piece.evidence)) {
    if (static_cast<std::int64_t>(pts.size()) != cap) return reject("determinant evidence on a non-square system", idx);
    if (nd->rows != rows) return reject("determinant rows are not the staircase", idx);
    const Integer det = bareiss_determinant(jet_matrix(rows, pts));
    if (det == 0) return reject("determinant vanishes", idx);
    if (det != nd->value) return reject("determinant value mismatch", idx);
    return {true, std::nullopt, ""};
  }
  const auto& fr = std::get<FullRank>(piece.evidence);
  if (static_cast<std::int64_t>(pts.size()) == cap) return reject("full-rank evidence on a square system", idx);
  const PrimeField f(kCertificatePrime);
  const ModMatrix mm = reduce_mod(jet_matrix(rows, pts), f);
  const auto sel = independent_rows_mod(mm, f);
  PointList chosen;
  for (auto i : sel) chosen.push_back(rows[i]);
  if (chosen != fr.rows) return reject("row selection is not the canonical one", idx);
  if (chosen.size() != pts.size()) return reject("selected rows do not reach full rank", idx);
  const std::uint64_t det = determinant_mod(mm.select_rows(sel), f);
  if (det == 0) return reject("selected minor vanishes", idx);
  if (det != fr.residue) return reject("residue mismatch", idx);
  return {true, std::nullopt, ""};
}

VerifyResult verify_parsed(const Parsed& p) {
  const auto& c = p.cert;
  // Canonical listing: strictly increasing domain, no duplicates.
  if (!std::is_sorted(p.raw_domain.begin(), p.raw_domain.end()) || p.raw_domain.size() != c.domain.size())
    return reject("domain is not strictly increasing");
  if (!p.canonical_rationals) return reject("non-canonical rational in cuts");
  if (c.mults.size() != c.cuts.size() + 1) return reject("multiplicity count must be cuts + 1");
  for (auto m : c.mults)
    if (m < 1) return reject("multiplicity below 1");
  if (c.pieces.size() != c.mults.size()) return reject("piece count differs from multiplicity count");
  for (const auto& f : c.cuts) {
    if (f.a.get_den() != 1 || f.b.get_den() != 1) return reject("cut direction is not integral");
    Integer g;
    mpz_gcd(g.get_mpz_t(), f.a.get_num_mpz_t(), f.b.get_num_mpz_t());
    if (g != 1) return reject("cut direction is not primitive");
    for (const auto& q : c.domain)
      if (value_at(f, q) == 0) return reject("cut passes through a domain point");
  }
  std::vector<PointList> parts;
  PointList residue = c.domain.points();
  for (std::size_t j = 0; j < c.cuts.size(); ++j) {
    const auto& f = c.cuts[j];
    PointList pos, rest;
    for (const auto& q : residue) (value_at(f, q) > 0 ? pos : rest).push_back(q);
    // Tightness: c = 1/2 - min over the part; an empty part must use the
    // fixed functional -x - 1/2.
    if (pos.empty()) {
      if (f.a != -1 || f.b != 0 || f.c != Rational(-1, 2)) return reject("cut with an empty part is not -x - 1/2", j);
    } else {
      Rational lo;
      for (std::size_t k = 0; k < pos.size(); ++k) {
        Rational v = f.a * Rational(static_cast<long>(pos[k].x)) + f.b * Rational(static_cast<long>(pos[k].y));
        if (k == 0 || v < lo) lo = v;
      }
      if (f.c != Rational(1, 2) - lo) return reject("cut offset is not tight", j);
    }
    parts.push_back(std::move(pos));
    residue = std::move(rest);
  }
  parts.push_back(std::move(residue));
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const auto& piece = c.pieces[j];
    const auto& raw = p.raw_pieces[j];
    if (raw != parts[j]) return reject("piece points differ from the recomputed partition", j);
    if (piece.mult != c.mults[j]) return reject("piece multiplicity differs from the problem", j);
    auto r = check_evidence(piece, j);
    if (!r.valid) return r;
  }
  return {true, std::nullopt, ""};
}

}  // namespace

VerifyResult verify(const json& j) {
  Parsed p;
  try {
    p = parse(j);
  } catch (const std::exception& e) {
    return reject(e.what());
  }
  return verify_parsed(p);
}

VerifyResult verify(const EmptinessCertificate& c) { return verify(to_json(c)); }

// ---------------------------------------------------------------------------

namespace {

void collect_leaves(const json& j, const json::json_pointer& at, std::vector<json::json_pointer>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) collect_leaves(it.value(), at / it.key(), out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) collect_leaves(j[i], at / i, out);
  } else {
    out.push_back(at);
  }
}

}  // namespace

std::string mutate_leaf(json& j, Rng& rng) {
  std::vector<json::json_pointer> leaves;
  collect_leaves(j, json::json_pointer(), leaves);
  if (leaves.empty()) throw std::invalid_argument("nothing to mutate");
  const auto& at = leaves[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(leaves.size()) - 1))];
  json& leaf = j[at];
  std::int64_t delta = rng.uniform(1, 3) * (rng.uniform(0, 1) ? 1 : -1);
  if (leaf.is_number_unsigned()) {
    const auto v = leaf.get<std::uint64_t>();
    leaf = delta < 0 && v < static_cast<std::uint64_t>(-delta) ? v + static_cast<std::uint64_t>(-delta)
                                                                : v + static_cast<std::uint64_t>(delta);
  } else if (leaf.is_number_integer()) {
    leaf = leaf.get<std::int64_t>() + delta;
  } else if (leaf.is_string()) {
    std::string s = leaf.get<std::string>();
    const bool numeric = !s.empty() && std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(),
                                                   [](char ch) { return ch >= '0' && ch <= '9'; });
    if (numeric && s != "-") {
      leaf = Integer(Integer(s) + static_cast<long>(delta)).get_str();
    } else if (s.empty()) {
      leaf = "x";
    } else {
      const auto pos = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(s.size()) - 1));
      s[pos] = s[pos] == 'z' ? 'a' : static_cast<char>(s[pos] + 1);
      leaf = s;
    }
  } else if (leaf.is_boolean()) {
    leaf = !leaf.get<bool>();
  } else {
    leaf = 0;
  }
  return at.to_string();
}

}  // namespace linserlab::certificate
