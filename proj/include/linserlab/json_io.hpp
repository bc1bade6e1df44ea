#pragma once

// JSON encodings for problem files and reports. Integers are JSON numbers
// when they fit in 64 bits and decimal strings otherwise; rationals are
// [num, den] pairs with den > 0 and gcd 1.

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "linserlab/arrangements.hpp"
#include "linserlab/dumnicki.hpp"
#include "linserlab/fatpoints.hpp"
#include "linserlab/surfaces.hpp"
#include "linserlab/symbolic.hpp"
#include "linserlab/toric.hpp"

namespace linserlab::json_io {

using json = nlohmann::json;

/// Malformed input; the message names the offending path.
struct JsonError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

json integer_to_json(const Integer& z);
Integer integer_from_json(const json& j, const std::string& path = "$");
/// Accepts [num, den] or a bare integer.
json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j, const std::string& path = "$");

json point_to_json(const lattice::LatticePoint& p);
lattice::LatticePoint point_from_json(const json& j, const std::string& path = "$");
json points_to_json(const lattice::PointList& pts);
lattice::PointList points_from_json(const json& j, const std::string& path = "$");
json cut_to_json(const lattice::CutFunctional& f);
lattice::CutFunctional cut_from_json(const json& j, const std::string& path = "$");

// fat points: {degree, points: [[q, q, q]...], mults, field?}
json system_to_json(const fatpoints::FatPointSystem& s);
fatpoints::FatPointSystem system_from_json(const json& j);
json report_to_json(const fatpoints::SystemReport& r);
fatpoints::SystemReport report_from_json(const json& j);

// emptiness problems: {domain: [[x, y]...], mults, cuts?}
struct EmptinessProblem {
  lattice::MonomialSet domain;
  std::vector<std::int64_t> mults;
  std::optional<std::vector<lattice::CutFunctional>> cuts;
  bool operator==(const EmptinessProblem&) const = default;
};
json problem_to_json(const EmptinessProblem& p);
EmptinessProblem problem_from_json(const json& j);

// toric: {cells: [[[x, y]...]...], heights: [[[x, y], num, den]...]}
json subdivision_to_json(const toric::Subdivision& s);
toric::Subdivision subdivision_from_json(const json& j);
json fan_to_json(const toric::NormalFan& f);
json lift_to_json(const toric::PiecewiseLinearLift& F);
/// {points: [[x, y]...], heights?: [q...], recession?: [[x, y]...]}
struct LiftInput {
  lattice::PointList points;
  std::vector<Rational> heights;
  std::vector<lattice::LatticePoint> recession;
};
LiftInput lift_input_from_json(const json& j);

// surfaces
json kollar_to_json(const surfaces::KollarReport& r);
surfaces::KollarReport kollar_from_json(const json& j);
json incidence_to_json(const surfaces::IncidenceConfig& c);
json nodal_to_json(const surfaces::NodalCurve& c);

// symbolic: {vars: [...], gens: [[e...]...]}
json ideal_to_json(const symbolic::MonomialIdeal& I);
symbolic::MonomialIdeal ideal_from_json(const json& j);
json containment_to_json(const symbolic::ContainmentReport& r);
symbolic::ContainmentReport containment_from_json(const json& j);
json chain_to_json(const symbolic::ElsChain& c);

// arrangements: {lines: [[q, q, q]...]}
json arrangement_to_json(const arrangements::LineArrangement& A);
arrangements::LineArrangement arrangement_from_json(const json& j);
json counts_to_json(const arrangements::GradedCounts& g);
arrangements::GradedCounts counts_from_json(const json& j);
json circuit_to_json(const arrangements::Circuit& c);
json da_to_json(const arrangements::DaReport& r);

}  // namespace linserlab::json_io
