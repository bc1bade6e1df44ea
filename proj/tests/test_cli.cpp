#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "linserlab/certificate.hpp"
#include "linserlab/cli.hpp"
#include "linserlab/json_io.hpp"

using namespace linserlab;
using cli::Command;
using nlohmann::json;

namespace {

Command make(std::string sub, std::string action, std::map<std::string, std::string> opts) {
  Command c;
  c.subcommand = std::move(sub);
  c.action = std::move(action);
  c.options = std::move(opts);
  return c;
}

std::string temp_file(const std::string& name, const json& j) {
  const auto p = std::filesystem::temp_directory_path() / ("linserlab_test_" + name);
  std::ofstream(p) << j.dump();
  return p.string();
}

}  // namespace

TEST_CASE("command validation") {
  CHECK(cli::run(make("nope", "", {})).exit_code == cli::kUsage);
  CHECK(cli::run(make("cohomology", "", {{"degree", "4"}, {"mults", "2"}, {"bogus", "1"}})).exit_code == cli::kUsage);
  CHECK(cli::run(make("surface", "kollar", {{"c", "2"}})).exit_code == cli::kUsage);
  CHECK(cli::run(make("surface", "", {{"n", "2"}})).exit_code == cli::kUsage);
  CHECK(cli::run(make("surface", "fly", {{"n", "2"}})).exit_code == cli::kUsage);
  CHECK(cli::run(make("cohomology", "", {{"degree", "x"}, {"mults", "2"}})).exit_code == cli::kUsage);
  CHECK(cli::run(make("cohomology", "", {{"degree", "4"}})).exit_code == cli::kUsage);
  CHECK(cli::run(make("negativity", "", {{"config", "pg2"}, {"q", "4"}})).exit_code == cli::kUsage);
  CHECK(cli::run(make("negativity", "", {{"config", "pg2"}, {"s", "4"}})).exit_code == cli::kUsage);
  CHECK(cli::run(make("empty", "", {{"family", "other"}, {"n", "1"}})).exit_code == cli::kUsage);
  CHECK(cli::run(make("verify", "", {})).exit_code == cli::kUsage);

  auto c = make("symbolic", "suite", {{"ideal", "/nonexistent/ideal.json"}, {"r", "2"}});
  const auto out = cli::run(c);
  CHECK(out.exit_code == cli::kUsage);
  CHECK(out.report.contains("error"));
  CHECK(out.report["version"] == cli::kVersion);
}

TEST_CASE("cohomology reports") {
  auto c = make("cohomology", "", {{"degree", "4"}, {"mults", "2^5"}});
  c.seed = 7;
  const auto out = cli::run(c);
  CHECK(out.exit_code == cli::kSuccess);
  CHECK(out.report["seed"] == 7);
  CHECK(out.report["result"]["report"]["h0"] == 1);
  CHECK(out.report["result"]["report"]["h1"] == 1);
  CHECK(out.report["result"]["mults"] == json::array({2, 2, 2, 2, 2}));
  CHECK(cli::run(c).report == out.report);

  fatpoints::FatPointSystem sys;
  sys.degree = 2;
  sys.points = fatpoints::make_config(fatpoints::ConfigKind::Collinear, 5, 1);
  sys.mults = std::vector<std::int64_t>(5, 1);
  const auto path = temp_file("system.json", json_io::system_to_json(sys));
  const auto viaf = cli::run(make("cohomology", "", {{"system", path}}));
  CHECK(viaf.report["result"]["report"]["h0"] == 3);  // the line times any line
  CHECK(cli::run(make("cohomology", "", {{"system", path}, {"degree", "2"}})).exit_code == cli::kUsage);
}

TEST_CASE("emptiness and verification") {
  auto out = cli::run(make("empty", "", {{"family", "nine-cut"}, {"n", "2"}}));
  REQUIRE(out.exit_code == cli::kSuccess);
  REQUIRE(out.artifact);
  CHECK(certificate::verify(*out.artifact).valid);
  CHECK(out.report["result"]["certificate"] == *out.artifact);

  Command v;
  v.subcommand = "verify";
  v.input = temp_file("cert.json", *out.artifact);
  CHECK(cli::run(v).exit_code == cli::kSuccess);

  json bad = *out.artifact;
  bad["pieces"][3]["mult"] = bad["pieces"][3]["mult"].get<int>() + 1;
  v.input = temp_file("bad.json", bad);
  const auto rej = cli::run(v);
  CHECK(rej.exit_code == cli::kCounterWitness);
  CHECK(rej.report["result"]["failing_piece"] == 3);

  v.input = temp_file("junk.json", json{{"format", "nothing"}});
  CHECK(cli::run(v).exit_code == cli::kCounterWitness);

  // L(triangle(2), 2) is the conic through a double point: nonempty.
  json_io::EmptinessProblem p{lattice::MonomialSet(lattice::PointList{{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 2}}),
                              {2}, std::vector<lattice::CutFunctional>{}};
  const auto nonempty = cli::run(make("empty", "", {{"problem", temp_file("problem.json", json_io::problem_to_json(p))}}));
  CHECK(nonempty.exit_code == cli::kCounterWitness);
  CHECK(nonempty.report["result"]["status"] == "nonempty");
  CHECK(!nonempty.artifact);
}

TEST_CASE("other subcommands") {
  CHECK(cli::run(make("alpha", "", {{"config", "star"}, {"param", "4"}, {"m", "2"}})).report["result"]["alpha"] == 4);
  const auto w = cli::run(make("waldschmidt", "", {{"config", "star"}, {"param", "4"}}));
  CHECK(w.report["result"]["chudnovsky"]["equality"] == true);
  CHECK(cli::run(make("toric", "fan", {{"example", "twisted-cubic"}})).report["result"]["cones"].size() == 4);
  CHECK(cli::run(make("toric", "split", {{"family", "nine-cut"}, {"n", "1"}})).report["result"]["matches_partition"] == true);

  const auto sub = cli::run(make("toric", "subdivide",
                                 {{"input", temp_file("lift.json", json{{"points", {{0, 0}, {1, 0}, {0, 1}, {1, 1}}},
                                                                       {"heights", {0, 0, 0, 1}}})}}));
  CHECK(sub.exit_code == cli::kSuccess);
  CHECK(sub.report["result"]["subdivision"]["cells"].size() == 2);

  CHECK(cli::run(make("surface", "counterexample", {{"c", "3"}})).report["result"]["n"] == 6);
  CHECK(cli::run(make("surface", "kollar", {{"n", "5"}})).report["result"]["h0_Cn"] == 25);
  const auto pg = cli::run(make("negativity", "", {{"config", "pg2"}, {"q", "3"}}));
  CHECK(pg.report["result"]["c_squared"] == -39);

  const auto chain = cli::run(make("symbolic", "chain", {{"example", "triangle"}, {"r", "2"}}));
  CHECK(chain.exit_code == cli::kSuccess);
  const auto mult = cli::run(make("symbolic", "multiplier", {{"example", "triangle"}, {"t", "2"}}));
  CHECK(json_io::ideal_from_json(mult.report["result"]["multiplier"]) == json_io::ideal_from_json(mult.report["result"]["ideal"]));
  CHECK(cli::run(make("symbolic", "multiplier", {{"example", "triangle"}, {"t", "0"}})).exit_code == cli::kUsage);

  const auto m8 = cli::run(make("ot", "counts", {{"example", "m8"}}));
  CHECK(m8.report["result"]["counts"]["min_gens"] == json::array({0, 7, 1}));
  CHECK(m8.report["result"]["counts"]["linear_syzygies"] == 1);
  const auto path = temp_file("arr.json", json_io::arrangement_to_json(arrangements::five_line_example()));
  CHECK(cli::run(make("ot", "circuits", {{"arrangement", path}})).report["result"]["circuits"].size() == 5);
  CHECK(cli::run(make("ot", "counts", {{"arrangement", path}, {"example", "m8"}})).exit_code == cli::kUsage);
}

TEST_CASE("seeded determinism") {
  for (const auto& c : {make("negativity", "", {{"config", "general"}, {"s", "6"}}), make("ot", "counts", {{"example", "generic"}, {"s", "6"}}),
                        make("waldschmidt", "", {{"config", "random"}, {"param", "5"}})}) {
    auto a = c, b = c;
    a.seed = b.seed = 99;
    CHECK(cli::run(a).report == cli::run(b).report);
  }
}
