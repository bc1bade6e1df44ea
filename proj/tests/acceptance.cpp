// One PASS/FAIL line per acceptance criterion, with wall time.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <variant>

#include "linserlab/arrangements.hpp"
#include "linserlab/certificate.hpp"
#include "linserlab/dumnicki.hpp"
#include "linserlab/fatpoints.hpp"
#include "linserlab/surfaces.hpp"
#include "linserlab/symbolic.hpp"
#include "linserlab/toric.hpp"

using namespace linserlab;

namespace {

struct Check {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

const std::uint64_t kSeeds[] = {1, 2, kDefaultSeed};

Check generic_tables() {
  Check c;
  struct Row {
    std::int64_t d;
    std::vector<std::int64_t> mults;
    std::int64_t h0, h1;
  };
  const Row rows[] = {{4, {2, 2, 2, 2, 2}, 1, 1}, {4, {1, 2, 2, 2, 2}, 2, 0}, {6, {3, 3, 3, 3, 3}, 1, 3}, {6, {2, 3, 3, 3, 3}, 2, 1}};
  for (const auto& r : rows)
    for (auto seed : kSeeds) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto rep = fatpoints::generic_cohomology(r.d, r.mults, seed, 3);
      const double dt = seconds_since(t0);
      c.require(rep.h0 == r.h0 && rep.h1 == r.h1, "degree " + std::to_string(r.d) + ": got (" + std::to_string(rep.h0) + "," +
                                                      std::to_string(rep.h1) + ")");
      c.require(dt < 1.0, "degree " + std::to_string(r.d) + " took " + std::to_string(dt) + " s");
    }
  return c;
}

Check nine_cut_prover() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  for (std::int64_t n = 1; n <= 10; ++n) {
    const auto fam = dumnicki::nine_cut_family(n);
    const auto res = dumnicki::prove_empty(fam.D, fam.mults, fam.cuts);
    const std::string tag = "n=" + std::to_string(n);
    c.require(res.status == dumnicki::ProofStatus::Certified && res.certificate.has_value(), tag + " not certified");
    if (!res.certificate) continue;
    c.require(res.certificate->pieces.size() == 10, tag + " piece count");
    for (const auto& p : res.certificate->pieces)
      c.require(!std::holds_alternative<dumnicki::FullRank>(p.evidence), tag + " piece needs rank evidence");
    const auto v = certificate::verify(certificate::to_json(*res.certificate));
    c.require(v.valid, tag + " certificate rejected: " + v.reason);
  }
  for (std::int64_t n = 1; n <= 3; ++n) {
    std::vector<std::int64_t> mults(10, 4 * n);
    mults[0] = 5 * n;
    c.require(fatpoints::generic_cohomology(13 * n, mults, kDefaultSeed, 1).h0 == 0,
              "interpolation cross-check nonzero at n=" + std::to_string(n));
  }
  c.require(seconds_since(t0) < 120, "over 2 min");
  return c;
}

Check waldschmidt() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  using fatpoints::ConfigKind;
  const auto star = fatpoints::make_config(ConfigKind::Star, 4, kDefaultSeed);
  c.require(fatpoints::alpha(star, 1) == 3 && fatpoints::alpha(star, 2) == 4, "star alpha");
  const auto sr = fatpoints::chudnovsky_report(star);
  c.require(sr.bound == 2 && sr.bound == make_rational(sr.alpha1 + 1, 2) && sr.equality_witness, "star Chudnovsky equality");
  for (std::int64_t r = 2; r <= 6; ++r) {
    const auto col = fatpoints::make_config(ConfigKind::Collinear, r, kDefaultSeed);
    for (std::int64_t m = 1; m <= 3; ++m) c.require(fatpoints::alpha(col, m) == m, "collinear alpha");
    const auto cr = fatpoints::chudnovsky_report(col);
    c.require(cr.bound == 1 && cr.equality_witness, "collinear equality");
  }
  const auto gen = fatpoints::make_config(ConfigKind::Random, 5, kDefaultSeed);
  const auto gr = fatpoints::chudnovsky_report(gen);
  c.require(!gr.equality_witness && fatpoints::waldschmidt_sandwich(gen, 3).first > gr.bound, "generic 5 points not strict");
  c.require(seconds_since(t0) < 5, "over 5 s");
  return c;
}

Check anticanonical_pencil() {
  Check c;
  const auto pts = fatpoints::make_config(fatpoints::ConfigKind::PencilProducts, 3, kDefaultSeed);
  const auto rows = fatpoints::speciality_stability(3, std::vector<std::int64_t>(9, 1), pts, 5);
  c.require(rows.size() == 5, "row count");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::int64_t n = static_cast<std::int64_t>(i) + 1;
    c.require(rows[i].n == n && rows[i].h0 == n + 1 && rows[i].h1 == n, "row n=" + std::to_string(n));
  }
  return c;
}

Check kollar() {
  Check c;
  for (std::int64_t n = 2; n <= 20; ++n) {
    const auto r = surfaces::kollar_report(n);
    const Integer m = n - 1;
    c.require(r.AnSq == 2, "An^2");
    c.require(r.An_dot_F1F2 == n * n - 2 * n + 3, "An.(F1+F2)");
    c.require(r.nAn_minus_R_sq == -2 * m * m * m, "(nAn-R)^2");
    c.require(r.h0_Cn == n * n, "h0(Cn)");
    c.require(surfaces::ee_nef_test(r.An.coeffs[0], r.An.coeffs[1], r.An.coeffs[2]) && r.nef, "nef");
  }
  for (std::int64_t k = 0; k <= 10; ++k) {
    const Integer n = surfaces::counterexample_n(k);
    const auto cube = [](const Integer& x) -> Integer { return x * x * x; };
    c.require(cube(n - 1) > k * n * n && !(cube(n - 2) > k * (n - 1) * (n - 1)), "counterexample_n(" + std::to_string(k) + ")");
  }
  return c;
}

Check incidence() {
  Check c;
  for (std::int64_t q : {2, 3, 5}) {
    const auto cfg = surfaces::projective_plane(q);
    c.require(surfaces::c_squared(cfg) == -q * (q * q + q + 1), "PG(2," + std::to_string(q) + ") C^2");
    c.require(surfaces::ratio_report(cfg) == -q, "PG(2," + std::to_string(q) + ") ratio");
  }
  for (std::int64_t s = 3; s <= 8; ++s) {
    const auto cfg = surfaces::general_lines(s, kDefaultSeed);
    // (sum L_i')^2 expanded over ordered pairs, L_i' . L_j' = 1 - #(points on both).
    Integer brute = 0;
    for (std::size_t i = 0; i < cfg.lines.size(); ++i)
      for (std::size_t j = 0; j < cfg.lines.size(); ++j) {
        brute += 1;
        for (const auto& row : cfg.incidence) brute -= row[i] * row[j];
      }
    c.require(surfaces::c_squared(cfg) == -s * (s - 2), "general lines s=" + std::to_string(s));
    c.require(brute == -s * (s - 2), "pairwise expansion s=" + std::to_string(s));
  }
  for (std::int64_t n = 2; n <= 20; ++n)
    c.require(surfaces::ratio_report(surfaces::collinear(n)) == make_rational(1 - n, n), "collinear n=" + std::to_string(n));
  return c;
}

Check symbolic_powers() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  using symbolic::MonomialIdeal;
  const MonomialIdeal I(3, {{{1, 1, 0}}, {{1, 0, 1}}, {{0, 1, 1}}});
  const symbolic::Monomial xyz{{1, 1, 1}};
  c.require(symbolic::contains(symbolic::symbolic_power(I, 2), xyz) && !symbolic::contains(symbolic::power(I, 2), xyz),
            "xyz in I^(2) minus I^2");
  for (std::int64_t r = 1; r <= 4; ++r) {
    const auto rep = symbolic::containment_suite(I, r);
    c.require(rep.els && rep.harbourne, "containment r=" + std::to_string(r));
  }
  try {
    const auto J = symbolic::asymptotic_multiplier(I, 2);
    for (std::int64_t r = 1; r <= 3; ++r) c.require(symbolic::power(J, r) == symbolic::power(I, r), "J^r = I^r");
  } catch (const symbolic::NonStabilization&) {
    c.require(false, "no stabilization at t=2");
  }
  for (std::int64_t r = 1; r <= 3; ++r) {
    const auto ch = symbolic::els_chain_check(I, r);
    c.require(ch.left && ch.middle && ch.right, "chain r=" + std::to_string(r));
  }
  c.require(seconds_since(t0) < 30, "over 30 s");
  return c;
}

Check toric_lifts() {
  Check c;
  const auto fan = toric::normal_fan(toric::twisted_cubic_polyhedron());
  const std::vector<lattice::LatticePoint> rays{{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}};
  std::vector<toric::Cone2> want;
  for (std::size_t i = 0; i + 1 < rays.size(); ++i) want.push_back({{rays[i], rays[i + 1]}});
  auto sorted = [](std::vector<toric::Cone2> v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.generators < b.generators; });
    return v;
  };
  c.require(sorted(fan.cones) == sorted(want), "twisted cubic fan cones");
  c.require(std::is_permutation(fan.rays.begin(), fan.rays.end(), rays.begin(), rays.end()), "twisted cubic fan rays");

  const auto fam = dumnicki::nine_cut_family(1);
  const auto F = toric::iterated_split_lift(fam.D, fam.cuts);
  const auto parts = toric::lift_parts(F);
  const auto expect = dumnicki::reduce_partition(fam.D, fam.cuts);
  c.require(parts == expect, "lift parts differ from the cut partition");
  const auto sub = toric::lower_hull_subdivision(fam.D.points(), F.values);
  const auto prim = toric::primary_cells(sub, parts);
  for (std::size_t i = 0; i < prim.size() && i < expect.size(); ++i) {
    c.require(prim[i].has_value(), "piece " + std::to_string(i) + " has no primary cell");
    if (prim[i]) c.require(toric::cell_content(sub, *prim[i]) == expect[i], "cell content of piece " + std::to_string(i));
  }
  c.require(toric::check_strict_convexity(sub, toric::induced_lift(sub)), "induced lift not strictly convex");
  return c;
}

Check orlik_terao() {
  Check c;
  std::optional<arrangements::GradedCounts> first;
  for (auto seed : kSeeds) {
    const auto A = arrangements::generic_lines(5, seed);
    c.require(arrangements::circuits(A, 5).size() == 5, "five generic lines: circuits");
    const auto g = arrangements::graded_counts(A, 3);
    c.require(g.min_gens.at(3) == 4 && g.min_gens.at(2) == 0, "five generic lines: cubics");
    if (first) c.require(g.ideal_dim == first->ideal_dim && g.min_gens == first->min_gens, "seed dependence");
    first = g;
    const auto da = arrangements::da_divisor(A);
    for (const auto& x : da.line_pairings) c.require(x == 0, "D_A meets a line");
  }
  const auto m8 = arrangements::graded_counts(arrangements::m8_minus(), 3);
  c.require(m8.min_gens.at(2) == 7, "M8 quadrics");
  c.require(m8.linear_syzygies == 1, "M8 linear syzygy");
  c.require(m8.min_gens.at(3) == 1, "M8 cubic");
  return c;
}

Check collinear_constraint() {
  Check c;
  const auto e = fatpoints::collinear_constraint_experiment(4, std::vector<std::int64_t>(16, 1), {4, 4, 4, 4}, kDefaultSeed);
  c.require(e.constrained_h0 == 1 && e.general_h0 == 0,
            "constrained " + std::to_string(e.constrained_h0) + " vs general " + std::to_string(e.general_h0));
  return c;
}

Check soundness() {
  Check c;
  std::vector<nlohmann::json> certs;
  for (std::int64_t n = 1; n <= 3; ++n) {
    const auto fam = dumnicki::nine_cut_family(n);
    const auto res = dumnicki::prove_empty(fam.D, fam.mults, fam.cuts);
    if (res.certificate) certs.push_back(certificate::to_json(*res.certificate));
  }
  c.require(certs.size() == 3, "missing certificates");
  for (const auto& j : certs) c.require(certificate::verify(j).valid, "unmutated certificate rejected");
  Rng rng(kDefaultSeed);
  for (int t = 0; t < 100 && !certs.empty(); ++t) {
    auto j = certs[static_cast<std::size_t>(t) % certs.size()];
    const auto where = certificate::mutate_leaf(j, rng);
    c.require(!certificate::verify(j).valid, "mutation at " + where + " accepted");
  }
  return c;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Check()>> criteria[] = {
      {"generic cohomology tables", generic_tables},
      {"nine-cut emptiness certificates", nine_cut_prover},
      {"Waldschmidt and Chudnovsky", waldschmidt},
      {"anticanonical pencil stability", anticanonical_pencil},
      {"Kollar numbers", kollar},
      {"incidence negativity", incidence},
      {"symbolic power containments", symbolic_powers},
      {"toric fans and split lifts", toric_lifts},
      {"Orlik-Terao counts", orlik_terao},
      {"collinear-constraint quartic", collinear_constraint},
      {"certificate soundness", soundness},
  };
  int failed = 0, k = 0;
  for (const auto& [name, run] : criteria) {
    ++k;
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.note = std::string("exception: ") + e.what();
    }
    std::printf("%s  %2d  %-34s %8.2fs%s%s\n", c.ok ? "PASS" : "FAIL", k, name, seconds_since(t0), c.ok ? "" : "  ", c.note.c_str());
    failed += !c.ok;
  }
  std::printf("%d/%d criteria passed\n", k - failed, k);
  return failed ? 1 : 0;
}
