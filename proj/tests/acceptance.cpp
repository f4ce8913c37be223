// Acceptance run: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "cevian/cli.hpp"
#include "cevian/error.hpp"
#include "cevian/theorems.hpp"

using namespace cevian;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

std::string fixture(const std::string& name) { return std::string(CEVIAN_SOURCE_DIR) + "/tests/fixtures/" + name; }

std::vector<Requirement> requirements_of(const std::string& check_id) {
  std::vector<Requirement> req = suite_requirements();
  for (const TheoremCheck& c : theorem_registry())
    if (c.id == check_id) req.insert(req.end(), c.hypotheses.begin(), c.hypotheses.end());
  return req;
}

ProjPoint bary(long x, long y, long z) { return ProjPoint(Int(x), Int(y), Int(z)); }

Rat ratio(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// 1. Full fuzz run.
Outcome full_fuzz() {
  const auto start = std::chrono::steady_clock::now();
  const SuiteReport report = run_suite(1, 100, "", 20);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  int pass = 0, skipped = 0, unexplained = 0;
  for (const ConfigRun& run : report.configs)
    for (const CheckResult& r : run.results) {
      pass += r.status == CheckStatus::Pass;
      skipped += r.status == CheckStatus::Skipped;
      unexplained += r.status == CheckStatus::Skipped && r.reason.empty();
    }
  std::ostringstream d;
  d << report.summary.size() << " checks x 100 configs: " << pass << " pass, " << skipped << " skipped, "
    << report.failures() << " failed in " << seconds << " s";
  return {report.failures() == 0 && unexplained == 0 && seconds < 300 && report.configs.size() == 100, d.str()};
}

// 2. Classical specializations on A(0,0) B(4,0) C(0,3).
Outcome classical_345() {
  const TriangleFrame frame({Rat(0), Rat(0)}, {Rat(4), Rat(0)}, {Rat(0), Rat(3)});
  std::vector<std::string> bad;

  const CevianConfig g = CevianConfig::derive(frame, bary(1, 1, 1));
  const Conic steiner = Conic::from_coefficients({Int(0), Int(0), Int(0), Int(1), Int(1), Int(1)});
  if (!(g.Q() == g.G() && g.O() == g.G() && g.H() == g.G())) bad.push_back("Q = O = H = G");
  if (!(g.conic("circumconic_O") == steiner)) bad.push_back("circumconic_O = Steiner circumellipse");

  const CevianConfig ge = CevianConfig::derive(frame, CartesianPoint{ratio(8, 11), ratio(9, 11)});
  if (!(frame.cartesian(ge.Q()) == CartesianPoint{Rat(1), Rat(1)})) bad.push_back("Q = (1,1)");
  // Incircle (x-1)^2 + (y-1)^2 = 1.
  const Conic incircle = frame.to_barycentric(Conic::from_coefficients({Int(1), Int(1), Int(1), Int(-1), Int(-1), Int(0)}));
  if (!(ge.conic("inconic") == incircle)) bad.push_back("inconic = incircle");
  if (!(ge.conic("inconic").center(ge.infinity()) == frame.to_barycentric(CartesianPoint{Rat(1), Rat(1)})))
    bad.push_back("inconic center (1,1)");
  if (!ge.flag(Guard::HIsVertex) || !(ge.H() == ge.A())) bad.push_back("H = A trips H_is_vertex");
  bool guarded = false;
  try {
    tcc_perspector(ge);
  } catch (const GuardViolation& e) {
    guarded = e.guard() == "H_is_vertex";
  }
  if (!guarded) bad.push_back("guard path refuses the TCC-perspector");

  std::string d = "P = G and P = Gergonne";
  for (const auto& b : bad) d += "; failed: " + b;
  return {bad.empty(), d};
}

// Runs body on `count` sampled configurations meeting the requirements.
Outcome over_configs(const std::vector<Requirement>& req, int count, const std::string& label,
                     const std::function<std::string(const CevianConfig&, CheckContext&)>& body) {
  ConfigSampler sampler(1, 20);
  int failed = 0;
  std::string first;
  for (int i = 0; i < count; ++i) {
    const CevianConfig cfg = sampler.sample(static_cast<std::uint64_t>(i), req);
    CheckContext ctx(cfg, derive_seed(1, static_cast<std::uint64_t>(i) + 1, label), 20);
    std::string problem;
    try {
      problem = body(cfg, ctx);
    } catch (const std::exception& e) {
      problem = e.what();
    }
    if (!problem.empty()) {
      ++failed;
      if (first.empty()) first = "config " + std::to_string(i) + " P = " + cfg.P().str() + ": " + problem;
    }
  }
  std::string d = std::to_string(count - failed) + "/" + std::to_string(count) + " configs";
  if (!first.empty()) d += "; first failure " + first;
  return {failed == 0, d};
}

// 3. TCC cross-validation.
Outcome tcc() {
  return over_configs(requirements_of("thm_tcc"), 50, "acceptance_tcc", [](const CevianConfig& cfg, CheckContext&) {
    const ProjPoint y = cfg.isogonal(cfg.Q());
    const ProjPoint formula = tcc_perspector_formula(cfg, y);
    const ProjPoint synthetic = tcc_perspector_synthetic(cfg, y);
    const ProjPoint gh = cfg.isogonal(cfg.H());
    if (formula != synthetic) return "formula " + formula.str() + " != perspector " + synthetic.str();
    if (formula != gh) return "formula " + formula.str() + " != gamma(H) " + gh.str();
    return std::string();
  });
}

// 4. Dual-path gamma_P.
Outcome dual_path() {
  return over_configs(suite_requirements(), 50, "acceptance_dual", [](const CevianConfig& cfg, CheckContext& ctx) {
    for (int k = 0; k < 20; ++k) {
      const ProjPoint x = ctx.random_generic_point();
      const ProjPoint a = gamma_P(cfg, x), b = gamma_P_pole(cfg, x);
      if (a != b) return "X = " + x.str() + ": synthetic " + a.str() + " != pole formula " + b.str();
    }
    return std::string();
  });
}

// 5. Pedal-conic suite.
Outcome pedal() {
  const ProjLine ab(Int(0), Int(0), Int(1)), bc(Int(1), Int(0), Int(0));
  return over_configs(requirements_of("thm_pedal_conic"), 50, "acceptance_pedal",
                      [&](const CevianConfig& cfg, CheckContext& ctx) {
                        for (int k = 0; k < 3; ++k) {
                          const ProjPoint r1 = ctx.random_pedal_point(true);
                          const PedalConic pc = pedal_conic(cfg, r1);
                          for (int i = 0; i < 3; ++i)
                            if (!pc.conic.contains(pc.feet1[i]) || !pc.conic.contains(pc.feet2[i]))
                              return "R1 = " + r1.str() + ": six feet not on one conic";
                          if (pc.conic.center(cfg.infinity()) != midpoint(pc.r1, pc.r2, cfg.infinity()))
                            return "R1 = " + r1.str() + ": center != midpoint(R1, R2)";
                          if (!involutions_equal(induced_involution(pc.conic, cfg.infinity()), cfg.involution("psi")))
                            return "R1 = " + r1.str() + ": involution on l_inf != psi";
                          const PedalFeet& f1 = pc.feet1;
                          const PedalFeet& f2 = pc.feet2;
                          const ExtRat lhs = cross_ratio(f1[2], f2[2], meet(ab, join(pc.r1, f1[0])), meet(ab, join(pc.r2, f2[0])));
                          const ExtRat rhs = cross_ratio(f1[0], f2[0], meet(bc, join(pc.r1, f1[2])), meet(bc, join(pc.r2, f2[2])));
                          if (!(lhs == rhs)) return "R1 = " + r1.str() + ": cross ratios " + lhs.str() + " != " + rhs.str();
                        }
                        return std::string();
                      });
}

// 6. Simson lines in both directions.
Outcome simson() {
  return over_configs(requirements_of("thm_simson"), 50, "acceptance_simson",
                      [](const CevianConfig& cfg, CheckContext& ctx) {
                        const Conic& co = cfg.conic("circumconic_O");
                        for (int k = 0; k < 3; ++k) {
                          const ProjPoint r1 = ctx.random_point_on(co);
                          const PedalFeet f = pedal_triangle(cfg, r1);
                          if (!collinear(f[0], f[1], f[2])) return "R1 = " + r1.str() + " on the conic: feet not collinear";
                          const ProjLine s = simson_line(cfg, r1);
                          if (!on(f[0], s) || !on(f[1], s) || !on(f[2], s)) return std::string("Simson line misses a foot");
                        }
                        for (int k = 0; k < 20; ++k) {
                          ProjPoint r1 = ctx.random_generic_point();
                          while (co.contains(r1)) r1 = ctx.random_generic_point();
                          const PedalFeet f = pedal_triangle(cfg, r1);
                          if (collinear(f[0], f[1], f[2])) return "R1 = " + r1.str() + " off the conic: feet collinear";
                        }
                        return std::string();
                      });
}

// 7. Negative control.
Outcome negative_control() {
  std::ostringstream out, err;
  const int code = check_command(fixture("perturbed_h.json"), "", 1, "", out, err);
  const std::string text = out.str();
  const bool named = text.find("FAIL  prop_gammaH") != std::string::npos;
  const bool witness = text.find("violated: gamma_P(O) == H") != std::string::npos;
  return {code == 1 && named && witness,
          "exit code " + std::to_string(code) + (named ? ", prop_gammaH failed" : ", prop_gammaH did not fail") +
              (witness ? " with witness" : " without witness")};
}

// 8. Determinism of fuzz reports.
Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path() / "cevian_acceptance";
  std::filesystem::create_directories(dir);
  const std::string a = (dir / "fuzz_a.json").string(), b = (dir / "fuzz_b.json").string();
  std::ostringstream sink, err;
  const int ca = fuzz_command(1, 100, "", 20, a, sink, err);
  const int cb = fuzz_command(1, 100, "", 20, b, sink, err);
  auto slurp = [](const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  };
  const std::string ra = slurp(a), rb = slurp(b);
  const bool same = !ra.empty() && ra == rb;
  return {same && ca == cb,
          std::to_string(ra.size()) + " byte report, " + (same ? "byte-identical" : "reports differ")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"full fuzz run, seed 1, count 100, bound 20", full_fuzz},
      {"classical 3-4-5 specializations", classical_345},
      {"TCC-perspector formula vs perspectivity vs gamma(H), 50 configs", tcc},
      {"gamma_P synthetic vs pole formula, 50 configs x 20 points", dual_path},
      {"pedal conics, 50 configs x 3 points", pedal},
      {"Simson lines both directions, 50 configs", simson},
      {"negative control on perturbed H", negative_control},
      {"byte-identical fuzz reports", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    failed += !o.ok;
    std::cout << "criterion " << i + 1 << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << o.detail << ")" << std::endl;
  }
  return failed ? 1 : 0;
}
