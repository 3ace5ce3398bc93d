// Acceptance suite: one PASS/FAIL line per criterion.
//
// usage: acceptance <source-dir> <cli-binary> <work-dir>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "hyperfront/diagnostics.hpp"
#include "hyperfront/front.hpp"
#include "hyperfront/holo/expr.hpp"
#include "hyperfront/nullcurve.hpp"
#include "hyperfront/scene/config.hpp"
#include "hyperfront/scene/export.hpp"
#include "hyperfront/scene/pipeline.hpp"
#include "oracles.hpp"

using namespace hyperfront;
using namespace hyperfront::scene;
namespace fs = std::filesystem;
using oracle::C;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

fs::path g_source, g_cli, g_work;

const PipelineResult& shipped() {
  static const PipelineResult r = evaluate(load_config(g_source / "configs/shipped.json"), {4});
  return r;
}

const SceneData& shipped_data() {
  static const SceneData d = build_data(load_config(g_source / "configs/shipped.json"));
  return d;
}

Outcome legendrian_certificate() {
  const auto& r = shipped();
  const auto& d = shipped_data().legendrian;
  double worst = 0.0;
  for (const auto& s : r.samples) {
    const SL2 mc = legendrian::maurer_cartan(legendrian::to_sl2_jet(d.at(s.z)));
    worst = std::max({worst, std::abs(mc.a11), std::abs(mc.a22)});
  }
  return {r.samples.size() >= 4096 && worst <= 1e-8,
          std::to_string(r.samples.size()) + " samples, max |diag| = " + fmt("%.3g", worst)};
}

Outcome gauss_closed_form() {
  double worst = 0.0;
  for (const auto& s : shipped().samples) {
    const C x = s.jets.x.value, y = s.jets.y.value;
    const auto g = front::gauss_maps(legendrian::to_sl2(s.jets));
    if (g.plus.infinite || g.minus.infinite) return {false, "infinite Gauss map value"};
    worst = std::max({worst, std::abs(g.plus.value - 1.0 / x), std::abs(g.minus.value - y / (1.0 + x * y))});
  }
  return {worst <= 1e-12, "max deviation " + fmt("%.3g", worst)};
}

Outcome bounded_gauss_image() {
  const auto& r = shipped();
  double radius = 0.0;
  bool xy = true;
  for (const auto& s : r.samples) {
    const double ax = std::abs(s.jets.x.value), ay = std::abs(s.jets.y.value);
    xy = xy && ax > 1.0 && ax < 2.0 && ay < 1.0 / 3.0;
    radius = std::max({radius, s.gauss.plus.abs(), s.gauss.minus.abs()});
  }
  const auto r03 = evaluate(load_config(g_source / "configs/shipped_r03.json"), {4});
  double radius03 = 0.0;
  for (const auto& s : r03.samples) radius03 = std::max({radius03, s.gauss.plus.abs(), s.gauss.minus.abs()});
  const double dev = std::abs(radius03 - 0.09 * radius);
  return {xy && radius < 1.0 && dev <= 1e-12,
          std::string(xy ? "XY bounds hold" : "XY bounds FAIL") + ", radius " + fmt("%.17g", radius) +
              ", r=0.3 deviation " + fmt("%.3g", dev)};
}

Outcome metric_inequality() {
  const auto& r = shipped();
  const auto& d = shipped_data().legendrian;
  oracle::Rng rng(2024);
  std::vector<C> dirs(100);
  for (auto& v : dirs) v = rng.unit();
  double worst = -HUGE_VAL;
  for (const auto& s : r.samples) {
    for (const C v : dirs) worst = std::max(worst, s.metric_f(v) - 2.0 * s.metric_L(v));
  }
  const diagnostics::MetricSampler lift = [&d](Complex z) {
    return front::metric_forms(legendrian::canonical_forms(d, z)).lift;
  };
  const diagnostics::MetricSampler frontm = [&d](Complex z) {
    return front::metric_forms(legendrian::canonical_forms(d, z)).front;
  };
  double worst_len = -HUGE_VAL;
  for (int p = 0; p < 16; ++p) {
    std::vector<C> v;
    for (int k = 0; k < 2 + p % 3; ++k) v.push_back(rng.in_disk(0.89));
    const holo::PathPolyline path(v);
    worst_len = std::max(worst_len, diagnostics::length_along(frontm, path) -
                                        std::sqrt(2.0) * diagnostics::length_along(lift, path));
  }
  return {worst <= 1e-12 && worst_len <= 1e-8,
          "max(f - 2L) = " + fmt("%.3g", worst) + ", max(len_f - sqrt2 len_L) = " + fmt("%.3g", worst_len)};
}

Outcome key_chain() {
  const auto& d = shipped_data().legendrian;
  std::size_t violations = 0, certified = 0;
  for (const auto& path : test_paths(0.9, 16, 99)) {
    const auto m = diagnostics::estimate_m(d, path, 64);
    const auto k = diagnostics::certify_key_chain(d, path, m, 64);
    violations += k.total_violations();
    certified += k.status == diagnostics::KeyChainReport::Status::Certified ? 1 : 0;
    // Independent recheck of the final inequality.
    for (const C z : diagnostics::sample_path(path, 64)) {
      const auto j = d.at(z);
      const auto f = legendrian::canonical_forms(j);
      const double lhs = std::norm(f.omega) + std::norm(f.theta);
      const double rhs = 3.0 / (4.0 * std::pow(m.m, 4)) * (std::norm(j.x.deriv) + std::norm(j.y.deriv));
      if (lhs < rhs) ++violations;
    }
  }
  std::size_t quartic_bad = 0, quartic_checked = 0;
  for (const auto& s : shipped().samples) {
    const double y = std::abs(s.jets.y.value);
    if (y >= 1.0 / 3.0) continue;
    ++quartic_checked;
    if (1.0 - 3.0 * std::pow(y, 4) < 26.0 / 27.0) ++quartic_bad;
  }
  return {violations == 0 && certified == 16 && quartic_bad == 0 && quartic_checked > 0,
          std::to_string(certified) + "/16 paths certified, " + std::to_string(violations) +
              " violations, quartic step " + std::to_string(quartic_bad) + " of " +
              std::to_string(quartic_checked)};
}

Outcome null_curve_identities() {
  const std::vector<std::pair<const char*, const char*>> inputs{
      {"0", "1"}, {"z", "1"}, {"z^2 + i/2", "exp(z)"}, {"exp(z)/3", "1 + z^3"}, {"(1 + z)/(3 - z)", "2*i"}};
  oracle::Rng rng(6);
  double worst_null = 0.0, worst_sigma = 0.0;
  for (const auto& [g, eta] : inputs) {
    const auto ge = holo::parse_expr(g), ee = holo::parse_expr(eta);
    const auto c = nullcurve::from_weierstrass({ge, ee});
    for (int k = 0; k < 200; ++k) {
      const C z = rng.in_disk(0.9);
      worst_null = std::max(worst_null, nullcurve::null_residual(c, z));
      const double g2 = std::norm(ge(z)), want = (1.0 + g2 * g2) * std::norm(ee(z));
      const double got = 2.0 * (std::norm(c.x().derivative(z)) + std::norm(c.y().derivative(z)));
      worst_sigma = std::max(worst_sigma, std::abs(got - want) / want);
    }
  }
  return {worst_null <= 1e-12 && worst_sigma <= 1e-12,
          "5 inputs, max null residual " + fmt("%.3g", worst_null) + ", max relative sigma error " +
              fmt("%.3g", worst_sigma)};
}

Outcome horosphere() {
  const auto r = evaluate(load_config(g_source / "configs/horosphere.json"), {4});
  const auto obj = mesh_obj(r.grid, r.samples, MeshModel::HalfSpace);
  std::istringstream in(obj);
  double worst = 0.0;
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("v ", 0) != 0) continue;
    std::istringstream v(line.substr(2));
    double x, y, h;
    v >> x >> y >> h;
    worst = std::max(worst, std::abs(x * x + y * y + (h - 0.5) * (h - 0.5) - 0.25));
    ++n;
  }
  return {n == r.grid.size() && worst <= 1e-9,
          std::to_string(n) + " vertices, max deviation " + fmt("%.3g", worst)};
}

Outcome singular_set() {
  const auto& r = shipped();
  const auto& d = shipped_data().legendrian;
  const double dist = front::distance_to(r.singular, 0.0);
  double worst = 0.0;
  for (const auto& line : r.singular.polylines) {
    for (const C v : line) {
      const auto rho = legendrian::canonical_forms(d, v).rho;
      if (rho.infinite) return {false, "infinite rho at a contour vertex"};
      worst = std::max(worst, std::abs(std::norm(rho.value) - 1.0));
    }
  }
  return {!r.singular.empty() && dist <= 1e-6 && worst <= 1e-9,
          std::to_string(r.singular.vertex_count) + " vertices, distance to 0 = " + fmt("%.3g", dist) +
              ", max ||rho|^2 - 1| = " + fmt("%.3g", worst)};
}

Outcome affine_front() {
  const auto& r = shipped();
  const auto& d = shipped_data().legendrian;
  double route = 0.0, y_bound = 0.0;
  for (const auto& s : r.samples) y_bound = std::max(y_bound, std::abs(s.jets.y.value));
  bool sandwich = true;
  for (const auto& s : r.samples) {
    const auto a = affine::improper_affine_front(s.jets);
    route = std::max(route, std::abs(a.s - affine::height_by_integral(d, s.z)));
    const double dx2 = std::norm(s.jets.x.deriv), dy2 = std::norm(s.jets.y.deriv);
    const double tau = dx2 + dy2;
    const double coeff = (std::norm(s.jets.y.value) + 1.0) * dx2 + dy2;
    sandwich = sandwich && tau <= coeff * (1 + 1e-15) && coeff <= (y_bound * y_bound + 1.0) * tau * (1 + 1e-15);
  }
  return {route <= 1e-10 && sandwich,
          "route difference " + fmt("%.3g", route) + (sandwich ? ", sandwich holds" : ", sandwich FAILS") +
              " with B = " + fmt("%.6g", y_bound)};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  if (g_cli.empty()) return {false, "command-line tool was not built"};
  const auto cfg = g_source / "configs/shipped.json";
  std::vector<std::vector<std::string>> runs;
  for (const char* threads : {"1", "8", "1"}) {
    const auto out = g_work / (std::string("threads") + threads + "_" + std::to_string(runs.size()));
    fs::remove_all(out);
    const std::string cmd = "\"" + g_cli.string() + "\" run \"" + cfg.string() + "\" --threads " + threads +
                            " --out \"" + out.string() + "\" --quiet";
    if (std::system(cmd.c_str()) != 0) return {false, "run failed: " + cmd};
    std::vector<std::string> files;
    for (const char* ext : {".obj", ".csv", ".report.json"}) files.push_back(slurp(out / ("shipped" + std::string(ext))));
    runs.push_back(std::move(files));
  }
  bool same = true;
  std::size_t bytes = 0;
  for (std::size_t k = 0; k < runs[0].size(); ++k) {
    same = same && !runs[0][k].empty() && runs[0][k] == runs[1][k] && runs[0][k] == runs[2][k];
    bytes += runs[0][k].size();
  }
  return {same, std::to_string(bytes) + " bytes across 3 artifacts, threads 1/8/1 " +
                    (same ? "identical" : "DIFFER")};
}

Outcome completeness_wording() {
  const auto& v = shipped().report.completeness_verdict;
  return {v == "plateau / no completeness evidence", "verdict \"" + v + "\""};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 4) {
    std::fprintf(stderr, "usage: acceptance <source-dir> <cli-binary> <work-dir>\n");
    return 2;
  }
  g_source = argv[1];
  g_cli = argv[2];
  g_work = argv[3];
  fs::create_directories(g_work);

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1 Legendrian certificate", legendrian_certificate},
      {"2 Gauss-map closed form", gauss_closed_form},
      {"3 bounded Gauss image and r^2 scaling", bounded_gauss_image},
      {"4 front metric at most twice the lift metric", metric_inequality},
      {"5 key inequality chain", key_chain},
      {"6 null-curve identities", null_curve_identities},
      {"7 horosphere oracle", horosphere},
      {"8 singular set", singular_set},
      {"9 improper affine front", affine_front},
      {"10 determinism", determinism},
      {"   completeness report wording", completeness_wording},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s  %-46s %s\n", o.ok ? "PASS" : "FAIL", name, o.detail.c_str());
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d of %zu checks failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
