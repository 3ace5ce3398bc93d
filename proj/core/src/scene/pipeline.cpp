#include "hyperfront/scene/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hyperfront/diagnostics.hpp"
#include "hyperfront/error.hpp"
#include "hyperfront/holo/expr.hpp"
#include "hyperfront/parallel.hpp"
#include "hyperfront/scene/export.hpp"

namespace hyperfront::scene {

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double uniform01(std::uint64_t& state) noexcept {
  return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

Complex PolarGrid::point(std::size_t index) const noexcept {
  if (index == 0) return Complex{};
  const std::size_t k = index - 1;
  const int ring = static_cast<int>(k / sectors);
  const int sector = static_cast<int>(k % sectors);
  const double rad = radius * static_cast<double>(ring + 1) / static_cast<double>(rings);
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(sector) / sectors;
  return std::polar(rad, angle);
}

SceneData build_data(const SceneConfig& c) {
  const double tol = c.quadrature_tol;
  switch (c.kind) {
    case InputKind::Weierstrass: {
      auto curve = nullcurve::from_weierstrass(
          {holo::parse_expr(c.g), holo::parse_expr(c.eta)}, tol);
      auto leg = legendrian::lift(curve.x(), curve.y(), tol);
      return {std::move(curve), std::move(leg)};
    }
    case InputKind::Pair:
      return {std::nullopt, legendrian::lift(holo::parse_expr(c.x), holo::parse_expr(c.y), tol)};
    case InputKind::Triple: {
      auto curve = nullcurve::direct(holo::parse_expr(c.x), holo::parse_expr(c.y),
                                     holo::parse_expr(c.z));
      legendrian::LegendrianData leg(curve.x(), curve.y(), curve.z(), tol,
                                     legendrian::WSource::Direct);
      return {std::move(curve), std::move(leg)};
    }
  }
  throw ConfigError("unknown input kind");
}

std::vector<holo::PathPolyline> test_paths(double radius, int count, std::uint64_t seed) {
  std::vector<holo::PathPolyline> out;
  std::uint64_t state = seed;
  const double reach = 0.999 * radius;
  for (int p = 0; p < count; ++p) {
    const int n = 2 + p % 4;
    std::vector<Complex> v;
    while (static_cast<int>(v.size()) < n) {
      const Complex z{reach * (2.0 * uniform01(state) - 1.0), reach * (2.0 * uniform01(state) - 1.0)};
      if (std::abs(z) >= reach) continue;
      if (!v.empty() && std::abs(z - v.back()) < 1e-3) continue;
      v.push_back(z);
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

namespace {

constexpr std::uint64_t kPathSeed = 0x68797065726672ULL;
constexpr std::uint64_t kDirectionSeed = 0x646972656374ULL;
constexpr double kFdTol = 1e-6;
// Finite differences cost four extra evaluations; checked on every kFdStride-th sample.
constexpr std::size_t kFdStride = 8;
constexpr double kRel = 1e-12;

// Everything computed at one polar sample; filled in parallel, read in order.
struct SampleEval {
  front::FrontSample front;
  SL2Jet jet;  // unscaled Λ and Λ′
  SL2 mc;      // Λ⁻¹Λ′
  SL2 mc_scaled;
  SL2 fd_deriv;
  bool has_fd = false;
  affine::AffineFrontSample affine;
  double affine_height_integral = 0.0;
  // null curve data (when a curve exists)
  double null_residual = 0.0;
  double sigma_P = 0.0;
  double curve_speed2 = 0.0;  // |X′|²+|Y′|²+|Z′|²
  double weierstrass_sigma = 0.0;
  double weierstrass_induced = 0.0;
};

template <class F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(name, e.what());
  }
}

double max_entry(const SL2& m) noexcept {
  return std::max({std::abs(m.a11), std::abs(m.a12), std::abs(m.a21), std::abs(m.a22)});
}

std::vector<Complex> unit_directions(int count, std::uint64_t seed) {
  std::vector<Complex> dirs;
  std::uint64_t state = seed;
  for (int k = 0; k < count; ++k) {
    dirs.push_back(std::polar(1.0, 2.0 * std::numbers::pi * uniform01(state)));
  }
  return dirs;
}

SampleEval evaluate_sample(const SceneData& data, const SceneConfig& c, Complex z, bool with_fd) {
  SampleEval e;
  const auto& d = data.legendrian;
  e.front = front::sample_front(d, z, c.r);
  e.jet = legendrian::to_sl2_jet(e.front.jets);
  e.mc = legendrian::maurer_cartan(e.jet);
  e.mc_scaled = legendrian::maurer_cartan(
      {front::scale_matrix(e.jet.value, c.r), front::scale_matrix(e.jet.deriv, c.r)});
  if (with_fd) {
    e.fd_deriv = legendrian::sl2_derivative_fd(d, z);
    e.has_fd = true;
  }
  e.affine = affine::improper_affine_front(e.front.jets);
  e.affine_height_integral = affine::height_by_integral(d, z);
  if (data.curve) {
    const auto& curve = *data.curve;
    e.null_residual = nullcurve::null_residual(curve, z);
    e.sigma_P = nullcurve::sigma_metric(curve, z).P;
    e.curve_speed2 = std::norm(curve.x().derivative(z)) + std::norm(curve.y().derivative(z)) +
                     std::norm(curve.z().derivative(z));
    if (const auto& w = curve.weierstrass()) {
      const double g2 = std::norm(w->g(z));
      const double eta2 = std::norm(w->eta(z));
      e.weierstrass_sigma = (1.0 + g2 * g2) * eta2;
      e.weierstrass_induced = nullcurve::induced_metric(curve, z).P;
    }
  }
  return e;
}

bool straddles(double a, double b, double c) noexcept {
  const bool pa = a >= 0.0, pb = b >= 0.0, pc = c >= 0.0;
  return !(pa == pb && pb == pc);
}

}  // namespace

PipelineResult evaluate(const SceneConfig& config, const RunOptions& options) {
  validate(config);
  PipelineResult out;
  out.config = config;
  out.grid = {config.radius, config.rings, config.sectors};
  const SceneData data = stage("build", [&] { return build_data(config); });
  const auto& d = data.legendrian;
  const std::size_t n = out.grid.size();
  const std::size_t threads = std::max<std::size_t>(1, options.threads);

  std::vector<SampleEval> evals(n);
  stage("sampling", [&] {
    parallel_for(n, threads, [&](std::size_t k) {
      evals[k] = evaluate_sample(data, config, out.grid.point(k), k % kFdStride == 0);
    });
  });
  out.samples.reserve(n);
  out.affine.reserve(n);
  for (const auto& e : evals) {
    out.samples.push_back(e.front);
    out.affine.push_back(e.affine);
  }

  out.singular = stage("singular_set", [&] {
    return front::singular_set(d, front::CartesianGrid{config.radius, config.cartesian_n}, threads);
  });

  RunReport& rep = out.report;
  rep.config_name = config.name;
  rep.input_kind = std::string(to_string(config.kind));
  rep.samples = n;
  auto& inv = rep.invariants;

  // ---- nullcurve ----------------------------------------------------------
  {
    std::vector<Complex> xs(n), ys(n), zs(n);
    for (std::size_t k = 0; k < n; ++k) {
      xs[k] = evals[k].front.jets.x.value;
      ys[k] = evals[k].front.jets.y.value;
      zs[k] = evals[k].front.z;
    }
    rep.xy_bounds = nullcurve::check_xy_bounds(xs, ys, zs);
  }
  const bool xy_holds = rep.xy_bounds.holds();
  const bool weierstrass = data.curve && data.curve->weierstrass().has_value();

  if (data.curve) {
    Check null_res("nullcurve.null_residual", "nullcurve", "|X'^2 + Y'^2 + Z'^2| <= 1e-12",
                   nullcurve::kNullResidualTol);
    Check sigma_dom("nullcurve.sigma_dominates_curve_metric", "nullcurve",
                    "2 dsigma^2 >= |dX|^2 + |dY|^2 + |dZ|^2", kRel);
    if (!weierstrass) {
      null_res.advisory();
      sigma_dom.advisory();
    }
    for (const auto& e : evals) {
      null_res.residual(e.null_residual, e.front.z);
      sigma_dom.at_most(e.curve_speed2, 2.0 * e.sigma_P, kRel * e.curve_speed2, e.front.z);
    }
    inv.push_back(null_res.finish(weierstrass ? "" : "direct input: reported, not enforced"));
    inv.push_back(sigma_dom.finish(weierstrass ? "" : "direct input: reported, not enforced"));
  } else {
    inv.push_back(Check::skipped("nullcurve.null_residual", "nullcurve",
                                 "|X'^2 + Y'^2 + Z'^2| <= 1e-12", "pair input has no Z component"));
    inv.push_back(Check::skipped("nullcurve.sigma_dominates_curve_metric", "nullcurve",
                                 "2 dsigma^2 >= |dX|^2 + |dY|^2 + |dZ|^2",
                                 "pair input has no Z component"));
  }
  if (weierstrass) {
    Check sigma_id("nullcurve.sigma_weierstrass_identity", "nullcurve",
                   "2(|X'|^2 + |Y'|^2) = (1 + |g|^4)|eta|^2, relative", kRel);
    Check induced_id("nullcurve.induced_metric_identity", "nullcurve",
                     "|X'|^2 + |Y'|^2 + |Z'|^2 = (1/2)(1 + |g|^2)^2 |eta|^2, relative", kRel);
    for (const auto& e : evals) {
      const double a = 2.0 * e.sigma_P;
      sigma_id.residual(std::abs(a - e.weierstrass_sigma) / std::max(e.weierstrass_sigma, 1e-300),
                        e.front.z);
      induced_id.residual(
          std::abs(e.curve_speed2 - e.weierstrass_induced) / std::max(e.weierstrass_induced, 1e-300),
          e.front.z);
    }
    inv.push_back(sigma_id.finish());
    inv.push_back(induced_id.finish());
  } else {
    inv.push_back(Check::skipped("nullcurve.sigma_weierstrass_identity", "nullcurve",
                                 "2(|X'|^2 + |Y'|^2) = (1 + |g|^4)|eta|^2, relative",
                                 "input is not Weierstrass data"));
    inv.push_back(Check::skipped("nullcurve.induced_metric_identity", "nullcurve",
                                 "|X'|^2 + |Y'|^2 + |Z'|^2 = (1/2)(1 + |g|^2)^2 |eta|^2, relative",
                                 "input is not Weierstrass data"));
  }
  {
    Check xy("nullcurve.xy_bounds", "nullcurve", "1 < |X| < 2 and |Y| < 1/3 on the sample grid", 0.0);
    xy.advisory();
    for (const auto& e : evals) {
      const double ax = std::abs(e.front.jets.x.value);
      const double ay = std::abs(e.front.jets.y.value);
      const double slack = std::min({ax - 1.0, 2.0 - ax, 1.0 / 3.0 - ay});
      xy.condition(slack > 0.0, slack, slack, e.front.z);
    }
    inv.push_back(xy.finish(xy_holds ? "hypothesis holds"
                                     : "hypothesis violated; dependent bounds are not applicable"));
  }

  // ---- legendrian ---------------------------------------------------------
  {
    Check det("legendrian.det_unit", "legendrian", "|det Lambda - 1| <= 1e-12 (entry-scaled)",
              legendrian::kDetTol);
    Check contact("legendrian.contact_residual", "legendrian", "|W' + Y X'| <= 1e-10",
                  legendrian::kContactTol);
    Check offdiag("legendrian.off_diagonal", "legendrian",
                  "diagonal of Lambda^{-1} Lambda' vanishes", config.invariant_tol);
    Check match("legendrian.forms_match_matrix", "legendrian",
                "off-diagonal of Lambda^{-1} Lambda' equals (theta, omega) closed forms",
                config.invariant_tol);
    Check fd("legendrian.finite_difference_agreement", "legendrian",
             "analytic Lambda' agrees with a finite difference of Lambda (entry-scaled)", kFdTol);
    Check imm("legendrian.immersion", "legendrian", "(omega, theta) != (0, 0)", 0.0);
    for (const auto& e : evals) {
      const Complex z = e.front.z;
      const SL2& L = e.jet.value;
      det.residual(std::abs(L.det() - 1.0) / std::max(1.0, L.det_scale()), z);
      contact.residual(legendrian::contact_residual(e.front.jets), z);
      offdiag.residual(std::max(std::abs(e.mc.a11), std::abs(e.mc.a22)), z);
      const auto& f = e.front.forms;
      const double scale = std::max({1.0, std::abs(f.omega), std::abs(f.theta)});
      match.residual(std::max(std::abs(e.mc.a21 - f.omega), std::abs(e.mc.a12 - f.theta)) / scale, z);
      if (e.has_fd) fd.residual(max_entry(e.fd_deriv - e.jet.deriv) / std::max(1.0, max_entry(e.jet.deriv)), z);
      const double speed = std::abs(f.omega) + std::abs(f.theta);
      imm.condition(f.immersion, speed, speed, z);
    }
    inv.push_back(det.finish());
    inv.push_back(contact.finish());
    inv.push_back(offdiag.finish());
    inv.push_back(match.finish());
    inv.push_back(fd.finish());
    inv.push_back(imm.finish());
  }

  // ---- flatfront ----------------------------------------------------------
  const auto dirs = unit_directions(config.directions, kDirectionSeed);
  {
    auto& g = rep.gauss_image;
    g.r = config.r;
    Check point("flatfront.point_in_h3", "flatfront", "a > 0, c > 0, |ac - |b|^2 - 1| <= 1e-9",
                front::kPointTol);
    Check hs("flatfront.halfspace_roundtrip", "flatfront",
             "h > 0 and (w, h) reconstructs Lambda Lambda^*", front::kPointTol);
    Check ball("flatfront.ball_model", "flatfront",
               "|x0^2 - x1^2 - x2^2 - x3^2 - 1| <= 1e-9 and ball norm < 1", front::kPointTol);
    Check closed("flatfront.gauss_closed_form", "flatfront", "A/C = 1/X and B/D = Y/(1+XY)",
                 front::kGaussClosedFormTol);
    Check bounded("flatfront.gauss_bounded", "flatfront", "|G+| < 1 and |G-| < 1", 0.0);
    Check scaling("flatfront.gauss_scaling", "flatfront",
                  "Gauss maps of diag(r,1/r)Lambda equal r^2 (G+, G-)", kRel);
    Check invariant_forms("flatfront.lift_metric_scaling_invariance", "flatfront",
                          "Lambda_r^{-1} dLambda_r = Lambda^{-1} dLambda", kRel);
    Check kuy("flatfront.front_metric_bound", "flatfront",
              "ds2_f(v) <= 2 ds2_L(v) + 1e-12 for random directions", 1e-12);
    Check nonneg("flatfront.front_metric_nonnegative", "flatfront", "ds2_f(v) >= 0", kRel);
    Check degenerate("flatfront.degeneracy_identity", "flatfront",
                     "min over unit v of ds2_f equals (|omega| - |theta|)^2", kRel);
    Check positive("flatfront.lift_metric_positive", "flatfront", "ds2_L.P > 0", 0.0);

    for (const auto& e : evals) {
      const auto& s = e.front;
      const Complex z = s.z;
      const auto& p = s.point;
      const double pscale = std::max({1.0, p.a, p.c});
      point.condition(p.a > 0.0 && p.c > 0.0 && std::abs(p.det() - 1.0) <= front::kPointTol * pscale,
                      front::kPointTol - std::abs(p.det() - 1.0) / pscale,
                      std::abs(p.det() - 1.0), z);
      const auto back = front::from_halfspace(s.halfspace);
      const double hs_err =
          std::max({std::abs(back.a - p.a), std::abs(back.c - p.c), std::abs(back.b - p.b)}) / pscale;
      hs.condition(s.halfspace.h > 0.0 && hs_err <= front::kPointTol, front::kPointTol - hs_err,
                   hs_err, z);
      const double mk = std::abs(s.ball.minkowski_norm() - 1.0) / std::max(1.0, s.ball.x0 * s.ball.x0);
      ball.condition(mk <= front::kPointTol && s.ball.ball_norm() < 1.0, front::kPointTol - mk, mk, z);

      // Closed forms on the unscaled lift.
      const auto& gu = s.gauss_unscaled;
      const Complex X = s.jets.x.value;
      const Complex Y = s.jets.y.value;
      if (!gu.plus.infinite && std::abs(X) >= kSphereCutoff) {
        const Complex expect = 1.0 / X;
        closed.residual(std::abs(gu.plus.value - expect) / std::max(1.0, std::abs(expect)), z);
      }
      if (!gu.minus.infinite && std::abs(1.0 + X * Y) >= kSphereCutoff) {
        const Complex expect = Y / (1.0 + X * Y);
        closed.residual(std::abs(gu.minus.value - expect) / std::max(1.0, std::abs(expect)), z);
      }
      if (xy_holds) {
        const double worst = std::max(gu.plus.abs(), gu.minus.abs());
        bounded.condition(worst < 1.0, 1.0 - worst, worst, z);
      }
      const double r2 = config.r * config.r;
      for (const auto& [scaled, base] : {std::pair{s.gauss.plus, gu.plus}, std::pair{s.gauss.minus, gu.minus}}) {
        if (scaled.infinite || base.infinite) continue;
        const Complex expect = r2 * base.value;
        scaling.residual(std::abs(scaled.value - expect) / std::max(1.0, std::abs(expect)), z);
      }

      const double mc_scale = std::max({1.0, std::abs(e.mc.a21), std::abs(e.mc.a12)});
      invariant_forms.residual(max_entry(e.mc_scaled - e.mc) / mc_scale, z);

      for (const Complex v : dirs) {
        kuy.at_most(s.metric_f(v), 2.0 * s.metric_L(v), 1e-12, z);
        const double mf = s.metric_f(v);
        nonneg.condition(mf >= -kRel * std::max(1.0, s.metric_f.P), mf, mf, z);
      }
      const double gap = std::abs(s.forms.omega) - std::abs(s.forms.theta);
      degenerate.residual(std::abs(s.metric_f.min_unit() - gap * gap) / std::max(1.0, s.metric_f.P), z);
      positive.condition(s.metric_L.P > 0.0, s.metric_L.P, s.metric_L.P, z);

      g.gplus_max = std::max(g.gplus_max, s.gauss.plus.abs());
      g.gminus_max = std::max(g.gminus_max, s.gauss.minus.abs());
      g.unscaled_gplus_max = std::max(g.unscaled_gplus_max, gu.plus.abs());
      g.unscaled_gminus_max = std::max(g.unscaled_gminus_max, gu.minus.abs());
      g.infinite_values += (s.gauss.plus.infinite ? 1 : 0) + (s.gauss.minus.infinite ? 1 : 0);
    }
    inv.push_back(point.finish());
    inv.push_back(hs.finish());
    inv.push_back(ball.finish());
    inv.push_back(closed.finish());
    inv.push_back(xy_holds ? bounded.finish()
                           : Check::skipped(bounded.finish().name, "flatfront", "|G+| < 1 and |G-| < 1",
                                            "bounds 1 < |X| < 2, |Y| < 1/3 do not hold on the grid"));
    inv.push_back(scaling.finish());
    inv.push_back(invariant_forms.finish());
    inv.push_back(kuy.finish());
    inv.push_back(nonneg.finish());
    inv.push_back(degenerate.finish());
    inv.push_back(positive.finish());

    Check sing("flatfront.singular_vertices", "flatfront",
               "||rho|^2 - 1| <= 1e-9 at every refined contour vertex", front::kSingularVertexTol);
    for (std::size_t l = 0; l < out.singular.polylines.size(); ++l) {
      for (std::size_t k = 0; k < out.singular.polylines[l].size(); ++k) {
        sing.residual(std::abs(out.singular.residuals[l][k]), out.singular.polylines[l][k]);
      }
    }
    std::string note = out.singular.empty() ? "empty singular set" : "";
    if (out.singular.entire_domain_singular) note = "every grid node is singular (|rho| = 1 throughout)";
    inv.push_back(sing.finish(note));

    auto& ss = rep.singular;
    ss.vertex_count = out.singular.vertex_count;
    ss.polylines = out.singular.polylines.size();
    ss.cells = out.singular.cells;
    ss.crossed_cells = out.singular.crossed_cells;
    ss.infinite_cells = out.singular.infinite_cells;
    ss.entire_domain_singular = out.singular.entire_domain_singular;
    ss.max_vertex_residual = out.singular.max_vertex_residual;
    for (const auto& t : mesh_triangles(out.grid)) {
      if (straddles(out.samples[t[0]].singular_field, out.samples[t[1]].singular_field,
                    out.samples[t[2]].singular_field)) {
        ++ss.singular_faces;
      }
    }
  }

  // ---- affine -------------------------------------------------------------
  {
    double y_bound = 0.0, xy_bound = 0.0, w_bound = 0.0;
    for (const auto& e : evals) {
      const auto& j = e.front.jets;
      y_bound = std::max(y_bound, std::abs(j.y.value));
      xy_bound = std::max({xy_bound, std::abs(j.x.value), std::abs(j.y.value)});
      w_bound = std::max(w_bound, std::abs(j.w.value));
    }
    Check route("affine.route_agreement", "affine",
                "height via W equals height via a fresh quadrature of int Y dX", affine::kRouteTol);
    Check sandwich("affine.metric_sandwich", "affine",
                   "dtau^2 <= ds2_F <= (B^2 + 1) dtau^2 with B = max |Y|", kRel);
    Check bounded("affine.position_bounded", "affine",
                  "|position| <= 2M + M^2/2 + M^2 + 2M'", 0.0);
    const double pos_bound = affine::position_bound(xy_bound, w_bound);
    for (const auto& e : evals) {
      const Complex z = e.front.z;
      route.residual(std::abs(e.affine.s - e.affine_height_integral), z);
      const auto mb = affine::affine_metric_bound(e.front.jets, y_bound);
      const double tau = e.affine.tau_P;
      const double allowance = kRel * std::max(1.0, mb.rhs);
      sandwich.condition(tau <= mb.lhs + allowance && mb.lhs <= mb.rhs + allowance,
                         std::min(mb.lhs - tau, mb.rhs - mb.lhs), mb.lhs, z);
      bounded.at_most(e.affine.norm(), pos_bound, 0.0, z);
    }
    inv.push_back(route.finish());
    inv.push_back(sandwich.finish());
    inv.push_back(bounded.finish());
  }

  // ---- diagnostics --------------------------------------------------------
  stage("diagnostics", [&] {
    const auto paths = test_paths(config.radius, config.test_paths, kPathSeed);
    const auto lift_metric = [&d](Complex z) {
      return front::metric_forms(legendrian::canonical_forms(d, z)).lift;
    };
    const auto front_metric = [&d](Complex z) {
      return front::metric_forms(legendrian::canonical_forms(d, z)).front;
    };
    const double len_tol = diagnostics::kDefaultLengthTol;
    const std::size_t path_samples = static_cast<std::size_t>(config.path_samples);

    struct PathEval {
      PathDiagnostic diag;
      double additivity_error = 0.0;
      std::size_t m_violations = 0;
    };
    std::vector<PathEval> pe(paths.size());
    parallel_for(paths.size(), threads, [&](std::size_t k) {
      const auto& path = paths[k];
      PathEval& r = pe[k];
      r.diag.index = k;
      r.diag.vertices = path.vertices().size();
      const auto m = diagnostics::estimate_m(d, path, path_samples);
      r.diag.m = m.m;
      r.diag.key_chain = diagnostics::certify_key_chain(d, path, m, path_samples);
      r.diag.length_L = diagnostics::length_along(lift_metric, path, len_tol);
      r.diag.length_f = diagnostics::length_along(front_metric, path, len_tol);
      // Additivity: split at the second vertex, or at the midpoint of a single segment.
      const auto v = path.vertices();
      std::vector<Complex> head, tail;
      if (v.size() >= 3) {
        head.assign(v.begin(), v.begin() + 2);
        tail.assign(v.begin() + 1, v.end());
      } else {
        const Complex mid = 0.5 * (v[0] + v[1]);
        head = {v[0], mid};
        tail = {mid, v[1]};
      }
      const double parts = diagnostics::length_along(lift_metric, holo::PathPolyline(head), len_tol) +
                           diagnostics::length_along(lift_metric, holo::PathPolyline(tail), len_tol);
      r.additivity_error = std::abs(parts - r.diag.length_L);
    });

    Check mb("diagnostics.m_bound", "diagnostics", "1/m <= |e^W| <= m on every test path", 0.0);
    Check exp_step("diagnostics.key_chain_exponential_step", "diagnostics",
                   "ds2_L >= m^-4 (|X'|^2 + |Y' - Y^2 X'|^2)", 0.0);
    Check young("diagnostics.key_chain_young_step", "diagnostics",
                "|X'|^2 + |Y' - Y^2 X'|^2 >= (1 - 3|Y|^4)|X'|^2 + (3/4)|Y'|^2", 0.0);
    Check quartic("diagnostics.key_chain_quartic_step", "diagnostics", "1 - 3|Y|^4 >= 26/27", 0.0);
    Check chain("diagnostics.key_chain", "diagnostics", "ds2_L >= 3/(4 m^4) dsigma^2 at path samples",
                0.0);
    Check kuy_len("diagnostics.front_length_bound", "diagnostics",
                  "len_f <= sqrt(2) len_L + 1e-8 on test paths", 1e-8);
    Check additive("diagnostics.length_additivity", "diagnostics",
                   "length over a split path equals the sum of its parts", 2.0 * len_tol);
    bool any_applicable = false;
    for (const auto& r : pe) {
      const Complex where = paths[r.diag.index].front();
      const auto& kc = r.diag.key_chain;
      rep.paths.push_back(r.diag);
      kuy_len.at_most(r.diag.length_f, std::sqrt(2.0) * r.diag.length_L, 1e-8, where);
      additive.residual(r.additivity_error, where);
      if (kc.status == diagnostics::KeyChainReport::Status::NotApplicable) continue;
      any_applicable = true;
      const auto count = [&](Check& c, std::size_t v) {
        c.condition(v == 0, -static_cast<double>(v), static_cast<double>(v), where);
      };
      count(mb, kc.m_violations);
      count(exp_step, kc.exponential_violations);
      count(young, kc.young_violations);
      count(quartic, kc.quartic_violations);
      chain.condition(kc.violations == 0, kc.min_slack, kc.min_ratio, kc.worst_location);
    }
    const std::string na = "bounds 1 < |X| < 2, |Y| < 1/3 fail on every test path";
    for (Check* c : {&mb, &exp_step, &young, &quartic, &chain}) {
      if (any_applicable) {
        inv.push_back(c->finish());
      } else {
        const auto r = c->finish();
        inv.push_back(Check::skipped(r.name, r.module, r.description, na));
      }
    }
    inv.push_back(kuy_len.finish());
    inv.push_back(additive.finish());

    // Radial rays: lift-metric length profiles and the hyperboloid height.
    const auto cutoffs = diagnostics::default_cutoffs(config.cutoff_levels);
    rep.rays.resize(config.ray_angles_deg.size());
    parallel_for(rep.rays.size(), threads, [&](std::size_t k) {
      const double angle = config.ray_angles_deg[k] * std::numbers::pi / 180.0;
      rep.rays[k].profile = diagnostics::divergence_profile(lift_metric, angle, cutoffs, "ds2_L", len_tol);
      rep.rays[k].x0_sup = diagnostics::sup_along_ray(
          [&](Complex z) {
            return front::ball_coords(front::project(
                       front::scale_matrix(legendrian::to_sl2(d, z), config.r)))
                .x0;
          },
          angle, cutoffs.back(), 64);
    });
    Check mono("diagnostics.length_monotone", "diagnostics",
               "ray lengths are non-decreasing in the cutoff", 0.0);
    bool any_divergent = false, all_plateau = !rep.rays.empty();
    for (const auto& ray : rep.rays) {
      const auto& L = ray.profile.lengths;
      for (std::size_t k = 1; k < L.size(); ++k) {
        mono.condition(L[k] >= L[k - 1], L[k] - L[k - 1], L[k], std::polar(ray.profile.cutoffs[k], ray.profile.angle));
      }
      any_divergent = any_divergent || ray.profile.verdict == diagnostics::Verdict::DivergentTrend;
      all_plateau = all_plateau && ray.profile.verdict == diagnostics::Verdict::Plateau;
    }
    inv.push_back(mono.finish());
    const auto verdict = any_divergent ? diagnostics::Verdict::DivergentTrend
                         : all_plateau ? diagnostics::Verdict::Plateau
                                       : diagnostics::Verdict::Inconclusive;
    rep.completeness_verdict = std::string(diagnostics::to_string(verdict));
    Check complete("diagnostics.completeness", "diagnostics",
                   "three-valued completeness diagnostic of ds2_L along radial rays", 0.0);
    for (const auto& ray : rep.rays) {
      complete.condition(true, ray.profile.growth_ratio, ray.profile.growth_ratio,
                         std::polar(ray.profile.cutoffs.back(), ray.profile.angle));
    }
    inv.push_back(complete.finish(rep.completeness_verdict));
  });

  return out;
}

std::vector<InvariantResult> property_sweep(const PipelineResult& result, const SceneData& data,
                                            std::uint64_t seed) {
  std::uint64_t state = seed;
  const auto& d = data.legendrian;
  Check kuy("sweep.front_metric_bound", "flatfront",
            "ds2_f(v) <= 2 ds2_L(v) + 1e-12 at random samples and directions", 1e-12);
  const std::size_t n = result.samples.size();
  for (int k = 0; k < 256; ++k) {
    const auto& s = result.samples[static_cast<std::size_t>(uniform01(state) * n) % n];
    const Complex v = std::polar(0.5 + uniform01(state), 2.0 * std::numbers::pi * uniform01(state));
    kuy.at_most(s.metric_f(v), 2.0 * s.metric_L(v), 1e-12, s.z);
  }
  Check len("sweep.front_length_bound", "diagnostics",
            "len_f <= sqrt(2) len_L + 1e-8 on random polylines", 1e-8);
  const auto lift_metric = [&d](Complex z) {
    return front::metric_forms(legendrian::canonical_forms(d, z)).lift;
  };
  const auto front_metric = [&d](Complex z) {
    return front::metric_forms(legendrian::canonical_forms(d, z)).front;
  };
  for (const auto& path : test_paths(result.config.radius, 8, splitmix64(state))) {
    len.at_most(diagnostics::length_along(front_metric, path),
                std::sqrt(2.0) * diagnostics::length_along(lift_metric, path), 1e-8, path.front());
  }
  return {kuy.finish(), len.finish()};
}

}  // namespace hyperfront::scene
