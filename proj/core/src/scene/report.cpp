#include "hyperfront/scene/report.hpp"

#include <cmath>
#include <json.hpp>

namespace hyperfront::scene {

using nlohmann::ordered_json;

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Warn: return "warn";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

Check::Check(std::string name, std::string module, std::string description, double tolerance) {
  result_.name = std::move(name);
  result_.module = std::move(module);
  result_.description = std::move(description);
  result_.tolerance = tolerance;
  result_.worst_value = 0.0;
}

void Check::condition(bool ok, double slack, double value, Complex where) {
  ++result_.checked;
  if (!ok) ++result_.failures;
  if (std::isnan(slack)) slack = -HUGE_VAL;
  if (!result_.location || slack < result_.worst_slack) {
    result_.worst_slack = slack;
    result_.worst_value = value;
    result_.location = where;
  }
}

void Check::residual(double error, Complex where) {
  condition(error <= result_.tolerance, result_.tolerance - error, error, where);
}

void Check::at_most(double lhs, double rhs, double allowance, Complex where) {
  condition(lhs <= rhs + allowance, rhs - lhs, lhs, where);
}

InvariantResult Check::finish(std::string note) const {
  InvariantResult r = result_;
  if (r.checked == 0) {
    r.status = Status::Skipped;
  } else if (r.failures == 0) {
    r.status = Status::Pass;
  } else {
    r.status = advisory_ ? Status::Warn : Status::Fail;
  }
  r.note = std::move(note);
  return r;
}

InvariantResult Check::skipped(std::string name, std::string module, std::string description,
                               std::string reason) {
  InvariantResult r;
  r.name = std::move(name);
  r.module = std::move(module);
  r.description = std::move(description);
  r.status = Status::Skipped;
  r.note = std::move(reason);
  return r;
}

std::size_t RunReport::count(Status s) const noexcept {
  std::size_t n = 0;
  for (const auto& inv : invariants) n += inv.status == s ? 1 : 0;
  return n;
}

const InvariantResult* RunReport::first_failure() const noexcept {
  for (const auto& inv : invariants) {
    if (inv.status == Status::Fail) return &inv;
  }
  return nullptr;
}

const InvariantResult* RunReport::find(std::string_view name) const noexcept {
  for (const auto& inv : invariants) {
    if (inv.name == name) return &inv;
  }
  return nullptr;
}

namespace {

// JSON has no infinities; they are written as null.
ordered_json num(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

ordered_json point(Complex z) { return ordered_json::array({num(z.real()), num(z.imag())}); }

}  // namespace

std::string to_json(const RunReport& rep) {
  ordered_json j;
  j["config"] = rep.config_name;
  j["input_kind"] = rep.input_kind;
  j["samples"] = rep.samples;

  ordered_json summary;
  summary["passed"] = rep.count(Status::Pass);
  summary["failed"] = rep.count(Status::Fail);
  summary["warnings"] = rep.count(Status::Warn);
  summary["skipped"] = rep.count(Status::Skipped);
  summary["all_pass"] = rep.all_pass();
  const auto* first = rep.first_failure();
  summary["first_failure"] = first ? ordered_json(first->name) : ordered_json(nullptr);
  j["summary"] = summary;

  ordered_json invs = ordered_json::array();
  for (const auto& inv : rep.invariants) {
    ordered_json e;
    e["name"] = inv.name;
    e["module"] = inv.module;
    e["description"] = inv.description;
    e["status"] = to_string(inv.status);
    e["tolerance"] = num(inv.tolerance);
    e["checked"] = inv.checked;
    e["failures"] = inv.failures;
    e["worst_value"] = num(inv.worst_value);
    e["worst_slack"] = num(inv.worst_slack);
    e["location"] = inv.location ? point(*inv.location) : ordered_json(nullptr);
    if (!inv.note.empty()) e["note"] = inv.note;
    invs.push_back(std::move(e));
  }
  j["invariants"] = std::move(invs);

  const auto& g = rep.gauss_image;
  j["gauss_image"] = {{"r", g.r},
                      {"radius", num(g.radius())},
                      {"gplus_max", num(g.gplus_max)},
                      {"gminus_max", num(g.gminus_max)},
                      {"unscaled_radius", num(g.unscaled_radius())},
                      {"unscaled_gplus_max", num(g.unscaled_gplus_max)},
                      {"unscaled_gminus_max", num(g.unscaled_gminus_max)},
                      {"infinite_values", g.infinite_values}};

  const auto& xy = rep.xy_bounds;
  ordered_json xyj;
  xyj["holds"] = xy.holds();
  xyj["samples"] = xy.samples;
  xyj["violations"] = xy.violations;
  xyj["x_violations"] = xy.x_violations;
  xyj["y_violations"] = xy.y_violations;
  xyj["min_abs_x"] = num(xy.min_abs_x);
  xyj["max_abs_x"] = num(xy.max_abs_x);
  xyj["max_abs_y"] = num(xy.max_abs_y);
  if (xy.violation_box) {
    const auto& b = *xy.violation_box;
    xyj["violation_box"] = {{"re_min", b[0]}, {"re_max", b[1]}, {"im_min", b[2]}, {"im_max", b[3]}};
  } else {
    xyj["violation_box"] = nullptr;
  }
  j["xy_bounds"] = std::move(xyj);

  const auto& s = rep.singular;
  j["singular_set"] = {{"vertex_count", s.vertex_count},
                       {"polylines", s.polylines},
                       {"cells", s.cells},
                       {"crossed_cells", s.crossed_cells},
                       {"infinite_cells", s.infinite_cells},
                       {"entire_domain_singular", s.entire_domain_singular},
                       {"max_vertex_residual", num(s.max_vertex_residual)},
                       {"singular_faces", s.singular_faces}};

  ordered_json paths = ordered_json::array();
  for (const auto& p : rep.paths) {
    ordered_json e;
    e["index"] = p.index;
    e["vertices"] = p.vertices;
    e["m"] = num(p.m);
    e["key_chain"] = {{"status", diagnostics::to_string(p.key_chain.status)},
                      {"samples", p.key_chain.samples},
                      {"violations", p.key_chain.total_violations()},
                      {"min_slack", num(p.key_chain.min_slack)},
                      {"min_ratio", num(p.key_chain.min_ratio)}};
    e["length_L"] = num(p.length_L);
    e["length_f"] = num(p.length_f);
    paths.push_back(std::move(e));
  }
  ordered_json rays = ordered_json::array();
  for (const auto& r : rep.rays) {
    ordered_json e;
    e["angle"] = r.profile.angle;
    e["metric"] = r.profile.metric;
    ordered_json cuts = ordered_json::array();
    ordered_json lens = ordered_json::array();
    for (double c : r.profile.cutoffs) cuts.push_back(num(c));
    for (double l : r.profile.lengths) lens.push_back(num(l));
    e["cutoffs"] = std::move(cuts);
    e["lengths"] = std::move(lens);
    e["growth_ratio"] = num(r.profile.growth_ratio);
    e["verdict"] = diagnostics::to_string(r.profile.verdict);
    e["x0_sup"] = num(r.x0_sup);
    rays.push_back(std::move(e));
  }
  j["diagnostics"] = {{"paths", std::move(paths)},
                      {"rays", std::move(rays)},
                      {"completeness_verdict", rep.completeness_verdict}};
  return j.dump(2) + "\n";
}

}  // namespace hyperfront::scene
