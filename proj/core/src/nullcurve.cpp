#include "hyperfront/nullcurve.hpp"

#include <algorithm>
#include <array>

#include "hyperfront/error.hpp"

namespace hyperfront::nullcurve {

NullCurve::NullCurve(holo::Map x, holo::Map y, holo::Map z, Provenance provenance,
                     std::optional<WeierstrassData> data)
    : x_(std::move(x)),
      y_(std::move(y)),
      z_(std::move(z)),
      provenance_(provenance),
      data_(std::move(data)) {}

NullCurve from_weierstrass(const WeierstrassData& w, double tol) {
  const auto g = w.g;
  const auto eta = w.eta;
  auto dx = [g, eta](Complex z) {
    const Complex gv = g(z);
    return 0.5 * (1.0 - gv * gv) * eta(z);
  };
  auto dy = [g, eta](Complex z) {
    const Complex gv = g(z);
    return 0.5 * kI * (1.0 + gv * gv) * eta(z);
  };
  auto dz = [g, eta](Complex z) { return g(z) * eta(z); };
  return NullCurve(holo::Map::primitive_of(dx, tol), holo::Map::primitive_of(dy, tol),
                   holo::Map::primitive_of(dz, tol), Provenance::FromWeierstrass, w);
}

NullCurve direct(holo::HoloExpr x, holo::HoloExpr y, holo::HoloExpr z) {
  return NullCurve(holo::Map::from_expr(std::move(x)), holo::Map::from_expr(std::move(y)),
                   holo::Map::from_expr(std::move(z)), Provenance::Direct);
}

double null_residual(const NullCurve& c, Complex z) {
  const Complex dx = c.x().derivative(z);
  const Complex dy = c.y().derivative(z);
  const Complex dz = c.z().derivative(z);
  return std::abs(dx * dx + dy * dy + dz * dz);
}

MetricForm induced_metric(const NullCurve& c, Complex z) {
  if (const auto& w = c.weierstrass()) {
    const double g2 = std::norm(w->g(z));
    const double s = 1.0 + g2;
    return {0.5 * s * s * std::norm(w->eta(z)), Complex{}};
  }
  return {std::norm(c.x().derivative(z)) + std::norm(c.y().derivative(z)) +
              std::norm(c.z().derivative(z)),
          Complex{}};
}

MetricForm sigma_metric(const NullCurve& c, Complex z) {
  return {std::norm(c.x().derivative(z)) + std::norm(c.y().derivative(z)), Complex{}};
}

XYBoundReport check_xy_bounds(std::span<const Complex> x_values,
                              std::span<const Complex> y_values,
                              std::span<const Complex> samples) {
  if (x_values.size() != samples.size() || y_values.size() != samples.size()) {
    throw DomainError("check_xy_bounds: value and sample spans differ in length");
  }
  constexpr std::size_t kKeep = 16;
  XYBoundReport r;
  r.samples = samples.size();
  r.min_abs_x = HUGE_VAL;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const double ax = std::abs(x_values[k]);
    const double ay = std::abs(y_values[k]);
    r.min_abs_x = std::min(r.min_abs_x, ax);
    r.max_abs_x = std::max(r.max_abs_x, ax);
    r.max_abs_y = std::max(r.max_abs_y, ay);
    const bool bad_x = !(ax > 1.0 && ax < 2.0);
    const bool bad_y = !(ay < 1.0 / 3.0);
    if (!bad_x && !bad_y) continue;
    ++r.violations;
    r.x_violations += bad_x ? 1 : 0;
    r.y_violations += bad_y ? 1 : 0;
    if (r.first_violations.size() < kKeep) r.first_violations.push_back(k);
    const Complex s = samples[k];
    if (!r.violation_box) {
      r.violation_box = std::array<double, 4>{s.real(), s.real(), s.imag(), s.imag()};
    } else {
      auto& b = *r.violation_box;
      b[0] = std::min(b[0], s.real());
      b[1] = std::max(b[1], s.real());
      b[2] = std::min(b[2], s.imag());
      b[3] = std::max(b[3], s.imag());
    }
  }
  if (samples.empty()) r.min_abs_x = 0.0;
  return r;
}

}  // namespace hyperfront::nullcurve
