#include "hyperfront/affine.hpp"

#include "hyperfront/holo/quadrature.hpp"

namespace hyperfront::affine {

AffineFrontSample improper_affine_front(const legendrian::LegendrianJets& j) noexcept {
  const Complex X = j.x.value;
  const Complex Y = j.y.value;
  const Complex W = j.w.value;
  AffineFrontSample out;
  out.z = j.z;
  out.p = X + std::conj(Y);
  out.s = 0.5 * (std::norm(X) - std::norm(Y)) + (X * Y + 2.0 * W).real();
  out.tau_P = std::norm(j.x.deriv) + std::norm(j.y.deriv);
  return out;
}

AffineFrontSample improper_affine_front(const legendrian::LegendrianData& d, Complex z) {
  return improper_affine_front(d.at(z));
}

double height_by_integral(const legendrian::LegendrianData& d, Complex z) {
  const auto& x = d.x();
  const auto& y = d.y();
  const Complex integral =
      holo::primitive([&](Complex t) { return y(t) * x.derivative(t); }, z, d.tol());
  const Complex X = x(z);
  const Complex Y = y(z);
  return 0.5 * (std::norm(X) - std::norm(Y)) + (X * Y - 2.0 * integral).real();
}

MetricForm tau_metric(const legendrian::LegendrianJets& j) noexcept {
  return {std::norm(j.x.deriv) + std::norm(j.y.deriv), Complex{}};
}

MetricBound affine_metric_bound(const legendrian::LegendrianJets& j, double y_bound) noexcept {
  const double dx2 = std::norm(j.x.deriv);
  const double dy2 = std::norm(j.y.deriv);
  return {(std::norm(j.y.value) + 1.0) * dx2 + dy2, (y_bound * y_bound + 1.0) * (dx2 + dy2)};
}

double position_bound(double m, double m_w) noexcept {
  return 2.0 * m + 0.5 * m * m + m * m + 2.0 * m_w;
}

}  // namespace hyperfront::affine
