#include "hyperfront/front.hpp"

#include <string>

#include "hyperfront/error.hpp"

namespace hyperfront::front {

HermitianPoint project(const SL2& lambda) {
  const SL2& L = lambda;
  HermitianPoint p;
  p.a = std::norm(L.a11) + std::norm(L.a12);
  p.c = std::norm(L.a21) + std::norm(L.a22);
  p.b = L.a11 * std::conj(L.a21) + L.a12 * std::conj(L.a22);
  const double scale = std::max(1.0, p.a * p.c);
  if (!(p.a > 0.0) || !(p.c > 0.0) || !(std::abs(p.det() - 1.0) <= kPointTol * scale)) {
    throw InvariantError("projection is not a point of H^3 (det " + std::to_string(p.det()) + ")");
  }
  return p;
}

GaussMaps gauss_maps(const SL2& lambda) noexcept {
  return {sphere_quotient(lambda.a11, lambda.a21), sphere_quotient(lambda.a12, lambda.a22)};
}

HalfSpace halfspace_coords(const HermitianPoint& p) {
  if (!(p.c > 0.0)) throw DomainError("half-space coordinates need c > 0");
  return {p.b / p.c, 1.0 / p.c};
}

HermitianPoint from_halfspace(const HalfSpace& hs) noexcept {
  return {(hs.h * hs.h + std::norm(hs.w)) / hs.h, 1.0 / hs.h, hs.w / hs.h};
}

BallPoint ball_coords(const HermitianPoint& p) {
  BallPoint out;
  out.x0 = 0.5 * (p.a + p.c);
  out.hyperboloid = {p.b.real(), p.b.imag(), 0.5 * (p.a - p.c)};
  const double scale = std::max(1.0, out.x0 * out.x0);
  if (!(std::abs(out.minkowski_norm() - 1.0) <= kPointTol * scale)) {
    throw InvariantError("hyperboloid point off the unit sheet");
  }
  const double denom = 1.0 + out.x0;
  for (int k = 0; k < 3; ++k) out.ball[k] = out.hyperboloid[k] / denom;
  return out;
}

MetricPair metric_forms(const legendrian::CanonicalForms& forms) noexcept {
  const double p = std::norm(forms.omega) + std::norm(forms.theta);
  return {{p, Complex{}}, {p, forms.omega * forms.theta}};
}

SL2 scale_matrix(const SL2& lambda, double r) noexcept {
  const double inv = 1.0 / r;
  return {r * lambda.a11, r * lambda.a12, inv * lambda.a21, inv * lambda.a22};
}

Scaled scale(const legendrian::LegendrianData& d, double r, Complex z) {
  if (!(r > 0.0 && r <= 1.0)) throw DomainError("scaling factor must lie in (0, 1]");
  const SL2 lr = scale_matrix(legendrian::to_sl2(d, z), r);
  return {lr, gauss_maps(lr)};
}

double singular_field(const legendrian::CanonicalForms& forms) noexcept {
  const double w2 = std::norm(forms.omega);
  const double t2 = std::norm(forms.theta);
  if (t2 <= w2) return w2 == 0.0 ? 0.0 : t2 / w2 - 1.0;
  return 1.0 - w2 / t2;
}

double singular_value(const legendrian::CanonicalForms& forms) noexcept {
  if (forms.rho.infinite) return HUGE_VAL;
  return std::norm(forms.rho.value) - 1.0;
}

FrontSample sample_front(const legendrian::LegendrianData& d, Complex z, double r) {
  FrontSample s;
  s.z = z;
  s.jets = d.at(z);
  const SL2 lambda = legendrian::to_sl2(s.jets);
  s.lambda = r == 1.0 ? lambda : scale_matrix(lambda, r);
  s.gauss_unscaled = gauss_maps(lambda);
  s.gauss = gauss_maps(s.lambda);
  s.point = project(s.lambda);
  s.halfspace = halfspace_coords(s.point);
  s.ball = ball_coords(s.point);
  s.forms = legendrian::canonical_forms(s.jets);
  const MetricPair m = metric_forms(s.forms);
  s.metric_L = m.lift;
  s.metric_f = m.front;
  s.singular_value = singular_value(s.forms);
  s.singular_field = singular_field(s.forms);
  return s;
}

}  // namespace hyperfront::front
