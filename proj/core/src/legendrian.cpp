#include "hyperfront/legendrian.hpp"

#include <algorithm>

#include "hyperfront/error.hpp"

namespace hyperfront::legendrian {

LegendrianData::LegendrianData(holo::Map x, holo::Map y, holo::Map w, double tol, WSource source)
    : x_(std::move(x)), y_(std::move(y)), w_(std::move(w)), tol_(tol), source_(source) {}

LegendrianJets LegendrianData::at(Complex z) const {
  return {z, x_.jet(z), y_.jet(z), w_.jet(z)};
}

LegendrianData LegendrianData::with_w(holo::Map w) const {
  return LegendrianData(x_, y_, std::move(w), tol_, WSource::Direct);
}

LegendrianData lift(holo::Map x, holo::Map y, double tol) {
  auto integrand = [x, y](Complex z) { return -y(z) * x.derivative(z); };
  auto w = holo::Map::primitive_of(integrand, tol);
  return LegendrianData(std::move(x), std::move(y), std::move(w), tol, WSource::Lifted);
}

LegendrianData lift(const holo::HoloExpr& x, const holo::HoloExpr& y, double tol) {
  return lift(holo::Map::from_expr(x), holo::Map::from_expr(y), tol);
}

double contact_residual(const LegendrianJets& j) noexcept {
  return std::abs(j.w.deriv + j.y.value * j.x.deriv);
}

namespace {

struct ExpPair {
  Complex minus;  // e^{-W}
  Complex plus;   // e^{W}
};

ExpPair exponentials(const Jet& w) {
  const ExpPair e{std::exp(-w.value), std::exp(w.value)};
  if (!is_finite(e.minus) || !is_finite(e.plus) || e.minus == Complex{} || e.plus == Complex{}) {
    throw OverflowError("e^{±W} is not representable in double precision", w.value.real());
  }
  return e;
}

}  // namespace

SL2Jet to_sl2_jet(const LegendrianJets& j) {
  const auto [em, ep] = exponentials(j.w);
  const Complex X = j.x.value, dX = j.x.deriv;
  const Complex Y = j.y.value, dY = j.y.deriv;
  const Complex dW = j.w.deriv;
  const Complex s = 1.0 + X * Y;
  SL2Jet out;
  out.value = {em, Y * ep, X * em, s * ep};
  out.deriv = {-dW * em, (dY + Y * dW) * ep, (dX - X * dW) * em, (dX * Y + X * dY + s * dW) * ep};
  return out;
}

SL2 to_sl2(const LegendrianJets& j) {
  const auto [em, ep] = exponentials(j.w);
  const Complex X = j.x.value;
  const Complex Y = j.y.value;
  return {em, Y * ep, X * em, (1.0 + X * Y) * ep};
}

SL2 to_sl2(const LegendrianData& d, Complex z) { return to_sl2(d.at(z)); }

SL2 maurer_cartan(const SL2Jet& lambda) noexcept { return lambda.value.adjugate() * lambda.deriv; }

CanonicalForms canonical_forms(const LegendrianJets& j) {
  const auto [em, ep] = exponentials(j.w);
  CanonicalForms f;
  f.omega = em * em * j.x.deriv;
  f.theta = ep * ep * (j.y.deriv - j.y.value * j.y.value * j.x.deriv);
  if (f.omega == Complex{} && f.theta == Complex{}) {
    f.immersion = false;
    f.rho = ExtComplex::infinity();
  } else if (f.omega == Complex{}) {
    f.rho = ExtComplex::infinity();
  } else {
    f.rho = ExtComplex::finite(f.theta / f.omega);
  }
  return f;
}

CanonicalForms canonical_forms(const LegendrianData& d, Complex z) {
  return canonical_forms(d.at(z));
}

double legendrian_residual(const LegendrianJets& j) {
  const SL2 mc = maurer_cartan(to_sl2_jet(j));
  return std::max(std::abs(mc.a11), std::abs(mc.a22));
}

double legendrian_residual(const LegendrianData& d, Complex z) {
  return legendrian_residual(d.at(z));
}

SL2 sl2_derivative_fd(const LegendrianData& d, Complex z, double h) {
  const double room = 1.0 - std::abs(z);
  if (!(room > 0.0)) throw DomainError("finite difference requested outside the unit disk");
  h = std::min(h, 0.25 * room);
  const SL2 p2 = to_sl2(d, z + 2.0 * h);
  const SL2 p1 = to_sl2(d, z + h);
  const SL2 m1 = to_sl2(d, z - h);
  const SL2 m2 = to_sl2(d, z - 2.0 * h);
  const Complex inv{1.0 / (12.0 * h), 0.0};
  return inv * ((m2 - p2) + Complex{8.0, 0.0} * (p1 - m1));
}

}  // namespace hyperfront::legendrian
