#include "doctest.h"
#include "hyperfront/affine.hpp"
#include "hyperfront/holo/expr.hpp"
#include "oracles.hpp"

using namespace hyperfront;
using namespace hyperfront::affine;
using holo::parse_expr;
using oracle::C;

namespace {

legendrian::LegendrianJets jets(C x, C y, C w, C dx = 0.0, C dy = 0.0) {
  legendrian::LegendrianJets j;
  j.x = {x, dx};
  j.y = {y, dy};
  j.w = {w, -y * dx};
  return j;
}

}  // namespace

TEST_CASE("affine front at fixed points") {
  const auto a = improper_affine_front(jets(1.5, 0.0, 0.0));
  CHECK(a.position()[0] == 1.5);
  CHECK(a.position()[1] == 0.0);
  CHECK(a.position()[2] == doctest::Approx(9.0 / 8).epsilon(1e-15));
  const auto o = improper_affine_front(jets(0.0, 0.0, 0.0));
  CHECK(o.norm() == 0.0);
}

TEST_CASE("property: affine front matches a direct formula") {
  oracle::Rng rng(61);
  for (int k = 0; k < 100; ++k) {
    const C x = rng.in_disk(2.0), y = rng.in_disk(1.0), w = rng.in_disk(1.0);
    const auto a = improper_affine_front(jets(x, y, w));
    CHECK(oracle::rel(a.p, x + std::conj(y)) < 1e-15);
    const double s = 0.5 * (std::norm(x) - std::norm(y)) + (x * y + 2.0 * w).real();
    CHECK(a.s == doctest::Approx(s).epsilon(1e-14));
  }
}

TEST_CASE("property: both height routes agree") {
  oracle::Rng rng(62);
  for (const auto& [x, y] : std::vector<std::pair<const char*, const char*>>{
           {"3/2 + z/4", "z/4"}, {"exp(z)", "z^2/3 + i/7"}}) {
    const auto d = legendrian::lift(parse_expr(x), parse_expr(y));
    for (int k = 0; k < 30; ++k) {
      const C z = rng.in_disk(0.9);
      CHECK(std::abs(improper_affine_front(d, z).s - height_by_integral(d, z)) <= kRouteTol);
    }
  }
}

TEST_CASE("metric sandwich") {
  // Y ≡ 0: equality with B = 0.
  const auto flat = jets(1.5, 0.0, 0.0, 0.25, 0.0);
  const auto b0 = affine_metric_bound(flat, 0.0);
  CHECK(b0.lhs == doctest::Approx(0.0625));
  CHECK(b0.lhs == b0.rhs);
  CHECK(tau_metric(flat).P == 0.0625);

  oracle::Rng rng(63);
  for (int k = 0; k < 200; ++k) {
    const auto j = jets(rng.in_disk(2.0), rng.in_disk(1.0 / 3), 0.0, rng.in_disk(1.0), rng.in_disk(1.0));
    const auto b = affine_metric_bound(j, 1.0 / 3);
    const double tau = tau_metric(j).P;
    CHECK(tau <= b.lhs * (1 + 1e-15));
    CHECK(b.lhs <= b.rhs * (1 + 1e-15));
    CHECK(b.lhs <= (10.0 / 9) * tau * (1 + 1e-15));
  }
}

TEST_CASE("position bound") {
  CHECK(position_bound(1.0, 0.5) == doctest::Approx(2.0 + 0.5 + 1.0 + 1.0));
  const auto d = legendrian::lift(parse_expr("3/2 + z/4"), parse_expr("z/4"));
  oracle::Rng rng(64);
  const double m = 1.725, m_w = 0.9 * 0.9 / 32;
  for (int k = 0; k < 100; ++k) {
    CHECK(improper_affine_front(d, rng.in_disk(0.9)).norm() <= position_bound(m, m_w));
  }
}
