#include "doctest.h"
#include "hyperfront/error.hpp"
#include "hyperfront/front.hpp"
#include "hyperfront/holo/expr.hpp"
#include "oracles.hpp"

using namespace hyperfront;
using namespace hyperfront::front;
using holo::parse_expr;
using oracle::C;

namespace {

const SL2 kShear{1.0, 0.0, 1.5, 1.0};

SL2 random_sl2(oracle::Rng& rng) {
  const C a = rng.in_disk(2.0) + 0.5, b = rng.in_disk(2.0), c = rng.in_disk(2.0);
  return {a, b, c, (1.0 + b * c) / a};
}

}  // namespace

TEST_CASE("projection of fixed matrices") {
  const auto p = project(SL2::identity());
  CHECK(p.a == 1.0);
  CHECK(p.c == 1.0);
  CHECK(p.b == C(0.0));
  const auto q = project(kShear);
  CHECK(q.a == doctest::Approx(1.0));
  CHECK(q.b == C(1.5));
  CHECK(q.c == doctest::Approx(13.0 / 4));
  CHECK_THROWS_AS((void)project(SL2{2.0, 0.0, 0.0, 2.0}), InvariantError);
}

TEST_CASE("half-space and ball coordinates of fixed points") {
  const auto hs0 = halfspace_coords(project(SL2::identity()));
  CHECK(hs0.w == C(0.0));
  CHECK(hs0.h == 1.0);
  const auto hs = halfspace_coords(project(kShear));
  CHECK(std::abs(hs.w - C(6.0 / 13)) < 1e-15);
  CHECK(hs.h == doctest::Approx(4.0 / 13).epsilon(1e-15));

  const auto b0 = ball_coords(project(SL2::identity()));
  CHECK(b0.ball_norm() == 0.0);
  const auto b = ball_coords(project(kShear));
  CHECK(b.x0 == doctest::Approx(17.0 / 8).epsilon(1e-15));
  CHECK(b.hyperboloid[0] == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(b.hyperboloid[1] == 0.0);
  CHECK(b.hyperboloid[2] == doctest::Approx(-9.0 / 8).epsilon(1e-15));
  CHECK(b.ball[0] == doctest::Approx(12.0 / 25).epsilon(1e-15));
  CHECK(b.ball[1] == 0.0);
  CHECK(b.ball[2] == doctest::Approx(-9.0 / 25).epsilon(1e-15));

  HermitianPoint bad;
  bad.c = 0.0;
  CHECK_THROWS_AS((void)halfspace_coords(bad), DomainError);
}

TEST_CASE("property: models of H3 are consistent") {
  oracle::Rng rng(41);
  for (int k = 0; k < 200; ++k) {
    const auto p = project(random_sl2(rng));
    CHECK(p.a > 0.0);
    CHECK(p.c > 0.0);
    const auto b = ball_coords(p);
    CHECK(std::abs(b.minkowski_norm() - 1.0) <= 1e-9 * std::max(1.0, b.x0 * b.x0));
    CHECK(b.ball_norm() < 1.0);
    const auto back = from_halfspace(halfspace_coords(p));
    const double s = std::max({1.0, p.a, p.c});
    CHECK(std::abs(back.a - p.a) / s < 1e-12);
    CHECK(std::abs(back.c - p.c) / s < 1e-12);
    CHECK(std::abs(back.b - p.b) / s < 1e-12);
  }
}

TEST_CASE("metric forms at a degenerate point") {
  legendrian::CanonicalForms f;
  f.omega = 0.25;
  f.theta = 0.25;
  const auto m = metric_forms(f);
  CHECK(m.lift.P == 0.125);
  CHECK(m.lift.Q == C(0.0));
  CHECK(m.front.P == 0.125);
  CHECK(m.front.Q == C(0.0625));
  CHECK(m.front(C(0, 1)) == doctest::Approx(0.0));
  CHECK(m.front.min_unit() == doctest::Approx(0.0));

  f.theta = 0.0;
  const auto n = metric_forms(f);
  CHECK(n.front.P == n.lift.P);
  CHECK(n.front.Q == n.lift.Q);
}

TEST_CASE("property: front metric is |omega dz + conj(theta dz)|^2 and at most twice the lift metric") {
  oracle::Rng rng(42);
  for (int k = 0; k < 500; ++k) {
    legendrian::CanonicalForms f;
    f.omega = rng.in_disk(3.0);
    f.theta = rng.in_disk(3.0);
    const auto m = metric_forms(f);
    const C v = rng.in_disk(2.0);
    const double direct = std::norm(f.omega * v + std::conj(f.theta * v));
    CHECK(m.front(v) == doctest::Approx(direct).epsilon(1e-12));
    CHECK(m.front(v) <= 2.0 * m.lift(v) + 1e-12);
    CHECK(m.front(v) >= -1e-12 * m.front.P * std::norm(v));
    const double gap = std::abs(f.omega) - std::abs(f.theta);
    CHECK(m.front.min_unit() == doctest::Approx(gap * gap).epsilon(1e-10));
  }
}

TEST_CASE("Gauss maps and their closed forms") {
  const auto g = gauss_maps(kShear);
  CHECK(std::abs(g.plus.value - C(1.0 / 1.5)) < 1e-15);
  CHECK(g.minus.value == C(0.0));
  const auto inf = gauss_maps(SL2::identity());
  CHECK(inf.plus.infinite);

  const auto d = legendrian::lift(parse_expr("3/2 + z/4"), parse_expr("z/4"));
  oracle::Rng rng(43);
  for (int k = 0; k < 50; ++k) {
    const C z = rng.in_disk(0.9);
    const auto j = d.at(z);
    const auto gm = gauss_maps(legendrian::to_sl2(j));
    CHECK(oracle::rel(gm.plus.value, 1.0 / j.x.value) < 1e-12);
    CHECK(oracle::rel(gm.minus.value, j.y.value / (1.0 + j.x.value * j.y.value)) < 1e-12);
    CHECK(gm.plus.abs() < 1.0);
    CHECK(gm.minus.abs() < 1.0);
  }
}

TEST_CASE("scaling by diag(r, 1/r)") {
  const auto d = legendrian::lift(parse_expr("3/2 + z/4"), parse_expr("z/4"));
  const C z{0.3, -0.2};
  const auto base = gauss_maps(legendrian::to_sl2(d, z));
  const auto same = scale(d, 1.0, z);
  CHECK(same.gauss.plus.value == base.plus.value);
  CHECK(same.gauss.minus.value == base.minus.value);

  const auto half = scale(d, 0.5, z);
  CHECK(half.gauss.plus.value == 0.25 * base.plus.value);
  CHECK(half.gauss.minus.value == 0.25 * base.minus.value);
  // G₊ = 2/3 at z = 0 when X(0) = 3/2.
  CHECK(std::abs(scale(d, 0.5, 0.0).gauss.plus.value - C(1.0 / 6)) < 1e-15);

  oracle::Rng rng(44);
  for (int k = 0; k < 50; ++k) {
    const double r = rng.uniform(0.05, 1.0);
    const C w = rng.in_disk(0.9);
    const auto b = gauss_maps(legendrian::to_sl2(d, w));
    const auto s = scale(d, r, w);
    CHECK(oracle::rel(s.gauss.plus.value, r * r * b.plus.value) < 1e-14);
    CHECK(oracle::rel(s.gauss.minus.value, r * r * b.minus.value) < 1e-14);
  }
  CHECK_THROWS_AS((void)scale(d, 0.0, z), DomainError);
  CHECK_THROWS_AS((void)scale(d, 1.5, z), DomainError);
}

TEST_CASE("property: the lift metric does not change under scaling") {
  const auto d = legendrian::lift(parse_expr("exp(z)"), parse_expr("z/3"));
  oracle::Rng rng(45);
  for (int k = 0; k < 50; ++k) {
    const C z = rng.in_disk(0.9);
    const double r = rng.uniform(0.05, 1.0);
    const auto jet = legendrian::to_sl2_jet(d.at(z));
    const SL2 a = legendrian::maurer_cartan(jet);
    const SL2 b = legendrian::maurer_cartan({scale_matrix(jet.value, r), scale_matrix(jet.deriv, r)});
    CHECK(std::abs(a.a12 - b.a12) <= 1e-14 * std::max(1.0, std::abs(a.a12)));
    CHECK(std::abs(a.a21 - b.a21) <= 1e-14 * std::max(1.0, std::abs(a.a21)));
    const auto s = sample_front(d, z, r);
    const auto u = sample_front(d, z, 1.0);
    CHECK(s.metric_L.P == u.metric_L.P);
  }
}

TEST_CASE("singular field") {
  legendrian::CanonicalForms f;
  f.omega = 1.0;
  f.theta = 0.5;
  f.rho = ExtComplex::finite(0.5);
  CHECK(singular_field(f) == doctest::Approx(-0.75));
  CHECK(singular_value(f) == doctest::Approx(-0.75));
  f.omega = 0.5;
  f.theta = 1.0;
  f.rho = ExtComplex::finite(2.0);
  CHECK(singular_field(f) == doctest::Approx(0.75));
  CHECK(singular_value(f) == doctest::Approx(3.0));
  f.omega = 0.0;
  f.rho = ExtComplex::infinity();
  CHECK(singular_field(f) == 1.0);
  CHECK(singular_value(f) == HUGE_VAL);

  oracle::Rng rng(47);
  for (int k = 0; k < 200; ++k) {
    f.omega = rng.in_disk(2.0);
    f.theta = rng.in_disk(2.0);
    const double rho = std::abs(f.theta / f.omega);
    const double g = singular_field(f);
    CHECK(std::abs(g) <= 1.0);
    CHECK((g < 0.0) == (rho < 1.0));
  }
}

TEST_CASE("horosphere: Y = 0 stays on |w|^2 + (h - 1/2)^2 = 1/4") {
  const auto d = legendrian::lift(parse_expr("3/2 + z/4"), parse_expr("0"));
  oracle::Rng rng(46);
  for (int k = 0; k < 100; ++k) {
    const auto s = sample_front(d, rng.in_disk(0.9));
    const double e = std::norm(s.halfspace.w) + (s.halfspace.h - 0.5) * (s.halfspace.h - 0.5);
    CHECK(std::abs(e - 0.25) < 1e-12);
  }
}
