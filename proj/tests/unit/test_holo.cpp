#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "hyperfront/error.hpp"
#include "hyperfront/holo/expr.hpp"
#include "hyperfront/holo/map.hpp"
#include "hyperfront/holo/quadrature.hpp"
#include "hyperfront/parallel.hpp"
#include "oracles.hpp"

using namespace hyperfront;
using namespace hyperfront::holo;
using oracle::C;

TEST_CASE("parse and evaluate simple expressions") {
  CHECK(std::abs(parse_expr("z^2 + 1")(2.0) - C(5.0)) < 1e-15);
  CHECK(std::abs(parse_expr("exp(z)")(0.0) - C(1.0)) < 1e-15);
  CHECK(std::abs(parse_expr("3/2 + z/4")(0.5) - C(1.625)) < 1e-15);
  CHECK(std::abs(parse_expr("i*i")(0.3) - C(-1.0)) < 1e-15);
  CHECK(std::abs(parse_expr("2.5e-1*z")(4.0) - C(1.0)) < 1e-15);
  CHECK(std::abs(parse_expr("z^-2")(2.0) - C(0.25)) < 1e-15);
  CHECK(std::abs(parse_expr("z^0")(7.0) - C(1.0)) < 1e-15);
}

TEST_CASE("unary minus binds to the base, so -z^2 is (-z)^2") {
  CHECK(std::abs(parse_expr("-z^2")(C(0.0, 1.0)) - C(-1.0)) < 1e-15);
  CHECK(std::abs(parse_expr("0-z^2")(C(0.0, 1.0)) - C(1.0)) < 1e-15);
}

TEST_CASE("jets of known functions") {
  const auto j1 = eval_jet(parse_expr("z^2"), C(1.0, 1.0));
  CHECK(std::abs(j1.value - C(0.0, 2.0)) < 1e-15);
  CHECK(std::abs(j1.deriv - C(2.0, 2.0)) < 1e-15);
  const auto j2 = eval_jet(parse_expr("exp(z)"), 0.0);
  CHECK(std::abs(j2.value - C(1.0)) < 1e-15);
  CHECK(std::abs(j2.deriv - C(1.0)) < 1e-15);
  const auto j3 = eval_jet(parse_expr("3/2 + z/4"), 0.5);
  CHECK(std::abs(j3.value - C(1.625)) < 1e-15);
  CHECK(std::abs(j3.deriv - C(0.25)) < 1e-15);
}

TEST_CASE("constant subtrees are folded") {
  CHECK(parse_expr("3/2").kind() == HoloExpr::Kind::Constant);
  CHECK(parse_expr("exp(0)*2").kind() == HoloExpr::Kind::Constant);
  CHECK(parse_expr("z*(1+1)").rhs().kind() == HoloExpr::Kind::Constant);
}

TEST_CASE("parse errors carry a position") {
  for (const char* bad : {"z +", "foo(z)", "z^1.5", "(z", "z)", "", "exp z", "z^", "2**z", "z^2e1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS((void)parse_expr(bad), ParseError);
  }
  try {
    (void)parse_expr("z + q");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS((void)parse_expr("1/z")(0.0), EvalError);
  try {
    (void)parse_expr("z^-1")(0.0);
    FAIL("expected EvalError");
  } catch (const EvalError& e) {
    CHECK(e.kind() == EvalError::Kind::DivisionByZero);
  }
  try {
    (void)parse_expr("exp(z)")(800.0);
    FAIL("expected EvalError");
  } catch (const EvalError& e) {
    CHECK(e.kind() == EvalError::Kind::NonFinite);
  }
}

namespace {

// Random expression string from the grammar, bounded depth.
std::string random_expr(oracle::Rng& rng, int depth) {
  const double u = rng.uniform();
  if (depth == 0 || u < 0.25) {
    const int leaf = static_cast<int>(rng.uniform() * 4);
    if (leaf == 0) return "z";
    if (leaf == 1) return "i";
    if (leaf == 2) return std::to_string(static_cast<int>(rng.uniform() * 9) + 1);
    return "0.5";
  }
  const int op = static_cast<int>(rng.uniform() * 7);
  const std::string a = random_expr(rng, depth - 1);
  switch (op) {
    case 0: return a + " + " + random_expr(rng, depth - 1);
    case 1: return a + " - " + random_expr(rng, depth - 1);
    case 2: return "(" + a + ")*(" + random_expr(rng, depth - 1) + ")";
    case 3: return "(" + a + ")/(2 + z)";
    case 4: return "(" + a + ")^" + std::to_string(static_cast<int>(rng.uniform() * 4));
    case 5: return "exp(" + a + "/4)";
    default: return "-(" + a + ")";
  }
}

}  // namespace

TEST_CASE("property: print/parse round trip is structurally stable") {
  oracle::Rng rng(11);
  for (int k = 0; k < 300; ++k) {
    const std::string s = random_expr(rng, 4);
    CAPTURE(s);
    const HoloExpr e = parse_expr(s);
    const HoloExpr again = parse_expr(to_string(e));
    CHECK(again == e);
    CHECK(to_string(again) == to_string(e));
  }
}

TEST_CASE("property: jet derivative matches a central difference and is complex-differentiable") {
  oracle::Rng rng(12);
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    const std::string s = random_expr(rng, 3);
    CAPTURE(s);
    const HoloExpr e = parse_expr(s);
    const C z = rng.in_disk(0.8);
    const double h = 1e-5;
    Jet j;
    C fx, fy;
    try {
      j = eval_jet(e, z);
      fx = (e(z + h) - e(z - h)) / (2.0 * h);
      fy = (e(z + C(0, h)) - e(z - C(0, h))) / (C(0, 2.0 * h));
    } catch (const EvalError&) {
      continue;
    }
    const double scale = std::max({1.0, std::abs(j.deriv), std::abs(j.value)});
    CHECK(std::abs(fx - j.deriv) / scale < 1e-6);
    CHECK(std::abs(fy - j.deriv) / scale < 1e-6);
    ++checked;
  }
  CHECK(checked > 150);
}

TEST_CASE("line integrals against antiderivatives") {
  CHECK(std::abs(integrate_along(parse_expr("z"), PathPolyline::segment(0.0, 0.999)) -
                 C(0.999 * 0.999 / 2)) < 1e-12);
  CHECK(std::abs(integrate_along(parse_expr("z/16"), PathPolyline::segment(0.0, 0.5)) -
                 C(1.0 / 128)) < 1e-12);
  const PathPolyline straight({0.0, C(0, 0.5)});
  const PathPolyline bent({0.0, C(0.3, 0.2), C(-0.2, 0.4), C(0, 0.5)});
  const C a = integrate_along(parse_expr("z^2"), straight);
  const C b = integrate_along(parse_expr("z^2"), bent);
  CHECK(std::abs(a - b) <= 2 * kDefaultQuadratureTol);
  CHECK(std::abs(a - C(0, -0.125) / 3.0) < 1e-12);
}

TEST_CASE("primitive from the origin") {
  CHECK(std::abs(primitive(parse_expr("0"), C(0.2, 0.3))) == 0.0);
  CHECK(std::abs(primitive(parse_expr("1"), C(0.3, 0.4)) - C(0.3, 0.4)) < 1e-15);
  CHECK(std::abs(primitive(parse_expr("z/16"), 0.5) - C(0.0078125)) < 1e-14);
  CHECK(primitive(parse_expr("z"), 0.0) == C(0.0));
  CHECK_THROWS_AS((void)primitive(parse_expr("z"), 1.0), DomainError);
  CHECK_THROWS_AS((void)primitive(parse_expr("1/(z - 1/2)"), 0.75), QuadratureError);
}

TEST_CASE("property: primitive of exp agrees with an independent quadrature") {
  oracle::Rng rng(13);
  const auto f = parse_expr("exp(2*z)*z");
  for (int k = 0; k < 40; ++k) {
    const C z = rng.in_disk(0.95);
    const C want = oracle::segment_integral([&](C w) { return std::exp(2.0 * w) * w; }, 0.0, z);
    CHECK(std::abs(primitive(f, z) - want) < 1e-12);
  }
}

TEST_CASE("real adaptive Simpson") {
  const double v = adaptive_simpson<double>([](double t) { return std::sin(t); }, 0.0, M_PI, 1e-13);
  CHECK(std::abs(v - 2.0) < 1e-12);
  CHECK(adaptive_simpson<double>([](double) { return 1.0; }, 1.0, 1.0, 1e-12) == 0.0);
  CHECK_THROWS_AS(
      (void)adaptive_simpson<double>([](double t) { return 1.0 / t; }, 0.0, 1.0, 1e-12),
      QuadratureError);
}

TEST_CASE("polyline validation and geometry") {
  CHECK_THROWS_AS(PathPolyline({C(0.1)}), DomainError);
  CHECK_THROWS_AS(PathPolyline({C(0.0), C(1.0)}), DomainError);
  CHECK_THROWS_AS(PathPolyline({C(0.1), C(0.1)}), DomainError);
  const PathPolyline p({0.0, 0.3, C(0.3, 0.4)});
  CHECK(p.segment_count() == 2);
  CHECK(std::abs(p.euclidean_length() - 0.7) < 1e-15);
  CHECK(std::abs(p.at_arclength(0.5 / 0.7) - C(0.3, 0.2)) < 1e-15);
  CHECK(p.at_arclength(10.0) == p.back());
  const auto q = p.concat(PathPolyline({C(0.3, 0.4), C(0.0, 0.4)}));
  CHECK(q.segment_count() == 3);
}

TEST_CASE("Map primitive: derivative is the integrand, values are memoized consistently") {
  const auto m = Map::primitive_of([](Complex z) { return z * z; });
  CHECK(m.is_primitive());
  const C z{0.3, -0.2};
  CHECK(std::abs(m(z) - z * z * z / 3.0) < 1e-14);
  CHECK(m.derivative(z) == z * z);
  CHECK(m(z) == m(z));
  CHECK_FALSE(Map::from_expr(parse_expr("z")).is_primitive());
  CHECK(Map::constant(C(2.0)).derivative(0.4) == C(0.0));
}

TEST_CASE("property: concurrent primitive evaluation equals serial evaluation") {
  const auto integrand = [](Complex z) { return std::exp(z) / (2.0 + z); };
  const auto serial_map = Map::primitive_of(integrand);
  const auto shared = Map::primitive_of(integrand);
  oracle::Rng rng(14);
  std::vector<C> pts(512);
  for (auto& p : pts) p = rng.in_disk(0.9);
  std::vector<C> par(pts.size());
  parallel_for(pts.size(), 8, [&](std::size_t k) { par[k] = shared(pts[k % 64]); });
  for (std::size_t k = 0; k < pts.size(); ++k) CHECK(par[k] == serial_map(pts[k % 64]));
}

TEST_CASE("parallel_for rethrows the lowest failing index") {
  try {
    parallel_for(100, 8, [](std::size_t k) {
      if (k == 17 || k == 60) throw std::runtime_error(std::to_string(k));
    });
    FAIL("expected exception");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "17");
  }
}
