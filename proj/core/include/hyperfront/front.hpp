#pragma once

#include <array>
#include <utility>

#include "hyperfront/legendrian.hpp"
#include "hyperfront/metric.hpp"
#include "hyperfront/sl2.hpp"
#include "hyperfront/types.hpp"

namespace hyperfront::front {

inline constexpr double kPointTol = 1e-9;
inline constexpr double kGaussClosedFormTol = 1e-12;

/// Point of H³ as the positive Hermitian matrix ((a, b), (b̄, c)) of determinant one.
struct HermitianPoint {
  double a = 1.0;
  double c = 1.0;
  Complex b{};

  [[nodiscard]] double det() const noexcept { return a * c - std::norm(b); }
};

/// Upper half-space coordinates: the point sits over w at height h.
struct HalfSpace {
  Complex w{};
  double h = 1.0;
};

/// Hyperboloid coordinates and their Poincaré ball image.
struct BallPoint {
  double x0 = 1.0;
  std::array<double, 3> hyperboloid{};  // (x1, x2, x3)
  std::array<double, 3> ball{};

  [[nodiscard]] double minkowski_norm() const noexcept {
    return x0 * x0 - hyperboloid[0] * hyperboloid[0] - hyperboloid[1] * hyperboloid[1] -
           hyperboloid[2] * hyperboloid[2];
  }
  [[nodiscard]] double ball_norm() const noexcept {
    return std::sqrt(ball[0] * ball[0] + ball[1] * ball[1] + ball[2] * ball[2]);
  }
};

struct GaussMaps {
  ExtComplex plus;
  ExtComplex minus;
};

struct MetricPair {
  MetricForm lift;   // ds²_Λ
  MetricForm front;  // ds²_f
};

/// Λ Λ*. Throws InvariantError if the result is not a point of H³ within kPointTol.
[[nodiscard]] HermitianPoint project(const SL2& lambda);

/// (A/C, B/D) on the Riemann sphere.
[[nodiscard]] GaussMaps gauss_maps(const SL2& lambda) noexcept;

/// w = b/c, h = 1/c. Throws DomainError when c ≤ 0.
[[nodiscard]] HalfSpace halfspace_coords(const HermitianPoint& p);

/// Inverse of halfspace_coords: (1/h)((h²+|w|², w), (w̄, 1)).
[[nodiscard]] HermitianPoint from_halfspace(const HalfSpace& hs) noexcept;

/// x0 = (a+c)/2, x1 = Re b, x2 = Im b, x3 = (a−c)/2; ball = x/(1+x0).
/// Throws InvariantError when the Minkowski norm is off by more than kPointTol.
[[nodiscard]] BallPoint ball_coords(const HermitianPoint& p);

/// ds²_Λ = |ω|²+|θ|² and ds²_f = |ω + θ̄|² as MetricForms.
[[nodiscard]] MetricPair metric_forms(const legendrian::CanonicalForms& forms) noexcept;

/// Λ_r = diag(r, 1/r)·Λ and its hyperbolic Gauss maps.
struct Scaled {
  SL2 lambda;
  GaussMaps gauss;
};

[[nodiscard]] SL2 scale_matrix(const SL2& lambda, double r) noexcept;
[[nodiscard]] Scaled scale(const legendrian::LegendrianData& d, double r, Complex z);

/// Sign-consistent singular field: |ρ|²−1 where |ρ| ≤ 1 and 1 − |1/ρ|²
/// where |ρ| > 1. Zero exactly on {|ρ| = 1}, bounded by 1 in modulus.
[[nodiscard]] double singular_field(const legendrian::CanonicalForms& forms) noexcept;

/// |ρ|² − 1, +inf at ρ = ∞.
[[nodiscard]] double singular_value(const legendrian::CanonicalForms& forms) noexcept;

/// Everything the pipeline records about the front at one parameter value.
struct FrontSample {
  Complex z{};
  legendrian::LegendrianJets jets;
  SL2 lambda;  // scaled lift Λ_r
  HermitianPoint point;
  HalfSpace halfspace;
  BallPoint ball;
  GaussMaps gauss;           // of Λ_r
  GaussMaps gauss_unscaled;  // of Λ
  legendrian::CanonicalForms forms;
  MetricForm metric_f;
  MetricForm metric_L;
  double singular_value = 0.0;
  double singular_field = 0.0;
};

/// Evaluates the whole chain at z for the front f_r = Λ_r Λ_r*.
[[nodiscard]] FrontSample sample_front(const legendrian::LegendrianData& d, Complex z,
                                       double r = 1.0);

}  // namespace hyperfront::front
