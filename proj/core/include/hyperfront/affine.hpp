#pragma once

#include <array>
#include <span>

#include "hyperfront/legendrian.hpp"
#include "hyperfront/metric.hpp"
#include "hyperfront/types.hpp"

namespace hyperfront::affine {

inline constexpr double kRouteTol = 1e-10;

/// One point of the improper affine front in C × R ≅ R³ with the
/// coefficient of dτ² = |dX|² + |dY|².
struct AffineFrontSample {
  Complex z{};
  Complex p{};     // X + Ȳ
  double s = 0.0;  // ½(|X|²−|Y|²) + Re(XY + 2W)
  double tau_P = 0.0;

  /// (Re p, Im p, s).
  [[nodiscard]] std::array<double, 3> position() const noexcept { return {p.real(), p.imag(), s}; }
  [[nodiscard]] double norm() const noexcept { return std::sqrt(std::norm(p) + s * s); }
};

[[nodiscard]] AffineFrontSample improper_affine_front(const legendrian::LegendrianJets& j) noexcept;
[[nodiscard]] AffineFrontSample improper_affine_front(const legendrian::LegendrianData& d,
                                                      Complex z);

/// Height s evaluated through a fresh quadrature of ∫_0^z Y dX instead of W:
/// ½(|X|²−|Y|²) + Re(XY − 2∫Y dX).
[[nodiscard]] double height_by_integral(const legendrian::LegendrianData& d, Complex z);

/// dτ² as a MetricForm.
[[nodiscard]] MetricForm tau_metric(const legendrian::LegendrianJets& j) noexcept;

struct MetricBound {
  double lhs = 0.0;  // (|Y|²+1)|X′|² + |Y′|², the ds²_F coefficient
  double rhs = 0.0;  // (B²+1)(|X′|² + |Y′|²)
};

/// Comparison of ds²_F with dτ² given a bound B ≥ sup |Y|.
[[nodiscard]] MetricBound affine_metric_bound(const legendrian::LegendrianJets& j,
                                              double y_bound) noexcept;

/// Bound 2M + M²/2 + M² + 2M′ on the position norm, where M bounds |X| and
/// |Y| and M′ bounds |W| over the samples.
[[nodiscard]] double position_bound(double m, double m_w) noexcept;

}  // namespace hyperfront::affine
