#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "hyperfront/holo/expr.hpp"
#include "hyperfront/holo/map.hpp"
#include "hyperfront/metric.hpp"
#include "hyperfront/types.hpp"

namespace hyperfront::nullcurve {

/// Weierstrass data (g, η dz) of a null curve; `eta` is the coefficient of dz.
struct WeierstrassData {
  holo::HoloExpr g;
  holo::HoloExpr eta;
};

enum class Provenance { FromWeierstrass, Direct };

/// Residual bound for Weierstrass-generated curves.
inline constexpr double kNullResidualTol = 1e-12;

/// Holomorphic curve F = (X, Y, Z) into C³.
///
/// Curves built from Weierstrass data are null by construction. Direct
/// curves are accepted as given; their null residual is reported but not
/// enforced.
class NullCurve {
 public:
  NullCurve(holo::Map x, holo::Map y, holo::Map z, Provenance provenance,
            std::optional<WeierstrassData> data = std::nullopt);

  [[nodiscard]] const holo::Map& x() const noexcept { return x_; }
  [[nodiscard]] const holo::Map& y() const noexcept { return y_; }
  [[nodiscard]] const holo::Map& z() const noexcept { return z_; }
  [[nodiscard]] Provenance provenance() const noexcept { return provenance_; }
  [[nodiscard]] const std::optional<WeierstrassData>& weierstrass() const noexcept { return data_; }

 private:
  holo::Map x_, y_, z_;
  Provenance provenance_;
  std::optional<WeierstrassData> data_;
};

/// X, Y, Z as primitives (basepoint 0) of ½(1−g²)η, (i/2)(1+g²)η, gη.
[[nodiscard]] NullCurve from_weierstrass(const WeierstrassData& w,
                                         double tol = holo::kDefaultQuadratureTol);

[[nodiscard]] NullCurve direct(holo::HoloExpr x, holo::HoloExpr y, holo::HoloExpr z);

/// |X′² + Y′² + Z′²| at z.
[[nodiscard]] double null_residual(const NullCurve& c, Complex z);

/// Pull-back of the Hermitian metric of C³: P = |X′|²+|Y′|²+|Z′|², Q = 0.
///
/// For Weierstrass curves P is evaluated from the closed form
/// ½(1+|g|²)²|η|², which agrees with the component sum on null curves.
[[nodiscard]] MetricForm induced_metric(const NullCurve& c, Complex z);

/// dσ² = |dX|² + |dY|², the metric of the projection (X, Y).
[[nodiscard]] MetricForm sigma_metric(const NullCurve& c, Complex z);

/// Hypothesis check for 1 < |X| < 2, |Y| < 1/3 over a sample set.
struct XYBoundReport {
  std::size_t samples = 0;
  std::size_t violations = 0;
  std::size_t x_violations = 0;
  std::size_t y_violations = 0;
  double min_abs_x = 0.0;
  double max_abs_x = 0.0;
  double max_abs_y = 0.0;
  /// Indices (into the sample span) of the first violating samples, capped.
  std::vector<std::size_t> first_violations;
  /// Parameter-space bounding box of all violations: {re_min, re_max, im_min, im_max}.
  std::optional<std::array<double, 4>> violation_box;

  [[nodiscard]] bool holds() const noexcept { return samples > 0 && violations == 0; }
};

[[nodiscard]] XYBoundReport check_xy_bounds(std::span<const Complex> x_values,
                                            std::span<const Complex> y_values,
                                            std::span<const Complex> samples);

}  // namespace hyperfront::nullcurve
