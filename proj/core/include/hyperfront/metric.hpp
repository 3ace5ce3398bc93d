#pragma once

#include "hyperfront/types.hpp"

namespace hyperfront {

/// Pointwise quadratic form ds² = P|dz|² + 2Re(Q dz²) on the parameter disk.
struct MetricForm {
  double P = 0.0;
  Complex Q{};

  /// Squared length of the tangent vector v.
  [[nodiscard]] double operator()(Complex v) const noexcept;

  /// Smallest value of the form on unit vectors, P − 2|Q|.
  [[nodiscard]] double min_unit() const noexcept;
  /// Largest value of the form on unit vectors, P + 2|Q|.
  [[nodiscard]] double max_unit() const noexcept;

  [[nodiscard]] bool is_positive_semidefinite(double tol = 0.0) const noexcept {
    return min_unit() >= -tol;
  }
};

}  // namespace hyperfront
