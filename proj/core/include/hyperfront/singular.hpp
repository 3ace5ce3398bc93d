#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hyperfront/legendrian.hpp"
#include "hyperfront/types.hpp"

namespace hyperfront::front {

/// Required accuracy of ||ρ|²−1| at refined contour vertices.
inline constexpr double kSingularVertexTol = 1e-9;

/// n × n nodes spanning [−radius, radius]²; only cells whose four corners
/// lie in the closed disk of that radius are contoured.
struct CartesianGrid {
  double radius = 0.9;
  int n = 65;

  [[nodiscard]] Complex node(int i, int j) const noexcept {
    const double step = 2.0 * radius / (n - 1);
    return {-radius + step * i, -radius + step * j};
  }
  [[nodiscard]] bool inside(int i, int j) const noexcept {
    return std::abs(node(i, j)) <= radius;
  }
};

/// Zero set of the singular field, as polylines in the parameter disk.
struct SingularCurve {
  std::vector<std::vector<Complex>> polylines;
  /// |ρ|²−1 at each vertex, parallel to `polylines`.
  std::vector<std::vector<double>> residuals;
  std::size_t vertex_count = 0;
  std::size_t cells = 0;
  std::size_t crossed_cells = 0;
  /// Cells with a corner where ρ = ∞ (contoured through the reciprocal field).
  std::size_t infinite_cells = 0;
  /// Every grid node already satisfies ||ρ|²−1| ≤ kSingularVertexTol.
  bool entire_domain_singular = false;
  double max_vertex_residual = 0.0;

  [[nodiscard]] bool empty() const noexcept { return polylines.empty(); }
};

/// Per-point evaluation used by the contouring: the sign-consistent field
/// that is bisected and the residual |ρ|²−1 that is reported.
struct FieldSample {
  double field = 0.0;
  double residual = 0.0;
  bool infinite = false;
};

using FieldFn = std::function<FieldSample(Complex)>;

/// Marching squares on the grid with saddle cells resolved by the cell-centre
/// value, every crossing refined by bisection along its grid edge to machine
/// resolution, and segments stitched into polylines in grid order.
[[nodiscard]] SingularCurve contour_zero_set(const FieldFn& field, const CartesianGrid& grid,
                                             std::size_t threads = 1);

/// The singular set {|ρ| = 1} of the front built from d.
[[nodiscard]] SingularCurve singular_set(const legendrian::LegendrianData& d,
                                         const CartesianGrid& grid, std::size_t threads = 1);

/// Euclidean distance from p to the nearest point of the curve (polylines
/// as segments; isolated vertices count as points). +inf when empty.
[[nodiscard]] double distance_to(const SingularCurve& curve, Complex p) noexcept;

}  // namespace hyperfront::front
