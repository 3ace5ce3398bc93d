#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "hyperfront/error.hpp"
#include "hyperfront/holo/expr.hpp"
#include "hyperfront/types.hpp"

namespace hyperfront::holo {

inline constexpr double kDefaultQuadratureTol = 1e-12;
inline constexpr int kMaxQuadratureDepth = 40;

/// Piecewise-linear path inside the open unit disk.
class PathPolyline {
 public:
  /// Throws DomainError unless there are at least two vertices, all with
  /// |v| < 1, and no two consecutive vertices coincide.
  explicit PathPolyline(std::vector<Complex> vertices);

  static PathPolyline segment(Complex from, Complex to) { return PathPolyline({from, to}); }

  [[nodiscard]] std::span<const Complex> vertices() const noexcept { return vertices_; }
  [[nodiscard]] std::size_t segment_count() const noexcept { return vertices_.size() - 1; }
  [[nodiscard]] Complex front() const noexcept { return vertices_.front(); }
  [[nodiscard]] Complex back() const noexcept { return vertices_.back(); }
  [[nodiscard]] double euclidean_length() const noexcept;

  /// Point at normalized arc-length parameter s in [0, 1].
  [[nodiscard]] Complex at_arclength(double s) const noexcept;

  /// This path followed by `tail`; tail must start where this path ends.
  [[nodiscard]] PathPolyline concat(const PathPolyline& tail) const;

 private:
  std::vector<Complex> vertices_;
};

namespace detail {

template <class T, class F>
T simpson_step(F& f, double a, double b, T fa, T fm, T fb, T whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const T flm = f(lm);
  const T frm = f(rm);
  const T left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const T right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const T refined = left + right;
  const double diff = std::abs(refined - whole);
  // Roundoff floor: once the two estimates agree to a few ulps of the
  // value, further bisection cannot improve the estimate.
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(refined);
  if (diff <= 15.0 * tol || diff <= floor) return refined + (refined - whole) / 15.0;
  if (depth <= 0) {
    throw QuadratureError("adaptive Simpson did not reach tolerance within the depth budget");
  }
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson rule for ∫_a^b f(t) dt with absolute tolerance `tol`.
/// T is double or Complex. Throws QuadratureError when the recursion depth
/// budget is exhausted or the integrand is not finite.
template <class T, class F>
T adaptive_simpson(F&& f, double a, double b, double tol, int max_depth = kMaxQuadratureDepth) {
  auto checked = [&f](double t) -> T {
    const T v = f(t);
    if constexpr (std::is_same_v<T, Complex>) {
      if (!is_finite(v)) throw QuadratureError("singular integrand on path");
    } else {
      if (!std::isfinite(v)) throw QuadratureError("singular integrand on path");
    }
    return v;
  };
  if (!(tol > 0.0)) throw QuadratureError("quadrature tolerance must be positive");
  if (a == b) return T{};
  const T fa = checked(a);
  const T fb = checked(b);
  const T fm = checked(0.5 * (a + b));
  const T whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_step(checked, a, b, fa, fm, fb, whole, tol, max_depth);
}

using ComplexFn = std::function<Complex(Complex)>;

/// ∫_path f(ζ) dζ. The tolerance is split evenly across segments.
[[nodiscard]] Complex integrate_along(const ComplexFn& f, const PathPolyline& path,
                                      double tol = kDefaultQuadratureTol);
[[nodiscard]] Complex integrate_along(const HoloExpr& f, const PathPolyline& path,
                                      double tol = kDefaultQuadratureTol);

/// ∫_0^z f(ζ) dζ along the straight segment from the origin.
[[nodiscard]] Complex primitive(const ComplexFn& f, Complex z, double tol = kDefaultQuadratureTol);
[[nodiscard]] Complex primitive(const HoloExpr& f, Complex z, double tol = kDefaultQuadratureTol);

}  // namespace hyperfront::holo
