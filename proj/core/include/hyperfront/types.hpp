#pragma once

#include <cmath>
#include <complex>

namespace hyperfront {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

[[nodiscard]] inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// Value and first complex derivative of a holomorphic map at a point.
struct Jet {
  Complex value{};
  Complex deriv{};
};

/// A point of the Riemann sphere: a finite complex value or infinity.
///
/// `ill_conditioned` is set when the value came from a quotient whose
/// denominator fell below the sphere cutoff but was not exactly zero.
struct ExtComplex {
  Complex value{};
  bool infinite = false;
  bool ill_conditioned = false;

  static ExtComplex finite(Complex v) noexcept { return {v, false, false}; }
  static ExtComplex infinity(bool ill = false) noexcept { return {Complex{}, true, ill}; }

  /// |value|, or +inf at the point at infinity.
  [[nodiscard]] double abs() const noexcept {
    return infinite ? HUGE_VAL : std::abs(value);
  }
};

/// Denominator modulus below which a sphere-valued quotient is reported as infinity.
inline constexpr double kSphereCutoff = 1e-6;

/// num/den on the Riemann sphere with the library's denominator cutoff.
[[nodiscard]] inline ExtComplex sphere_quotient(Complex num, Complex den) noexcept {
  const double d = std::abs(den);
  if (d < kSphereCutoff) return ExtComplex::infinity(d != 0.0);
  return ExtComplex::finite(num / den);
}

}  // namespace hyperfront
