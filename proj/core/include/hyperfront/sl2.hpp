#pragma once

#include "hyperfront/types.hpp"

namespace hyperfront {

/// 2×2 complex matrix ((a11, a12), (a21, a22)), normally of determinant one.
struct SL2 {
  Complex a11{1.0, 0.0};
  Complex a12{};
  Complex a21{};
  Complex a22{1.0, 0.0};

  static SL2 identity() noexcept { return {}; }
  static SL2 diag(Complex d1, Complex d2) noexcept { return {d1, Complex{}, Complex{}, d2}; }

  [[nodiscard]] Complex det() const noexcept { return a11 * a22 - a12 * a21; }

  /// Inverse by the adjugate; exact in structure when det = 1.
  [[nodiscard]] SL2 adjugate() const noexcept { return {a22, -a12, -a21, a11}; }

  /// Conjugate transpose.
  [[nodiscard]] SL2 star() const noexcept {
    return {std::conj(a11), std::conj(a21), std::conj(a12), std::conj(a22)};
  }

  /// Scale of the entries, used to make determinant tolerances relative.
  [[nodiscard]] double det_scale() const noexcept {
    return std::abs(a11 * a22) + std::abs(a12 * a21);
  }

  [[nodiscard]] bool is_finite() const noexcept {
    return hyperfront::is_finite(a11) && hyperfront::is_finite(a12) &&
           hyperfront::is_finite(a21) && hyperfront::is_finite(a22);
  }

  friend SL2 operator*(const SL2& a, const SL2& b) noexcept {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
  }

  friend SL2 operator+(const SL2& a, const SL2& b) noexcept {
    return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
  }

  friend SL2 operator-(const SL2& a, const SL2& b) noexcept {
    return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
  }

  friend SL2 operator*(Complex s, const SL2& a) noexcept {
    return {s * a.a11, s * a.a12, s * a.a21, s * a.a22};
  }
};

/// A matrix-valued curve at a point together with its z-derivative.
struct SL2Jet {
  SL2 value;
  SL2 deriv{Complex{}, Complex{}, Complex{}, Complex{}};
};

}  // namespace hyperfront
