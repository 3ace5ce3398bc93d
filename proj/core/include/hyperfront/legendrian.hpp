#pragma once

#include "hyperfront/holo/expr.hpp"
#include "hyperfront/holo/map.hpp"
#include "hyperfront/sl2.hpp"
#include "hyperfront/types.hpp"

namespace hyperfront::legendrian {

/// Tolerances attached to the Legendrian invariants.
inline constexpr double kContactTol = 1e-10;
inline constexpr double kOffDiagonalTol = 1e-8;
inline constexpr double kDetTol = 1e-12;

enum class WSource {
  /// W = −∫_0^z Y dX by quadrature.
  Lifted,
  /// W supplied directly; the contact condition is not guaranteed.
  Direct,
};

/// Jets of (X, Y, W) at one parameter value.
struct LegendrianJets {
  Complex z{};
  Jet x;
  Jet y;
  Jet w;
};

/// The triple (X, Y, W) of holomorphic maps with, for lifted data, dW = −Y dX.
class LegendrianData {
 public:
  LegendrianData(holo::Map x, holo::Map y, holo::Map w, double tol, WSource source);

  [[nodiscard]] const holo::Map& x() const noexcept { return x_; }
  [[nodiscard]] const holo::Map& y() const noexcept { return y_; }
  [[nodiscard]] const holo::Map& w() const noexcept { return w_; }
  [[nodiscard]] double tol() const noexcept { return tol_; }
  [[nodiscard]] WSource source() const noexcept { return source_; }

  [[nodiscard]] LegendrianJets at(Complex z) const;

  /// Same X and Y with W replaced by w.
  [[nodiscard]] LegendrianData with_w(holo::Map w) const;

 private:
  holo::Map x_, y_, w_;
  double tol_;
  WSource source_;
};

/// Coefficients of the canonical forms ω = omega dz, θ = theta dz and their ratio.
struct CanonicalForms {
  Complex omega{};
  Complex theta{};
  ExtComplex rho;
  /// False where omega and theta both vanish.
  bool immersion = true;
};

/// Legendrian lift: W(z) = −∫_0^z Y(ζ)X′(ζ) dζ.
[[nodiscard]] LegendrianData lift(holo::Map x, holo::Map y,
                                  double tol = holo::kDefaultQuadratureTol);
[[nodiscard]] LegendrianData lift(const holo::HoloExpr& x, const holo::HoloExpr& y,
                                  double tol = holo::kDefaultQuadratureTol);

/// |W′ + Y X′|, the pull-back of dZ + Y dX.
[[nodiscard]] double contact_residual(const LegendrianJets& j) noexcept;

/// Λ = ((e^{−W}, Y e^{W}), (X e^{−W}, (1+XY) e^{W})) and its derivative,
/// composed analytically from the jets of X, Y, W.
/// Throws OverflowError when e^{±W} is not representable.
[[nodiscard]] SL2Jet to_sl2_jet(const LegendrianJets& j);
[[nodiscard]] SL2 to_sl2(const LegendrianJets& j);
[[nodiscard]] SL2 to_sl2(const LegendrianData& d, Complex z);

/// Λ⁻¹Λ′ with the inverse taken by the adjugate.
[[nodiscard]] SL2 maurer_cartan(const SL2Jet& lambda) noexcept;

/// ω̂ = e^{−2W}X′, θ̂ = e^{2W}(Y′ − Y²X′), ρ = θ̂/ω̂.
[[nodiscard]] CanonicalForms canonical_forms(const LegendrianJets& j);
[[nodiscard]] CanonicalForms canonical_forms(const LegendrianData& d, Complex z);

/// Largest modulus of the diagonal of Λ⁻¹Λ′, taken from the matrix jet.
[[nodiscard]] double legendrian_residual(const LegendrianJets& j);
[[nodiscard]] double legendrian_residual(const LegendrianData& d, Complex z);

/// Λ′ by a fourth-order central difference of to_sl2 with step h along
/// the real axis. Used to cross-check the analytic jet and the quadrature
/// values of W against each other.
[[nodiscard]] SL2 sl2_derivative_fd(const LegendrianData& d, Complex z, double h = 1e-3);

}  // namespace hyperfront::legendrian
