#pragma once

#include <functional>
#include <memory>

#include "hyperfront/holo/expr.hpp"
#include "hyperfront/holo/quadrature.hpp"
#include "hyperfront/types.hpp"

namespace hyperfront::holo {

/// An evaluable holomorphic map: anything that produces a Jet at a point.
///
/// Three sources are supported: a parsed expression, the primitive
/// ∫_0^z of an integrand (value by quadrature, derivative exact), and an
/// arbitrary jet function. Maps are cheap to copy and safe to evaluate
/// from several threads.
class Map {
 public:
  using JetFn = std::function<Jet(Complex)>;

  static Map from_expr(HoloExpr f);
  static Map primitive_of(ComplexFn integrand, double tol = kDefaultQuadratureTol);
  static Map from_jet_fn(JetFn fn);
  static Map constant(Complex c);

  [[nodiscard]] Jet jet(Complex z) const;
  [[nodiscard]] Complex operator()(Complex z) const { return jet(z).value; }
  [[nodiscard]] Complex derivative(Complex z) const { return jet(z).deriv; }

  [[nodiscard]] bool is_primitive() const noexcept;

 private:
  struct Impl;
  explicit Map(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

}  // namespace hyperfront::holo
