#include "hyperfront/holo/quadrature.hpp"

#include <string>

namespace hyperfront::holo {

PathPolyline::PathPolyline(std::vector<Complex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw DomainError("path needs at least two vertices");
  for (std::size_t k = 0; k < vertices_.size(); ++k) {
    if (!is_finite(vertices_[k]) || !(std::abs(vertices_[k]) < 1.0)) {
      throw DomainError("path vertex " + std::to_string(k) + " is outside the open unit disk");
    }
    if (k > 0 && vertices_[k] == vertices_[k - 1]) {
      throw DomainError("path vertices " + std::to_string(k - 1) + " and " + std::to_string(k) +
                        " coincide");
    }
  }
}

double PathPolyline::euclidean_length() const noexcept {
  double len = 0.0;
  for (std::size_t k = 1; k < vertices_.size(); ++k) len += std::abs(vertices_[k] - vertices_[k - 1]);
  return len;
}

Complex PathPolyline::at_arclength(double s) const noexcept {
  if (s <= 0.0) return vertices_.front();
  if (s >= 1.0) return vertices_.back();
  double remaining = s * euclidean_length();
  for (std::size_t k = 1; k < vertices_.size(); ++k) {
    const Complex a = vertices_[k - 1];
    const Complex b = vertices_[k];
    const double seg = std::abs(b - a);
    if (remaining <= seg) return a + (remaining / seg) * (b - a);
    remaining -= seg;
  }
  return vertices_.back();
}

PathPolyline PathPolyline::concat(const PathPolyline& tail) const {
  if (tail.front() != back()) throw DomainError("concatenated paths must share an endpoint");
  std::vector<Complex> v = vertices_;
  v.insert(v.end(), tail.vertices_.begin() + 1, tail.vertices_.end());
  return PathPolyline(std::move(v));
}

namespace {

Complex integrate_segment(const ComplexFn& f, Complex a, Complex b, double tol) {
  const Complex d = b - a;
  return adaptive_simpson<Complex>([&](double t) { return f(a + t * d) * d; }, 0.0, 1.0, tol);
}

ComplexFn wrap(const HoloExpr& f) {
  return [f](Complex z) {
    try {
      return f(z);
    } catch (const EvalError& e) {
      throw QuadratureError(std::string("singular integrand on path: ") + e.what());
    }
  };
}

}  // namespace

Complex integrate_along(const ComplexFn& f, const PathPolyline& path, double tol) {
  const auto v = path.vertices();
  const double seg_tol = tol / static_cast<double>(path.segment_count());
  Complex sum{};
  for (std::size_t k = 1; k < v.size(); ++k) sum += integrate_segment(f, v[k - 1], v[k], seg_tol);
  return sum;
}

Complex integrate_along(const HoloExpr& f, const PathPolyline& path, double tol) {
  return integrate_along(wrap(f), path, tol);
}

Complex primitive(const ComplexFn& f, Complex z, double tol) {
  if (!is_finite(z) || !(std::abs(z) < 1.0)) {
    throw DomainError("primitive evaluated outside the open unit disk");
  }
  if (z == Complex{}) return Complex{};
  return integrate_segment(f, Complex{}, z, tol);
}

Complex primitive(const HoloExpr& f, Complex z, double tol) { return primitive(wrap(f), z, tol); }

}  // namespace hyperfront::holo
