#include "hyperfront/metric.hpp"

namespace hyperfront {

double MetricForm::operator()(Complex v) const noexcept {
  return P * std::norm(v) + 2.0 * (Q * v * v).real();
}

double MetricForm::min_unit() const noexcept { return P - 2.0 * std::abs(Q); }

double MetricForm::max_unit() const noexcept { return P + 2.0 * std::abs(Q); }

}  // namespace hyperfront
