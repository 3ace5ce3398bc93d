#include "hyperfront/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "hyperfront/error.hpp"

namespace hyperfront::diagnostics {

std::vector<Complex> sample_path(const holo::PathPolyline& path, std::size_t count) {
  if (count < 2) throw DomainError("path sampling needs at least two points");
  std::vector<Complex> pts(count);
  for (std::size_t k = 0; k < count; ++k) {
    pts[k] = path.at_arclength(static_cast<double>(k) / static_cast<double>(count - 1));
  }
  return pts;
}

BoundEstimate estimate_m(const legendrian::LegendrianData& d, const holo::PathPolyline& path,
                         std::size_t samples) {
  if (samples < 16) throw DomainError("estimate_m needs at least 16 samples");
  BoundEstimate out;
  out.samples = samples;
  for (const Complex z : sample_path(path, samples)) {
    const double re_w = d.w()(z).real();
    out.m = std::max({out.m, std::exp(re_w), std::exp(-re_w)});
  }
  out.where = "polyline with " + std::to_string(path.vertices().size()) + " vertices, " +
              std::to_string(samples) + " arc-length samples";
  return out;
}

std::string_view to_string(KeyChainReport::Status s) noexcept {
  switch (s) {
    case KeyChainReport::Status::Certified: return "certified";
    case KeyChainReport::Status::Violated: return "violated";
    case KeyChainReport::Status::NotApplicable: return "not applicable";
  }
  return "?";
}

KeyChainReport certify_key_chain(const legendrian::LegendrianData& d,
                                 const holo::PathPolyline& path, const BoundEstimate& m,
                                 std::size_t samples) {
  constexpr double kRel = 1e-12;
  KeyChainReport out;
  const auto points = sample_path(path, samples);
  out.samples = points.size();

  std::vector<legendrian::LegendrianJets> jets;
  jets.reserve(points.size());
  for (const Complex z : points) {
    jets.push_back(d.at(z));
    const double ax = std::abs(jets.back().x.value);
    const double ay = std::abs(jets.back().y.value);
    if (!(ax > 1.0 && ax < 2.0 && ay < 1.0 / 3.0)) {
      out.status = KeyChainReport::Status::NotApplicable;
      out.reason = "bounds 1 < |X| < 2, |Y| < 1/3 fail on the path";
      out.worst_location = z;
      return out;
    }
  }

  const double m4 = std::pow(m.m, 4);
  for (const auto& j : jets) {
    const double ew = std::exp(j.w.value.real());
    if (!(ew * m.m >= 1.0 - kRel && ew <= m.m * (1.0 + kRel))) ++out.m_violations;

    const auto forms = legendrian::canonical_forms(j);
    const double lift_p = std::norm(forms.omega) + std::norm(forms.theta);
    const double dx2 = std::norm(j.x.deriv);
    const double dy2 = std::norm(j.y.deriv);
    const double y4 = std::pow(std::abs(j.y.value), 4);
    const double twisted = std::norm(j.y.deriv - j.y.value * j.y.value * j.x.deriv);

    const double exp_rhs = (dx2 + twisted) / m4;
    if (lift_p < exp_rhs * (1.0 - kRel)) ++out.exponential_violations;

    const double young_rhs = (1.0 - 3.0 * y4) * dx2 + 0.75 * dy2;
    if (dx2 + twisted < young_rhs - kRel * (dx2 + dy2)) ++out.young_violations;

    if (1.0 - 3.0 * y4 < 26.0 / 27.0) ++out.quartic_violations;

    const double bound = 0.75 / m4 * (dx2 + dy2);
    if (lift_p < bound * (1.0 - kRel)) ++out.violations;
    const double slack = lift_p - bound;
    if (slack < out.min_slack) {
      out.min_slack = slack;
      out.worst_location = j.z;
    }
    if (bound > 0.0) out.min_ratio = std::min(out.min_ratio, lift_p / bound);
  }
  out.status = out.total_violations() == 0 ? KeyChainReport::Status::Certified
                                           : KeyChainReport::Status::Violated;
  if (out.status == KeyChainReport::Status::Violated) {
    out.reason = "inequality chain fails at some samples; m may have been estimated on too small a set";
  }
  return out;
}

double length_along(const MetricSampler& metric, const holo::PathPolyline& path, double tol) {
  const auto v = path.vertices();
  const double seg_tol = tol / static_cast<double>(path.segment_count());
  double total = 0.0;
  for (std::size_t k = 1; k < v.size(); ++k) {
    const Complex a = v[k - 1];
    const Complex dir = v[k] - a;
    auto speed = [&](double t) {
      const MetricForm g = metric(a + t * dir);
      const double q = g(dir);
      if (q < 0.0) {
        if (q < -1e-12 * std::max(1.0, g.P * std::norm(dir))) {
          throw DomainError("metric is not positive semi-definite along the path");
        }
        return 0.0;
      }
      return std::sqrt(q);
    };
    total += holo::adaptive_simpson<double>(speed, 0.0, 1.0, seg_tol);
  }
  return total;
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::DivergentTrend: return "divergent-trend";
    case Verdict::Plateau: return "plateau / no completeness evidence";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<double> default_cutoffs(int levels) {
  std::vector<double> c;
  for (int k = 1; k <= levels; ++k) c.push_back(1.0 - std::ldexp(1.0, -k));
  return c;
}

Verdict classify(const std::vector<double>& lengths, double* ratio) noexcept {
  if (ratio) *ratio = 0.0;
  if (lengths.size() < 2) return Verdict::Inconclusive;
  const double prev = lengths[lengths.size() - 2];
  const double last = lengths.back();
  if (!(prev > 0.0) || !std::isfinite(last)) return Verdict::Inconclusive;
  const double r = last / prev;
  if (ratio) *ratio = r;
  return r > kDivergenceRatio ? Verdict::DivergentTrend : Verdict::Plateau;
}

LengthProfile divergence_profile(const MetricSampler& metric, double angle,
                                 const std::vector<double>& cutoffs, std::string metric_name,
                                 double tol) {
  for (std::size_t k = 0; k < cutoffs.size(); ++k) {
    if (!(cutoffs[k] > 0.0 && cutoffs[k] < 1.0) || (k > 0 && !(cutoffs[k] > cutoffs[k - 1]))) {
      throw DomainError("cutoffs must be strictly increasing in (0, 1)");
    }
  }
  LengthProfile out;
  out.angle = angle;
  out.metric = std::move(metric_name);
  out.cutoffs = cutoffs;
  const Complex dir = std::polar(1.0, angle);
  double prev_cut = 0.0;
  double total = 0.0;
  for (const double c : cutoffs) {
    total += length_along(metric, holo::PathPolyline::segment(prev_cut * dir, c * dir), tol);
    out.lengths.push_back(total);
    prev_cut = c;
  }
  out.verdict = classify(out.lengths, &out.growth_ratio);
  return out;
}

double sup_along_ray(const std::function<double(Complex)>& value, double angle, double cutoff,
                     std::size_t samples) {
  if (samples < 2) throw DomainError("sup_along_ray needs at least two samples");
  const Complex dir = std::polar(1.0, angle);
  double sup = -HUGE_VAL;
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = cutoff * static_cast<double>(k) / static_cast<double>(samples - 1);
    sup = std::max(sup, value(t * dir));
  }
  return sup;
}

}  // namespace hyperfront::diagnostics
