#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperfront/holo/quadrature.hpp"
#include "hyperfront/legendrian.hpp"
#include "hyperfront/metric.hpp"
#include "hyperfront/types.hpp"

namespace hyperfront::diagnostics {

inline constexpr double kDefaultLengthTol = 1e-10;
/// Growth ratio of the last two cutoff lengths above which a ray is
/// reported as divergent.
inline constexpr double kDivergenceRatio = 1.05;

/// `count` points equally spaced in arc length, endpoints included.
[[nodiscard]] std::vector<Complex> sample_path(const holo::PathPolyline& path, std::size_t count);

/// Constant m ≥ 1 with 1/m ≤ |e^{W}| ≤ m on the sampled points.
struct BoundEstimate {
  double m = 1.0;
  std::size_t samples = 0;
  std::string where;
};

/// m = max over `samples` path points of max(e^{Re W}, e^{−Re W}).
[[nodiscard]] BoundEstimate estimate_m(const legendrian::LegendrianData& d,
                                       const holo::PathPolyline& path, std::size_t samples);

/// Pointwise certificate of the lower bound ds²_Λ ≥ 3/(4m⁴)·dσ² and of
/// the intermediate steps used to reach it.
struct KeyChainReport {
  enum class Status { Certified, Violated, NotApplicable };

  Status status = Status::NotApplicable;
  std::string reason;
  std::size_t samples = 0;
  /// Samples where 1/m ≤ |e^{W}| ≤ m fails.
  std::size_t m_violations = 0;
  /// ds²_Λ ≥ m⁻⁴(|X′|² + |Y′ − Y²X′|²).
  std::size_t exponential_violations = 0;
  /// |X′|² + |Y′ − Y²X′|² ≥ (1 − 3|Y|⁴)|X′|² + ¾|Y′|².
  std::size_t young_violations = 0;
  /// 1 − 3|Y|⁴ ≥ 26/27.
  std::size_t quartic_violations = 0;
  /// ds²_Λ ≥ 3/(4m⁴)(|X′|² + |Y′|²).
  std::size_t violations = 0;
  /// Smallest ds²_Λ − 3/(4m⁴)dσ² over the samples and where it occurs.
  double min_slack = HUGE_VAL;
  /// Smallest ratio ds²_Λ / (3/(4m⁴)dσ²).
  double min_ratio = HUGE_VAL;
  Complex worst_location{};

  [[nodiscard]] std::size_t total_violations() const noexcept {
    return m_violations + exponential_violations + young_violations + quartic_violations +
           violations;
  }
};

[[nodiscard]] std::string_view to_string(KeyChainReport::Status s) noexcept;

/// Checks the chain at `samples` path points (the same points estimate_m
/// uses). Reports NotApplicable unless 1 < |X| < 2 and |Y| < 1/3 hold at
/// every sample.
[[nodiscard]] KeyChainReport certify_key_chain(const legendrian::LegendrianData& d,
                                               const holo::PathPolyline& path,
                                               const BoundEstimate& m, std::size_t samples);

using MetricSampler = std::function<MetricForm(Complex)>;

/// ∫ sqrt(P|γ′|² + 2Re(Q γ′²)) dt by adaptive Simpson per segment.
/// Radicands down to −1e-12 (relative) are clamped to zero; anything more
/// negative means the form is not semi-definite and raises DomainError.
[[nodiscard]] double length_along(const MetricSampler& metric, const holo::PathPolyline& path,
                                  double tol = kDefaultLengthTol);

enum class Verdict { DivergentTrend, Plateau, Inconclusive };

[[nodiscard]] std::string_view to_string(Verdict v) noexcept;

/// Lengths of the radial ray t·e^{iθ}, t ∈ [0, cutoff], for each cutoff.
struct LengthProfile {
  double angle = 0.0;
  std::string metric;
  std::vector<double> cutoffs;
  std::vector<double> lengths;
  double growth_ratio = 0.0;
  Verdict verdict = Verdict::Inconclusive;
};

/// 1 − 2^{−k}, k = 1..levels.
[[nodiscard]] std::vector<double> default_cutoffs(int levels = 12);

[[nodiscard]] LengthProfile divergence_profile(const MetricSampler& metric, double angle,
                                               const std::vector<double>& cutoffs,
                                               std::string metric_name = "ds2_L",
                                               double tol = kDefaultLengthTol);

/// Classifies a non-decreasing length sequence by its last growth ratio.
[[nodiscard]] Verdict classify(const std::vector<double>& lengths, double* ratio = nullptr) noexcept;

/// sup of a scalar (e.g. the hyperboloid coordinate x0) along the ray up to
/// `cutoff`, over `samples` equally spaced points.
[[nodiscard]] double sup_along_ray(const std::function<double(Complex)>& value, double angle,
                                   double cutoff, std::size_t samples);

}  // namespace hyperfront::diagnostics
