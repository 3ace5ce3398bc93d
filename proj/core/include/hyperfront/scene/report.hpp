#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperfront/diagnostics.hpp"
#include "hyperfront/nullcurve.hpp"
#include "hyperfront/types.hpp"

namespace hyperfront::scene {

enum class Status { Pass, Fail, Warn, Skipped };

[[nodiscard]] std::string_view to_string(Status s) noexcept;

/// Outcome of one invariant over all the samples it was checked on.
///
/// `worst_slack` is the smallest margin seen: tolerance − error for
/// residual checks, rhs − lhs for inequalities. Negative means violated.
struct InvariantResult {
  std::string name;
  std::string module;
  std::string description;
  Status status = Status::Skipped;
  double tolerance = 0.0;
  double worst_value = 0.0;
  double worst_slack = HUGE_VAL;
  std::optional<Complex> location;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string note;
};

/// Accumulates one invariant. Failures are kept in sample order so the
/// reported location does not depend on evaluation order.
class Check {
 public:
  Check(std::string name, std::string module, std::string description, double tolerance);

  /// Requires error ≤ tolerance.
  void residual(double error, Complex where);
  /// Requires lhs ≤ rhs + allowance.
  void at_most(double lhs, double rhs, double allowance, Complex where);
  /// Records a boolean condition with an explicit slack value.
  void condition(bool ok, double slack, double value, Complex where);

  /// Failures become warnings (direct-input residuals, hypotheses).
  Check& advisory() {
    advisory_ = true;
    return *this;
  }

  [[nodiscard]] InvariantResult finish(std::string note = {}) const;
  [[nodiscard]] static InvariantResult skipped(std::string name, std::string module,
                                               std::string description, std::string reason);

 private:
  InvariantResult result_;
  bool advisory_ = false;
};

struct GaussImage {
  double r = 1.0;
  double gplus_max = 0.0;
  double gminus_max = 0.0;
  double unscaled_gplus_max = 0.0;
  double unscaled_gminus_max = 0.0;
  std::size_t infinite_values = 0;

  [[nodiscard]] double radius() const noexcept { return std::max(gplus_max, gminus_max); }
  [[nodiscard]] double unscaled_radius() const noexcept {
    return std::max(unscaled_gplus_max, unscaled_gminus_max);
  }
};

struct SingularSummary {
  std::size_t vertex_count = 0;
  std::size_t polylines = 0;
  std::size_t cells = 0;
  std::size_t crossed_cells = 0;
  std::size_t infinite_cells = 0;
  bool entire_domain_singular = false;
  double max_vertex_residual = 0.0;
  std::size_t singular_faces = 0;
};

struct PathDiagnostic {
  std::size_t index = 0;
  std::size_t vertices = 0;
  double m = 1.0;
  diagnostics::KeyChainReport key_chain;
  double length_L = 0.0;
  double length_f = 0.0;
};

struct RayDiagnostic {
  diagnostics::LengthProfile profile;
  double x0_sup = 0.0;
};

struct RunReport {
  std::string config_name;
  std::string input_kind;
  std::size_t samples = 0;
  std::vector<InvariantResult> invariants;
  GaussImage gauss_image;
  nullcurve::XYBoundReport xy_bounds;
  SingularSummary singular;
  std::vector<PathDiagnostic> paths;
  std::vector<RayDiagnostic> rays;
  std::string completeness_verdict;

  [[nodiscard]] std::size_t count(Status s) const noexcept;
  [[nodiscard]] bool all_pass() const noexcept { return count(Status::Fail) == 0; }
  [[nodiscard]] const InvariantResult* first_failure() const noexcept;
  [[nodiscard]] const InvariantResult* find(std::string_view name) const noexcept;
};

/// Pretty-printed JSON with a trailing newline.
[[nodiscard]] std::string to_json(const RunReport& report);

}  // namespace hyperfront::scene
