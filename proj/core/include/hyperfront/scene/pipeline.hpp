#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperfront/affine.hpp"
#include "hyperfront/front.hpp"
#include "hyperfront/legendrian.hpp"
#include "hyperfront/nullcurve.hpp"
#include "hyperfront/scene/config.hpp"
#include "hyperfront/scene/report.hpp"
#include "hyperfront/singular.hpp"

namespace hyperfront::scene {

/// Rings × sectors polar sampling of the disk of radius ρ₀ plus its centre.
/// Index 0 is the centre; index 1 + ring·sectors + sector is the point at
/// radius ρ₀(ring+1)/rings and angle 2π·sector/sectors.
struct PolarGrid {
  double radius = 0.9;
  int rings = 64;
  int sectors = 64;

  [[nodiscard]] std::size_t size() const noexcept {
    return 1 + static_cast<std::size_t>(rings) * static_cast<std::size_t>(sectors);
  }
  [[nodiscard]] Complex point(std::size_t index) const noexcept;
  [[nodiscard]] std::size_t index(int ring, int sector) const noexcept {
    return 1 + static_cast<std::size_t>(ring) * sectors + static_cast<std::size_t>(sector % sectors);
  }
};

/// The holomorphic data a scene describes, built once per run.
struct SceneData {
  std::optional<nullcurve::NullCurve> curve;
  legendrian::LegendrianData legendrian;
};

[[nodiscard]] SceneData build_data(const SceneConfig& config);

struct RunOptions {
  std::size_t threads = 1;
};

/// Everything a run produces before anything is written to disk.
struct PipelineResult {
  SceneConfig config;
  PolarGrid grid;
  std::vector<front::FrontSample> samples;
  std::vector<affine::AffineFrontSample> affine;
  front::SingularCurve singular;
  RunReport report;
};

/// Runs the full chain: sampling, singular set, every invariant and the
/// diagnostics. Module errors propagate with the failing stage prefixed.
[[nodiscard]] PipelineResult evaluate(const SceneConfig& config, const RunOptions& options = {});

/// Deterministic test polylines inside the disk of the given radius.
[[nodiscard]] std::vector<holo::PathPolyline> test_paths(double radius, int count,
                                                         std::uint64_t seed);

/// Extra randomized sweep used by `check --seed`: random directions at
/// random samples for the metric inequality and random polylines for the
/// length comparison. Never affects pipeline artifacts.
[[nodiscard]] std::vector<InvariantResult> property_sweep(const PipelineResult& result,
                                                          const SceneData& data,
                                                          std::uint64_t seed);

/// splitmix64 step; the only random source of the pipeline.
[[nodiscard]] std::uint64_t splitmix64(std::uint64_t& state) noexcept;
/// Uniform double in [0, 1) from the next splitmix64 output.
[[nodiscard]] double uniform01(std::uint64_t& state) noexcept;

}  // namespace hyperfront::scene
