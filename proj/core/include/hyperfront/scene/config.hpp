#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace hyperfront::scene {

enum class InputKind { Weierstrass, Pair, Triple };
enum class MeshModel { HalfSpace, Ball };

[[nodiscard]] std::string_view to_string(InputKind k) noexcept;
[[nodiscard]] std::string_view to_string(MeshModel m) noexcept;

/// A pipeline run as described by a JSON scene file. See docs/config.md.
struct SceneConfig {
  std::string name = "scene";

  InputKind kind = InputKind::Pair;
  std::string g, eta;    // weierstrass
  std::string x, y, z;   // pair uses x, y; triple also z

  double radius = 0.9;   // subdomain radius ρ₀
  int rings = 64;
  int sectors = 64;
  int cartesian_n = 65;

  double r = 1.0;        // scaling diag(r, 1/r)

  double quadrature_tol = 1e-12;
  double invariant_tol = 1e-8;

  int test_paths = 16;
  int path_samples = 64;
  int directions = 100;
  std::vector<double> ray_angles_deg{0.0, 90.0, 180.0, 270.0};
  int cutoff_levels = 12;

  MeshModel mesh_model = MeshModel::Ball;
  std::vector<std::string> formats{"obj", "csv", "report"};
  std::filesystem::path output_dir = "out";
  std::string basename;  // defaults to name

  [[nodiscard]] bool wants(std::string_view format) const;
  [[nodiscard]] const std::string& output_stem() const noexcept {
    return basename.empty() ? name : basename;
  }
  [[nodiscard]] std::size_t polar_sample_count() const noexcept {
    return 1 + static_cast<std::size_t>(rings) * static_cast<std::size_t>(sectors);
  }
};

/// Parses and validates a scene. Throws ConfigError naming the offending key.
[[nodiscard]] SceneConfig parse_config(std::string_view json_text);
[[nodiscard]] SceneConfig load_config(const std::filesystem::path& file);

/// Throws ConfigError unless 0 < ρ₀ < 1, rings and sectors ≥ 4,
/// cartesian_n ≥ 16, r ∈ (0, 1], tolerances positive and the expressions
/// for the chosen input kind parse.
void validate(const SceneConfig& config);

}  // namespace hyperfront::scene
