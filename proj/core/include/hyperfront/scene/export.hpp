#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hyperfront/scene/pipeline.hpp"

namespace hyperfront::scene {

/// Wavefront OBJ text of the sampled front. Vertices follow the polar grid
/// order (centre, then ring-major); every grid quad becomes two triangles
/// and the centre ring a triangle fan. Triangles whose corners straddle
/// the singular set go to group `singular`, the rest to `regular`.
/// Throws DomainError for a zero-area mesh.
[[nodiscard]] std::string mesh_obj(const PolarGrid& grid,
                                   const std::vector<front::FrontSample>& samples,
                                   MeshModel model, std::size_t* singular_faces = nullptr);

/// Triangle list (0-based vertex indices) of the polar grid, regular
/// triangles first in grid order.
[[nodiscard]] std::vector<std::array<std::size_t, 3>> mesh_triangles(const PolarGrid& grid);

/// CSV sample table with the fixed column order and 17 significant digits.
[[nodiscard]] std::string sample_csv(const std::vector<front::FrontSample>& samples);

inline constexpr const char* kCsvHeader =
    "z_re,z_im,gplus_re,gplus_im,gminus_re,gminus_im,omega_re,omega_im,theta_re,theta_im,"
    "rho_abs,metricL_P,metricf_P,metricf_Q_re,metricf_Q_im,hs_w_re,hs_w_im,hs_h";

/// Writes the files requested by the config. Files are staged under
/// temporary names and renamed at the end; on any error the staged and
/// already-renamed files of this call are removed. Returns written paths.
std::vector<std::filesystem::path> write_artifacts(const PipelineResult& result,
                                                   const std::filesystem::path& directory,
                                                   bool mesh_only = false);

}  // namespace hyperfront::scene
