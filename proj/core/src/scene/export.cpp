#include "hyperfront/scene/export.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <system_error>

#include "hyperfront/error.hpp"

namespace hyperfront::scene {

namespace {

void append(std::string& out, const char* fmt, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, fmt, v);
  out += buf;
}

void num(std::string& out, double v) { append(out, "%.17g", v); }

std::array<double, 3> vertex(const front::FrontSample& s, MeshModel model) {
  if (model == MeshModel::Ball) return s.ball.ball;
  return {s.halfspace.w.real(), s.halfspace.w.imag(), s.halfspace.h};
}

double area2(const std::array<double, 3>& a, const std::array<double, 3>& b,
             const std::array<double, 3>& c) {
  const double u[3] = {b[0] - a[0], b[1] - a[1], b[2] - a[2]};
  const double v[3] = {c[0] - a[0], c[1] - a[1], c[2] - a[2]};
  const double x = u[1] * v[2] - u[2] * v[1];
  const double y = u[2] * v[0] - u[0] * v[2];
  const double z = u[0] * v[1] - u[1] * v[0];
  return std::sqrt(x * x + y * y + z * z);
}

bool crosses(const std::vector<front::FrontSample>& s, const std::array<std::size_t, 3>& t) {
  const bool a = s[t[0]].singular_field >= 0.0;
  const bool b = s[t[1]].singular_field >= 0.0;
  const bool c = s[t[2]].singular_field >= 0.0;
  return !(a == b && b == c);
}

}  // namespace

std::vector<std::array<std::size_t, 3>> mesh_triangles(const PolarGrid& grid) {
  std::vector<std::array<std::size_t, 3>> tris;
  tris.reserve(static_cast<std::size_t>(grid.sectors) * (2 * grid.rings - 1));
  for (int s = 0; s < grid.sectors; ++s) {
    tris.push_back({0, grid.index(0, s), grid.index(0, s + 1)});
  }
  for (int r = 0; r + 1 < grid.rings; ++r) {
    for (int s = 0; s < grid.sectors; ++s) {
      const std::size_t a = grid.index(r, s), b = grid.index(r, s + 1);
      const std::size_t c = grid.index(r + 1, s), d = grid.index(r + 1, s + 1);
      tris.push_back({a, c, d});
      tris.push_back({a, d, b});
    }
  }
  return tris;
}

std::string mesh_obj(const PolarGrid& grid, const std::vector<front::FrontSample>& samples,
                     MeshModel model, std::size_t* singular_faces) {
  if (samples.size() != grid.size()) throw DomainError("mesh: sample count does not match grid");
  std::vector<std::array<double, 3>> v(samples.size());
  for (std::size_t k = 0; k < samples.size(); ++k) v[k] = vertex(samples[k], model);

  const auto tris = mesh_triangles(grid);
  double total = 0.0;
  std::vector<std::array<std::size_t, 3>> regular, singular;
  for (const auto& t : tris) {
    total += area2(v[t[0]], v[t[1]], v[t[2]]);
    (crosses(samples, t) ? singular : regular).push_back(t);
  }
  if (!(total > 0.0)) throw DomainError("mesh: zero-area mesh");
  if (singular_faces) *singular_faces = singular.size();

  std::string out;
  out.reserve(samples.size() * 64 + tris.size() * 24);
  out += "# hyperfront mesh, model ";
  out += to_string(model);
  out += "\n";
  for (const auto& p : v) {
    out += "v ";
    num(out, p[0]);
    out += ' ';
    num(out, p[1]);
    out += ' ';
    num(out, p[2]);
    out += '\n';
  }
  const auto faces = [&out](const char* group, const std::vector<std::array<std::size_t, 3>>& ts) {
    out += "g ";
    out += group;
    out += '\n';
    for (const auto& t : ts) {
      out += "f " + std::to_string(t[0] + 1) + ' ' + std::to_string(t[1] + 1) + ' ' +
             std::to_string(t[2] + 1) + '\n';
    }
  };
  faces("regular", regular);
  faces("singular", singular);
  return out;
}

std::string sample_csv(const std::vector<front::FrontSample>& samples) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& s : samples) {
    const auto part = [](const ExtComplex& g, bool imag) {
      if (g.infinite) return HUGE_VAL;
      return imag ? g.value.imag() : g.value.real();
    };
    const double rho_abs = s.forms.rho.infinite ? HUGE_VAL : std::abs(s.forms.rho.value);
    const double cols[] = {s.z.real(),
                           s.z.imag(),
                           part(s.gauss.plus, false),
                           part(s.gauss.plus, true),
                           part(s.gauss.minus, false),
                           part(s.gauss.minus, true),
                           s.forms.omega.real(),
                           s.forms.omega.imag(),
                           s.forms.theta.real(),
                           s.forms.theta.imag(),
                           rho_abs,
                           s.metric_L.P,
                           s.metric_f.P,
                           s.metric_f.Q.real(),
                           s.metric_f.Q.imag(),
                           s.halfspace.w.real(),
                           s.halfspace.w.imag(),
                           s.halfspace.h};
    bool first = true;
    for (double c : cols) {
      if (!first) out += ',';
      first = false;
      num(out, c);
    }
    out += '\n';
  }
  return out;
}

std::vector<std::filesystem::path> write_artifacts(const PipelineResult& result,
                                                   const std::filesystem::path& directory,
                                                   bool mesh_only) {
  namespace fs = std::filesystem;
  const auto& c = result.config;
  std::vector<fs::path> staged, written;
  const auto cleanup = [&] {
    std::error_code ec;
    for (const auto& p : staged) fs::remove(p, ec);
    for (const auto& p : written) fs::remove(p, ec);
  };
  std::vector<std::pair<fs::path, std::string>> files;
  try {
    const std::string stem = c.output_stem();
    if (mesh_only || c.wants("obj")) {
      files.emplace_back(directory / (stem + ".obj"),
                         mesh_obj(result.grid, result.samples, c.mesh_model));
    }
    if (!mesh_only && c.wants("csv")) {
      files.emplace_back(directory / (stem + ".csv"), sample_csv(result.samples));
    }
    if (!mesh_only && c.wants("report")) {
      files.emplace_back(directory / (stem + ".report.json"), to_json(result.report));
    }

    fs::create_directories(directory);
    for (const auto& [path, text] : files) {
      fs::path tmp = path;
      tmp += ".tmp";
      staged.push_back(tmp);
      std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
      os.write(text.data(), static_cast<std::streamsize>(text.size()));
      os.close();
      if (!os) throw Error("write failed: " + tmp.string());
    }
    for (std::size_t k = 0; k < files.size(); ++k) {
      fs::rename(staged[k], files[k].first);
      written.push_back(files[k].first);
    }
  } catch (const fs::filesystem_error& e) {
    cleanup();
    throw StageError("export", e.what());
  } catch (const Error& e) {
    cleanup();
    throw StageError("export", e.what());
  }
  std::vector<fs::path> out;
  for (const auto& f : files) out.push_back(f.first);
  return out;
}

}  // namespace hyperfront::scene
