#include "hyperfront/scene/config.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "hyperfront/error.hpp"
#include "hyperfront/holo/expr.hpp"

namespace hyperfront::scene {

using nlohmann::json;

std::string_view to_string(InputKind k) noexcept {
  switch (k) {
    case InputKind::Weierstrass: return "weierstrass";
    case InputKind::Pair: return "pair";
    case InputKind::Triple: return "triple";
  }
  return "?";
}

std::string_view to_string(MeshModel m) noexcept {
  return m == MeshModel::Ball ? "ball" : "halfspace";
}

bool SceneConfig::wants(std::string_view format) const {
  return std::find(formats.begin(), formats.end(), format) != formats.end();
}

namespace {

template <class T>
void read(const json& obj, const char* key, T& out, const std::string& path) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config key '" + path + key + "' has the wrong type");
  }
}

std::string required_string(const json& obj, const char* key, const std::string& path) {
  if (!obj.contains(key) || !obj.at(key).is_string()) {
    throw ConfigError("config key '" + path + key + "' must be an expression string");
  }
  return obj.at(key).get<std::string>();
}

void check_expr(const std::string& source, const char* what) {
  try {
    (void)holo::parse_expr(source);
  } catch (const ParseError& e) {
    throw ConfigError(std::string("expression ") + what + ": " + e.what());
  }
}

}  // namespace

SceneConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config root must be an object");

  SceneConfig c;
  read(doc, "name", c.name, "");

  if (!doc.contains("input") || !doc["input"].is_object()) {
    throw ConfigError("config key 'input' must be an object");
  }
  const json& in = doc["input"];
  const std::string kind = in.value("kind", "");
  if (kind == "weierstrass") {
    c.kind = InputKind::Weierstrass;
    c.g = required_string(in, "g", "input.");
    c.eta = required_string(in, "eta", "input.");
  } else if (kind == "pair") {
    c.kind = InputKind::Pair;
    c.x = required_string(in, "X", "input.");
    c.y = required_string(in, "Y", "input.");
  } else if (kind == "triple") {
    c.kind = InputKind::Triple;
    c.x = required_string(in, "X", "input.");
    c.y = required_string(in, "Y", "input.");
    c.z = required_string(in, "Z", "input.");
  } else {
    throw ConfigError("config key 'input.kind' must be weierstrass, pair or triple");
  }

  read(doc, "subdomain_radius", c.radius, "");
  if (doc.contains("grid")) {
    const json& g = doc["grid"];
    read(g, "rings", c.rings, "grid.");
    read(g, "sectors", c.sectors, "grid.");
    read(g, "cartesian_n", c.cartesian_n, "grid.");
  }
  read(doc, "scaling_r", c.r, "");
  if (doc.contains("tolerances")) {
    const json& t = doc["tolerances"];
    read(t, "quadrature", c.quadrature_tol, "tolerances.");
    read(t, "invariant", c.invariant_tol, "tolerances.");
  }
  if (doc.contains("diagnostics")) {
    const json& d = doc["diagnostics"];
    read(d, "test_paths", c.test_paths, "diagnostics.");
    read(d, "path_samples", c.path_samples, "diagnostics.");
    read(d, "directions", c.directions, "diagnostics.");
    read(d, "ray_angles_deg", c.ray_angles_deg, "diagnostics.");
    read(d, "cutoff_levels", c.cutoff_levels, "diagnostics.");
  }
  if (doc.contains("outputs")) {
    const json& o = doc["outputs"];
    std::string model = to_string(c.mesh_model).data();
    read(o, "mesh_model", model, "outputs.");
    if (model == "ball") {
      c.mesh_model = MeshModel::Ball;
    } else if (model == "halfspace") {
      c.mesh_model = MeshModel::HalfSpace;
    } else {
      throw ConfigError("config key 'outputs.mesh_model' must be ball or halfspace");
    }
    read(o, "formats", c.formats, "outputs.");
    std::string dir = c.output_dir.string();
    read(o, "directory", dir, "outputs.");
    c.output_dir = dir;
    read(o, "basename", c.basename, "outputs.");
  }
  validate(c);
  return c;
}

SceneConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void validate(const SceneConfig& c) {
  if (!(c.radius > 0.0 && c.radius < 1.0)) {
    throw ConfigError("subdomain_radius must lie in (0, 1)");
  }
  if (c.rings < 4 || c.sectors < 4) throw ConfigError("grid.rings and grid.sectors must be >= 4");
  if (c.cartesian_n < 16) throw ConfigError("grid.cartesian_n must be >= 16");
  if (!(c.r > 0.0 && c.r <= 1.0)) throw ConfigError("scaling_r must lie in (0, 1]");
  if (!(c.quadrature_tol > 0.0) || !(c.invariant_tol > 0.0)) {
    throw ConfigError("tolerances must be positive");
  }
  if (c.test_paths < 1 || c.path_samples < 16 || c.directions < 1 || c.cutoff_levels < 2) {
    throw ConfigError(
        "diagnostics: test_paths >= 1, path_samples >= 16, directions >= 1, cutoff_levels >= 2");
  }
  if (c.cutoff_levels > 40) throw ConfigError("diagnostics.cutoff_levels must be <= 40");
  for (const auto& f : c.formats) {
    if (f != "obj" && f != "csv" && f != "report") {
      throw ConfigError("outputs.formats entries must be obj, csv or report");
    }
  }
  if (c.output_stem().empty() || c.output_stem().find('/') != std::string::npos) {
    throw ConfigError("outputs.basename must be a plain file stem");
  }
  switch (c.kind) {
    case InputKind::Weierstrass:
      check_expr(c.g, "g");
      check_expr(c.eta, "eta");
      break;
    case InputKind::Triple:
      check_expr(c.z, "Z");
      [[fallthrough]];
    case InputKind::Pair:
      check_expr(c.x, "X");
      check_expr(c.y, "Y");
      break;
  }
}

}  // namespace hyperfront::scene
