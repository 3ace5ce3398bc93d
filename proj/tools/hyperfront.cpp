// hyperfront: run, check or mesh a scene file.
//
// Exit codes: 0 success, 1 invariant failure, 2 bad config or usage,
// 3 runtime error (module or I/O).

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "hyperfront/error.hpp"
#include "hyperfront/scene/config.hpp"
#include "hyperfront/scene/export.hpp"
#include "hyperfront/scene/pipeline.hpp"
#include "hyperfront/scene/report.hpp"

namespace hs = hyperfront::scene;

namespace {

enum Exit { kOk = 0, kInvariant = 1, kConfig = 2, kRuntime = 3 };

struct Options {
  std::string config;
  std::size_t threads = 0;
  std::uint64_t seed = 1;
  std::optional<std::string> out;
  bool quiet = false;
};

void print_summary(const hs::RunReport& r, std::ostream& os) {
  os << "scene " << r.config_name << " (" << r.input_kind << "), " << r.samples << " samples\n";
  os << "invariants: " << r.count(hs::Status::Pass) << " pass, " << r.count(hs::Status::Fail)
     << " fail, " << r.count(hs::Status::Warn) << " warn, " << r.count(hs::Status::Skipped)
     << " skipped\n";
  char buf[160];
  std::snprintf(buf, sizeof buf, "gauss image: max|G+| = %.17g, max|G-| = %.17g\n",
                r.gauss_image.gplus_max, r.gauss_image.gminus_max);
  os << buf;
  os << "singular set: " << r.singular.vertex_count << " vertices, " << r.singular.singular_faces
     << " singular faces\n";
  os << "completeness: " << r.completeness_verdict << "\n";
}

void print_failures(const std::vector<hs::InvariantResult>& inv, std::ostream& os) {
  for (const auto& i : inv) {
    if (i.status != hs::Status::Fail) continue;
    char buf[96];
    std::snprintf(buf, sizeof buf, " (worst %.6g, %zu of %zu samples)", i.worst_value, i.failures,
                  i.checked);
    os << "FAIL " << i.name << buf;
    if (i.location) os << " at z = " << i.location->real() << (i.location->imag() < 0 ? "" : "+")
                       << i.location->imag() << "i";
    os << "\n";
  }
}

hs::SceneConfig load(const Options& o) {
  auto c = hs::load_config(o.config);
  if (o.out) c.output_dir = *o.out;
  return c;
}

std::size_t threads_of(const Options& o) {
  if (o.threads > 0) return o.threads;
  return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_run(const Options& o, bool mesh_only) {
  const auto config = load(o);
  const auto result = hs::evaluate(config, {threads_of(o)});
  const auto files = hs::write_artifacts(result, config.output_dir, mesh_only);
  if (!o.quiet) {
    print_summary(result.report, std::cout);
    for (const auto& f : files) std::cout << "wrote " << f.string() << "\n";
  }
  if (!result.report.all_pass()) {
    print_failures(result.report.invariants, std::cerr);
    return kInvariant;
  }
  return kOk;
}

int cmd_check(const Options& o) {
  const auto config = load(o);
  const auto result = hs::evaluate(config, {threads_of(o)});
  const auto data = hs::build_data(config);
  auto invariants = result.report.invariants;
  for (auto& extra : hs::property_sweep(result, data, o.seed)) invariants.push_back(std::move(extra));
  if (!o.quiet) print_summary(result.report, std::cout);
  const auto failed = std::find_if(invariants.begin(), invariants.end(),
                                   [](const auto& i) { return i.status == hs::Status::Fail; });
  if (failed != invariants.end()) {
    print_failures(invariants, std::cerr);
    std::cerr << "first failure: " << failed->name << "\n";
    return kInvariant;
  }
  if (!o.quiet) std::cout << "all invariants pass\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flat fronts in hyperbolic space from holomorphic data"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "Worker threads (default: hardware concurrency)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "Seed for the randomized property sweep of `check`");
  app.add_flag("-q,--quiet", o.quiet, "Only report failures");

  auto* run = app.add_subcommand("run", "Run the pipeline and write all configured artifacts");
  auto* check = app.add_subcommand("check", "Evaluate every invariant; write nothing");
  auto* mesh = app.add_subcommand("mesh", "Run the pipeline and write only the OBJ mesh");
  for (auto* sub : {run, check, mesh}) {
    sub->add_option("config", o.config, "Scene file (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--threads", o.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Seed for the randomized property sweep");
    sub->add_flag("-q,--quiet", o.quiet, "Only report failures");
    if (sub != check) {
      sub->add_option_function<std::string>(
          "--out", [&o](const std::string& d) { o.out = d; }, "Output directory override");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }

  try {
    if (run->parsed()) return cmd_run(o, false);
    if (mesh->parsed()) return cmd_run(o, true);
    return cmd_check(o);
  } catch (const hyperfront::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const hyperfront::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntime;
  }
}
