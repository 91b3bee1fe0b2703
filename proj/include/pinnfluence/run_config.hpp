#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pinnfluence/indicators.hpp"
#include "pinnfluence/loss.hpp"
#include "pinnfluence/pinn_problem.hpp"
#include "pinnfluence/training.hpp"

namespace pinnfluence {

struct SamplingConfig {
  std::size_t n_pde = 750;
  std::size_t n_bc = 250;
  std::uint64_t seed = 0;  // Hammersley index offset is seed + 1
};

struct TestSetConfig {
  std::size_t n_interior = 2000;
  std::size_t n_boundary = 200;
};

struct ValidateConfig {
  std::vector<TargetKind> targets{TargetKind::u1};
  std::size_t n_test_points = 5;
  std::size_t max_iterations = 20000;
  bool proximal = true;  // damped oracle, see ValidationOptions
};

struct InfluenceConfig {
  std::optional<double> lambda;
  std::vector<TargetKind> targets{std::begin(kTableTargets), std::end(kTableTargets)};
  TestSetConfig test_set;
  RegionSpec region{{0.2, 0.2}, 0.075};
  std::size_t heatmap_nx = 44;
  std::size_t heatmap_ny = 8;
  ValidateConfig validate;
};

struct RunConfig {
  DomainSpec domain;
  FluidParams fluid;
  PdeVariant variant = PdeVariant::full;
  std::string tag = "good";
  MlpConfig model;
  TrainConfig train;
  SamplingConfig sampling;
  InfluenceConfig influence;
  std::filesystem::path output_dir = "run";

  void validate() const;
  PinnSetup setup() const { return {model, fluid, variant, domain}; }
};

// Missing keys take the defaults above; wrong types and violated invariants
// throw ValidationError naming the field path (e.g. "sampling.N_bc").
RunConfig run_config_from_json(const nlohmann::json& j);
nlohmann::ordered_json run_config_to_json(const RunConfig& config);
RunConfig load_run_config(const std::filesystem::path& path);

CollocationSet make_collocation(const RunConfig& config);

struct TestSet {
  std::vector<Point2> points;
  std::vector<std::optional<Segment>> segments;  // nullopt for interior points
  std::size_t n_interior = 0;
};

// Regular interior grid clipped to the domain, then uniformly spaced
// boundary points.
TestSet make_test_set(const DomainSpec& domain, const TestSetConfig& config);

// Interior evaluation points used by the retraining validation.
std::vector<Point2> validation_points(const DomainSpec& domain, std::size_t n);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace pinnfluence
