#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pinnfluence/run_config.hpp"

namespace pinnfluence {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitValidation = 2, kExitNumerical = 3, kExitGuard = 4 };

inline constexpr std::size_t kValidateMaxParams = 400;
inline constexpr std::size_t kValidateMaxPoints = 64;

struct TrainArgs {
  std::filesystem::path config;
  std::optional<std::filesystem::path> out;  // overrides config.output_dir
};

struct InfluenceArgs {
  std::filesystem::path config;
  std::filesystem::path checkpoint;
  std::optional<std::filesystem::path> out;
  std::optional<double> lambda;
  std::optional<std::vector<TargetKind>> targets;
};

struct ReportArgs {
  std::filesystem::path influence_dir;
  std::optional<std::filesystem::path> out;  // defaults to influence_dir
};

struct ValidateArgs {
  std::filesystem::path config;
  std::filesystem::path checkpoint;
  std::optional<std::filesystem::path> out;
  std::optional<double> epsilon;
  std::optional<std::vector<TargetKind>> targets;
  std::optional<double> lambda;
  bool force = false;
};

struct ErrorsArgs {
  std::filesystem::path config;
  std::filesystem::path checkpoint;
  std::filesystem::path reference;  // CSV x,y,u1,u2,p
  std::optional<std::filesystem::path> out;
};

// Each command writes its artifacts and throws on failure: ValidationError,
// NumericalError (training abort, singular Hessian), GuardRefusal.
void cmd_train(const TrainArgs& args);
void cmd_influence(const InfluenceArgs& args);
void cmd_report(const ReportArgs& args);
void cmd_validate(const ValidateArgs& args);
void cmd_errors(const ErrorsArgs& args);

std::vector<TargetKind> parse_target_list(const std::string& list);

// Parses argv, dispatches, and maps exceptions to exit codes.
int run_cli(int argc, char** argv);

}  // namespace pinnfluence
