#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "pinnfluence/model.hpp"

namespace pinnfluence {

inline constexpr int kCheckpointVersion = 1;

// Serialized training state. Parameters are stored as shortest round-trip
// decimal strings so save/load is bit-exact.
struct Checkpoint {
  MlpConfig config;
  ParamVector params;
  std::string phase = "init";  // init | adam | lbfgs | final
  std::size_t step = 0;
  std::string tag;  // model name, e.g. "good"
};

nlohmann::ordered_json model_to_json(const MlpConfig& config);
// Throws ValidationError with "model.<field>" paths.
MlpConfig model_from_json(const nlohmann::json& j);

nlohmann::ordered_json checkpoint_to_json(const Checkpoint& ckpt);
Checkpoint checkpoint_from_json(const nlohmann::json& j);

std::string checkpoint_dump(const Checkpoint& ckpt);
void save_checkpoint(const Checkpoint& ckpt, const std::filesystem::path& path);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace pinnfluence
