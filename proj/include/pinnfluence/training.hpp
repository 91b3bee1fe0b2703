#pragma once

#include <functional>
#include <string>
#include <vector>

#include "pinnfluence/checkpoint.hpp"
#include "pinnfluence/loss.hpp"
#include "pinnfluence/optim.hpp"

namespace pinnfluence {

struct TrainConfig {
  std::size_t adam_steps = 5000;
  double adam_lr = 1e-3;
  std::size_t lbfgs_steps = 500;
  std::size_t lbfgs_memory = 20;
  std::uint64_t seed = 0;

  void validate() const;
};

struct LossRecord {
  std::size_t step = 0;
  std::string phase;  // adam | lbfgs | final
  double l_pde = 0.0;
  double l_bc = 0.0;
  double total = 0.0;
};

struct TrainResult {
  Checkpoint final;
  std::vector<Checkpoint> trail;  // periodic checkpoints in order, final included
  std::vector<LossRecord> history;
  LbfgsStatus lbfgs_status = LbfgsStatus::budget_exhausted;
  bool aborted = false;
  std::string message;
};

// Invoked for each checkpoint as soon as it is taken, so partial trails
// survive an abort.
using CheckpointSink = std::function<void(const Checkpoint&)>;

// Adam for `adam_steps` full-batch steps, then L-BFGS for up to
// `lbfgs_steps` iterations. Checkpoints are taken every 10% of each phase.
TrainResult train(const TrainConfig& config, const PinnSetup& setup, const CollocationSet& colloc,
                  const std::string& tag, const CheckpointSink& sink = {});

// Same as above, starting from the given parameters instead of init_params.
TrainResult train_from(const TrainConfig& config, const PinnSetup& setup, const CollocationSet& colloc,
                       ParamVector params, const std::string& tag, const CheckpointSink& sink = {});

std::string loss_history_csv(const std::vector<LossRecord>& history);

}  // namespace pinnfluence
