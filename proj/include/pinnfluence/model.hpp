#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pinnfluence/autodiff/jet.hpp"
#include "pinnfluence/autodiff/tape.hpp"
#include "pinnfluence/geometry.hpp"
#include "pinnfluence/physics.hpp"

namespace pinnfluence {

// Fully connected network R^2 -> R^3 (u1, u2, p). The output layer is affine.
struct MlpConfig {
  std::size_t input_dim = 2;
  std::size_t hidden_layers = 2;
  std::size_t hidden_width = 16;
  std::size_t output_dim = 3;
  ad::Activation activation = ad::Activation::gelu;
  std::uint64_t seed = 1;
  // Fixed input map xi = (x - shift) * scale applied before the first layer.
  std::array<double, 2> input_shift{0.0, 0.0};
  std::array<double, 2> input_scale{1.0, 1.0};

  void validate() const;

  // Layer widths including input and output, e.g. {2, 16, 16, 3}.
  std::vector<std::size_t> widths() const;
  std::size_t param_count() const;
};

// Flat parameter array. Per layer: weights row-major (fan_out x fan_in), then biases.
using ParamVector = std::vector<double>;

// Glorot-uniform weights and zero biases from a seeded mt19937_64.
ParamVector init_params(const MlpConfig& config);

// Derivative-free evaluation: {u1, u2, p}.
std::array<double, 3> forward_plain(std::span<const double> params, Point2 point, const MlpConfig& config);

// Plain jet evaluation.
FieldJet forward_jet(std::span<const double> params, Point2 point, const MlpConfig& config);

// Records the jet forward pass as a single fused block on `tape`. The
// parameter leaves must be contiguous on the tape starting at `first_param`;
// `params` must stay alive until the tape is reset.
VarFieldJet record_forward_jet(ad::Tape& tape, std::uint32_t first_param, std::span<const double> params,
                               Point2 point, const MlpConfig& config);

// Reference path: every scalar operation of the jet forward pass is recorded
// individually. Orders of magnitude slower; kept for cross-checking.
VarFieldJet record_forward_jet_scalar(std::span<const ad::Var> params, Point2 point, const MlpConfig& config);

// Jet forward/backward through the network with cached intermediates. Reused
// across points to avoid reallocating.
class MlpJetEvaluator {
 public:
  explicit MlpJetEvaluator(const MlpConfig& config);

  // Returns the 18 output components: u1 jet, u2 jet, p jet, each ordered
  // (v, dx, dy, dxx, dxy, dyy).
  const std::array<double, 18>& forward(std::span<const double> params, Point2 point);

  // Adds d(sum_k out_adj[k] * output[k]) / d(params) into `param_adj`.
  // Must follow a forward() with the same params.
  void backward(std::span<const double> params, std::span<const double> out_adj, std::span<double> param_adj);

  const MlpConfig& config() const noexcept { return config_; }

 private:
  MlpConfig config_;
  std::vector<std::size_t> widths_;
  std::vector<std::size_t> offsets_;          // start of each layer in the param vector
  std::vector<std::vector<double>> pre_;      // pre-activation jets per layer (neuron-major, 6 each)
  std::vector<std::vector<double>> post_;     // layer inputs: post_[0] is the seeded input
  std::vector<std::vector<double>> derivs_;   // g1, g2, g3 per hidden neuron
  std::vector<double> adj_a_;
  std::vector<double> adj_z_;
  std::array<double, 18> out_{};
};

}  // namespace pinnfluence
