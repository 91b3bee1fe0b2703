#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pinnfluence/autodiff/tape.hpp"
#include "pinnfluence/geometry.hpp"
#include "pinnfluence/model.hpp"
#include "pinnfluence/physics.hpp"

namespace pinnfluence {

// Everything needed to evaluate residuals for one network.
struct PinnSetup {
  MlpConfig model;
  FluidParams fluid;
  PdeVariant variant = PdeVariant::full;
  DomainSpec domain;
};

struct LossBreakdown {
  double l_pde = 0.0;
  double l_bc = 0.0;
  double total = 0.0;
  // (collocation index, w_i * l_i / N); sums to `total`.
  std::vector<std::pair<std::size_t, double>> per_point;
};

// Evaluates the raw squared residual sum l_i of one collocation point and,
// optionally, its parameter gradient. Owns a reusable tape; not thread-safe.
class PointLoss {
 public:
  explicit PointLoss(const PinnSetup& setup);

  // Interior point when `segment` is empty. Adds scale * grad(l_i) into `grad`
  // when `grad` is non-empty. Returns l_i.
  double evaluate(std::span<const double> params, Point2 point, std::optional<Segment> segment,
                  std::span<double> grad = {}, double scale = 1.0);

  const PinnSetup& setup() const noexcept { return setup_; }

 private:
  PinnSetup setup_;
  MlpJetEvaluator eval_;
  std::vector<double> scratch_;
};

// Records the squared residual sum of one point on a caller-owned tape whose
// parameter leaves start at `first_param`.
ad::Var record_point_loss(ad::Tape& tape, std::uint32_t first_param, std::span<const double> params,
                          const PinnSetup& setup, Point2 point, std::optional<Segment> segment);

// l_pde = mean over interior points, l_bc = mean over boundary points. An
// empty group contributes zero; an entirely empty set is a contract violation.
LossBreakdown composite_loss(std::span<const double> params, const CollocationSet& colloc, const PinnSetup& setup);

// Total loss and its gradient, serial reference: one pass in index order.
double loss_and_gradient_serial(std::span<const double> params, const CollocationSet& colloc, const PinnSetup& setup,
                                std::span<double> grad, double* l_pde = nullptr, double* l_bc = nullptr);

// OpenMP version. Points are grouped into fixed-size blocks that are summed
// in block order, so the result does not depend on the thread count.
double loss_and_gradient(std::span<const double> params, const CollocationSet& colloc, const PinnSetup& setup,
                         std::span<double> grad, double* l_pde = nullptr, double* l_bc = nullptr);

// Gradient of w_i * l_i for every collocation point, stored point-major:
// entries [i * P, (i + 1) * P) belong to point i (a column-major P x N matrix).
void per_point_gradients(std::span<const double> params, const CollocationSet& colloc, const PinnSetup& setup,
                         std::span<double> out_column_major, std::span<double> weighted_losses = {});

inline constexpr std::size_t kReductionBlock = 16;

}  // namespace pinnfluence
