#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "pinnfluence/influence.hpp"
#include "pinnfluence/loss.hpp"

namespace pinnfluence {

// The composite PINN loss viewed as (1/N) sum_i w_i l_i, with two loss terms
// (0 = PDE over interior points, 1 = boundary conditions).
class PinnProblem final : public InfluenceProblem {
 public:
  PinnProblem(PinnSetup setup, CollocationSet colloc);

  std::size_t num_params() const override { return setup_.model.param_count(); }
  std::size_t num_points() const override { return colloc_.size(); }
  double total_loss(std::span<const double> params, std::span<double> grad) const override;
  double point_loss(std::size_t i, std::span<const double> params, std::span<double> grad) const override;
  std::size_t num_terms() const override { return 2; }
  std::string term_name(std::size_t j) const override { return j == 0 ? "pde" : "bc"; }
  double term_loss(std::size_t j, std::span<const double> params, std::span<double> grad) const override;

  const PinnSetup& setup() const noexcept { return setup_; }
  const CollocationSet& collocation() const noexcept { return colloc_; }

 private:
  PinnSetup setup_;
  CollocationSet colloc_;
};

// Indicator table rows in order, followed by the set-level speed sum used for heatmaps.
enum class TargetKind { u1, u2, p, speed, loss_pde, loss_bc, loss, sum_speed };

inline constexpr TargetKind kTableTargets[] = {TargetKind::u1,       TargetKind::u2,      TargetKind::p,
                                               TargetKind::speed,    TargetKind::loss_pde, TargetKind::loss_bc,
                                               TargetKind::loss};

std::string_view to_string(TargetKind k) noexcept;
TargetKind target_kind_from_string(std::string_view name);

// Whether a point-level target is defined at a test point: loss_pde needs an
// interior point, loss_bc a boundary point; everything else applies anywhere.
bool target_applies(TargetKind kind, std::optional<Segment> segment) noexcept;

// Target f(z; theta) for a single evaluation point. Loss targets are the raw
// squared residual sums (no collocation weight).
Target make_point_target(TargetKind kind, Point2 at, std::optional<Segment> segment, const PinnSetup& setup);

// sum_k ||u(z_k; theta)|| over a point set.
Target make_sum_speed_target(std::vector<Point2> points, const PinnSetup& setup);

// Gradients of several point-level targets at one point from a single
// recorded forward pass. Entries for non-applicable kinds are left empty.
std::vector<Eigen::VectorXd> point_target_gradients(std::span<const TargetKind> kinds, Point2 at,
                                                    std::optional<Segment> segment, std::span<const double> params,
                                                    const PinnSetup& setup);

}  // namespace pinnfluence
