#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pinnfluence/influence.hpp"
#include "pinnfluence/pinn_problem.hpp"

namespace pinnfluence {

// Spearman rank correlation with average ranks for ties. nullopt when either
// side is constant (including all zeros).
std::optional<double> spearman(std::span<const double> a, std::span<const double> b);

struct ValidationOptions {
  std::optional<double> epsilon;  // defaults to 1/N
  OracleOptions oracle;
  HessianOptions hessian;
  // Re-minimize the unperturbed objective before comparing, so that the
  // influence expansion is taken at a stationary point.
  bool polish = true;
  // Compare against the damped response: the oracle adds
  // (lambda / 2) ||theta - theta_hat||^2 with the influence damping lambda,
  // and deltas are taken from the minimizer of that objective at epsilon = 0.
  bool proximal = true;
};

struct ValidationPair {
  std::string target_id;  // kind:test_index
  std::size_t test_index = 0;
  std::size_t train_index = 0;
  double predicted = 0.0;  // epsilon * Inf
  double actual = 0.0;     // oracle delta
};

struct ValidationTargetSummary {
  std::string target_id;
  std::optional<double> spearman;
};

struct ValidationRun {
  double epsilon = 0.0;
  double lambda = 0.0;
  double proximal = 0.0;  // weight used by the oracle, 0 when disabled
  double base_loss = 0.0;
  double base_grad_norm = 0.0;
  std::vector<ValidationPair> pairs;             // target-major, then training point
  std::vector<ValidationTargetSummary> targets;  // one per (kind, test point)
  std::vector<std::optional<double>> per_kind;   // pooled over test points, one per kind
  std::vector<std::size_t> oracle_iterations;    // per training point
  std::vector<LbfgsStatus> oracle_status;
};

// Compares epsilon * Inf against the retraining oracle for every training
// point and every (kind, test point) target.
ValidationRun run_validation(const PinnProblem& problem, std::span<const double> params,
                             std::span<const TargetKind> kinds, std::span<const Point2> test_points,
                             const ValidationOptions& options);

}  // namespace pinnfluence
