#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "pinnfluence/optim.hpp"

namespace pinnfluence {

// A trained objective of the form (1/N) sum_i L_i(theta), optionally split
// into named loss terms. Implementations must be safe to call concurrently
// from several threads with distinct output buffers.
class InfluenceProblem {
 public:
  virtual ~InfluenceProblem() = default;

  virtual std::size_t num_params() const = 0;
  virtual std::size_t num_points() const = 0;

  // (1/N) sum_i L_i and its gradient.
  virtual double total_loss(std::span<const double> params, std::span<double> grad) const = 0;

  // L_i (the per-point loss as it enters the mean) and its gradient.
  virtual double point_loss(std::size_t i, std::span<const double> params, std::span<double> grad) const = 0;

  // Loss terms L_j with sum_j L_j = total. Defaults to a single term.
  virtual std::size_t num_terms() const { return 1; }
  virtual std::string term_name(std::size_t j) const { return j == 0 ? "total" : "term" + std::to_string(j); }
  virtual double term_loss(std::size_t j, std::span<const double> params, std::span<double> grad) const;
};

// Scalar function of the parameters whose change is being attributed.
struct Target {
  std::string id;
  std::function<double(std::span<const double>, std::span<double>)> eval;
};

inline constexpr std::size_t kDenseHessianGuard = 5000;
inline constexpr int kMaxDampingEscalations = 8;

struct HessianOptions {
  // Fixed damping. When absent, lambda = 1e-6 * trace(H) / P.
  std::optional<double> lambda;
};

// Dense symmetric Hessian of the total loss with Tikhonov damping and a
// cached Cholesky factorization of H + lambda I.
class HessianOperator {
 public:
  HessianOperator(Eigen::MatrixXd matrix, double lambda, std::uint64_t fingerprint, int escalations,
                  Eigen::LLT<Eigen::MatrixXd> factor);

  const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }
  double lambda() const noexcept { return lambda_; }
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }
  int escalations() const noexcept { return escalations_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }

  // (H + lambda I)^-1 v
  Eigen::VectorXd solve(const Eigen::VectorXd& v) const;
  Eigen::MatrixXd solve(const Eigen::MatrixXd& v) const;

  // Throws StaleHessianError when `params` differ from the assembly point.
  void check_params(std::span<const double> params) const;

 private:
  Eigen::MatrixXd matrix_;
  double lambda_;
  std::uint64_t fingerprint_;
  int escalations_;
  Eigen::LLT<Eigen::MatrixXd> factor_;
};

// Columns are forward differences of the exact gradient with step
// cbrt(eps) * (1 + |theta_j|), then symmetrized. Damping starts at the
// configured value and is multiplied by 10 until Cholesky succeeds.
// Throws GuardRefusal when P exceeds kDenseHessianGuard and
// SingularHessianError after kMaxDampingEscalations failed attempts.
HessianOperator assemble_hessian(const InfluenceProblem& problem, std::span<const double> params,
                                 const HessianOptions& options = {});

// Same columns computed one at a time without threading.
Eigen::MatrixXd hessian_columns_serial(const InfluenceProblem& problem, std::span<const double> params);

// Damps and factorizes an already assembled symmetric matrix.
HessianOperator factorize_hessian(Eigen::MatrixXd matrix, std::span<const double> params,
                                  const HessianOptions& options = {});

struct InfluenceRecord {
  std::string target;
  std::size_t train_index = 0;
  double value = 0.0;
};

// grad f . (H + lambda I)^-1 . grad L_i for one training point.
InfluenceRecord influence_single(const Target& target, std::size_t train_index, std::span<const double> params,
                                 const HessianOperator& hessian, const InfluenceProblem& problem);

// Sum over add_set minus sum over remove_set of influence_single.
double influence_group(const Target& target, std::span<const std::size_t> add_set,
                       std::span<const std::size_t> remove_set, std::span<const double> params,
                       const HessianOperator& hessian, const InfluenceProblem& problem);

// -sum_{j in removed} grad f . (H + lambda I)^-1 . grad L_j.
double influence_loss_terms(const Target& target, std::span<const std::size_t> removed_terms,
                            std::span<const double> params, const HessianOperator& hessian,
                            const InfluenceProblem& problem);

// Precomputes (H + lambda I)^-1 grad L_i for all training points so that a
// full influence row costs one matrix-vector product.
class InfluenceEngine {
 public:
  InfluenceEngine(const InfluenceProblem& problem, std::span<const double> params, const HessianOperator& hessian);

  // Influence of every training point on a target with the given gradient.
  Eigen::VectorXd row(const Eigen::VectorXd& target_grad) const;
  Eigen::VectorXd row(const Target& target) const;

  const Eigen::MatrixXd& point_gradients() const noexcept { return grads_; }
  std::size_t num_points() const noexcept { return static_cast<std::size_t>(grads_.cols()); }

 private:
  std::vector<double> params_;
  Eigen::MatrixXd grads_;   // P x N
  Eigen::MatrixXd solved_;  // (H + lambda I)^-1 grads_
};

Eigen::VectorXd target_gradient(const Target& target, std::span<const double> params, double* value = nullptr);

struct OracleOptions {
  std::size_t max_iterations = 20000;
  std::size_t memory = 20;
  double grad_tol = 1e-10;
  // Adds (proximal / 2) ||theta - proximal_center||^2 to the re-minimized
  // objective. An empty centre means the starting parameters.
  double proximal = 0.0;
  std::vector<double> proximal_center;
};

struct OracleResult {
  double delta = 0.0;  // f(theta_hat) - f(theta_eps)
  LbfgsStatus status = LbfgsStatus::converged;
  double grad_norm = 0.0;
  std::size_t iterations = 0;
};

// Re-minimizes total + epsilon * sum_{i in perturb_set} L_i (plus the
// optional proximal term) starting from theta_hat and returns
// f(theta_hat) - f(theta_eps). Requires
// |epsilon| <= 2 / N. Throws OracleUnavailable when the optimizer aborts.
OracleResult loo_retrain_oracle(const Target& target, std::span<const std::size_t> perturb_set, double epsilon,
                                std::span<const double> params, const InfluenceProblem& problem,
                                const OracleOptions& options = {});

// One re-minimization, every target evaluated at the perturbed optimum.
std::vector<OracleResult> loo_retrain_oracle(std::span<const Target> targets,
                                             std::span<const std::size_t> perturb_set, double epsilon,
                                             std::span<const double> params, const InfluenceProblem& problem,
                                             const OracleOptions& options = {});

}  // namespace pinnfluence
