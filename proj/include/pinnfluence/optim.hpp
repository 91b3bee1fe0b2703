#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace pinnfluence {

struct AdamState {
  std::vector<double> m;
  std::vector<double> v;
  std::size_t t = 0;

  explicit AdamState(std::size_t n = 0) : m(n, 0.0), v(n, 0.0) {}
};

// Standard Adam with bias correction.
struct AdamHyper {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

void adam_step(std::span<double> params, std::span<const double> grads, AdamState& state, double lr,
               const AdamHyper& hyper = {});

// Returns f(x) and writes grad f(x) into the second argument.
using Objective = std::function<double(std::span<const double>, std::span<double>)>;

struct LbfgsOptions {
  std::size_t max_iterations = 100;
  std::size_t memory = 10;
  double grad_tol = 1e-10;
  double c1 = 1e-4;
  double c2 = 0.9;
  std::size_t max_line_search = 40;
};

enum class LbfgsStatus { converged, budget_exhausted, line_search_failed, non_finite };

const char* to_string(LbfgsStatus s) noexcept;

struct LbfgsResult {
  std::vector<double> params;
  double loss = 0.0;
  double grad_norm = 0.0;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  LbfgsStatus status = LbfgsStatus::budget_exhausted;
  std::string message;
};

// Called after every accepted iteration with (iteration, params, loss).
using LbfgsCallback = std::function<void(std::size_t, std::span<const double>, double)>;

// L-BFGS (two-loop recursion) with a strong-Wolfe line search. Accepted
// iterates strictly decrease the objective, so the returned loss never
// exceeds the entry loss. A non-finite objective value aborts the run and
// returns the last finite iterate.
LbfgsResult lbfgs_optimize(std::span<const double> x0, const Objective& objective, const LbfgsOptions& options,
                           const LbfgsCallback& callback = {});

}  // namespace pinnfluence
