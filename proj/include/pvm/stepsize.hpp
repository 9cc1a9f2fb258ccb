#pragma once

#include "pvm/objectives.hpp"

#include <stdexcept>
#include <string>
#include <variant>

namespace pvm {

struct ArmijoParams {
  double beta = 0.5;       // sufficient-decrease fraction, in (0,1)
  double theta = 0.5;      // backtracking ratio, in (0,1)
  int max_backtracks = 60; // theta = 0.5 reaches ~1e-18 * gamma at 60
};

struct ArmijoResult {
  int backtracks = 0;  // accepted power of theta
  double step = 0.0;   // theta^backtracks * gamma
  double f_new = 0.0;  // objective value at the accepted point
};

/// Raised when backtracking exhausts max_backtracks. That signals a
/// violated precondition (mu >= 0 from numerical noise, or a broken
/// oracle), not a tuning problem; the last trial is carried along.
class ArmijoError : public std::runtime_error {
 public:
  ArmijoError(const std::string& what, int backtracks, double last_step,
              double last_value, double threshold)
      : std::runtime_error(what),
        backtracks(backtracks),
        last_step(last_step),
        last_value(last_value),
        threshold(threshold) {}

  int backtracks;
  double last_step;
  double last_value;
  double threshold;
};

// Backtracking line search: the smallest k >= 0 with
//   f(x + theta^k gamma d) <= fx + beta theta^k gamma mu.
// mu = <f'(x), d> must be negative and fx = f(x) is supplied by the caller;
// trial evaluations go through the oracle and are counted as value calls.
ArmijoResult armijo(GradientOracle& oracle, const Vector& x, const Vector& d,
                    double gamma, double mu, double fx,
                    const ArmijoParams& params);

// Line-search-free step for an L-Lipschitz gradient: lambda_bar * delta_l
// with lambda_bar = min{(1-beta)/(L B^2), eps_l}. Satisfies the Armijo
// inequality whenever <f'(x), d> <= -delta_l and ||d|| <= B.
double fixed_step(double L, double B, double beta, double eps_l,
                  double delta_l);

// Divergent-series rule eps_l/(k+1): the steps sum to infinity, their
// squares converge, and every step lies in (0, eps_l].
double divergent_step(long k, double eps_l);

struct ArmijoRule {};  // parameters come from SolverConfig::armijo
struct FixedLipschitzRule {
  double L = 0.0;
  double B = 0.0;
};
struct DivergentRule {};

using StepRule = std::variant<ArmijoRule, FixedLipschitzRule, DivergentRule>;

}  // namespace pvm
