#pragma once

#include "pvm/atomic_domain.hpp"
#include "pvm/objectives.hpp"
#include "pvm/stepsize.hpp"

#include <optional>
#include <vector>

namespace pvm {

/// Stage tolerances delta_l = nu^l * delta0 and eps_l = nu^l * eps0.
/// Stages are numbered from l = 1, so the first stage already runs with the
/// decayed values nu * delta0 and nu * eps0.
struct ToleranceSchedule {
  double delta0 = 1.0;
  double eps0 = 0.5;
  double nu = 0.5;

  ToleranceSchedule() = default;
  ToleranceSchedule(double delta0, double eps0, double nu);
  static ToleranceSchedule equal(double delta0_and_eps0, double nu);

  double delta(int l) const;
  double eps(int l) const;
  void validate() const;  // delta0 > 0, eps0 in (0,1), nu in (0,1)
};

struct StoppingCriteria {
  double target_gap = 0.1;           // <= 0 disables the gap test
  long max_inner_iterations = 500;
  int max_stages = 60;
};

struct SolverConfig {
  ArmijoParams armijo;            // used by CGM/MDM and the Armijo step rule
  StepRule step_rule = ArmijoRule{};
  ToleranceSchedule schedule;
  StoppingCriteria stop;
  int gap_check_interval = 10;    // PVM gap cadence; restarts always check
};

enum class Termination { GapReached, IterationCap, StageCap };

const char* to_string(Termination t);

struct StepRecord {
  int stage = 1;        // 1-based; constant 1 for CGM/MDM
  long k = 0;           // 0-based step ordinal within the run
  int from = -1;        // source atom (-1 for CGM, which blends from x)
  int to = -1;          // target atom
  double gamma = 0.0;   // step-size cap
  double lambda = 0.0;  // accepted step
  double mu = 0.0;      // directional derivative <f'(x), d>
  double f_before = 0.0;
  double f_after = 0.0;
  int backtracks = 0;
  double delta_l = 0.0;        // stage threshold (0 for CGM/MDM)
  long long calc_after = 0;    // partial-derivative count after the step
};

struct RestartRecord {
  int stage = 0;              // l
  long iter_at_restart = 0;   // cumulative inner iterations when it fired
  double delta = 0.0;         // delta_l
  double eps = 0.0;           // eps_l
  double gap = 0.0;           // gap at the restart point w_l
  double f_value = 0.0;       // f(w_l)
  Vector point;               // w_l
};

struct GapSample {
  long iter = 0;
  double gap = 0.0;
};

struct RunReport {
  long iterations = 0;           // inner steps taken ("it")
  long long partial_calls = 0;   // partial-derivative evaluations ("calc")
  long long value_calls = 0;     // function-value evaluations
  std::vector<double> f_trajectory;       // f(x_0), f(x_1), ...
  std::vector<GapSample> gap_trajectory;  // gap at evaluation points
  std::vector<RestartRecord> restarts;
  std::vector<StepRecord> steps;
  WeightedPoint final_point;
  Termination terminated_by = Termination::IterationCap;
  double final_gap = 0.0;
};

/// Lazily evaluated atom values <f'(x), z_s> at a fixed iterate. Each
/// distinct atom is charged to the oracle once: on a scaled simplex one
/// partial derivative per atom, on explicit atoms one full gradient on
/// first use. The cache outlives restarts at an unchanged iterate, so
/// re-examining the same point costs nothing.
class AtomValueCache {
 public:
  AtomValueCache(const AtomicDomain& d, GradientOracle& oracle,
                 const Vector& x);

  double value(int s);
  const AtomicDomain& domain() const { return *domain_; }
  const std::map<int, double>& evaluated() const { return values_; }

 private:
  const AtomicDomain* domain_;
  GradientOracle* oracle_;
  Vector x_;
  std::optional<Vector> grad_;  // full gradient (explicit atoms)
  std::map<int, double> values_;
};

struct PairChoice {
  int from = -1;       // i: supported atom with the largest value
  int to = -1;         // j: first scanned atom with value(i)-value(j) >= delta
  double gamma = 0.0;  // weight at `from`
};

// Threshold pair search. Evaluates <f'(x), z_s> for every supported atom
// with weight >= eps and takes the exact maximizer i, then scans candidate
// j cyclically from scan_state, accepting the first one with
// value(i) - value(j) >= delta. An empty result certifies that no
// admissible pair exists (i maximizes over the eps-support and the scan
// covered all atoms), which triggers a restart. scan_state advances past
// an accepted j and is reset by the caller at restarts.
std::optional<PairChoice> select_pair(AtomValueCache& values,
                                      const WeightedPoint& wp, double eps,
                                      double delta, int& scan_state);

// Pairwise-variation method with tolerance stages and explicit weight
// transfers. Stage l accepts any pair (i, j) with i in the eps_l-support
// and atom-value margin >= delta_l, steps by the configured rule capped at
// gamma = u_i, and restarts (shrinking both tolerances) when no such pair
// exists. Gap tests run on a non-counting evaluation path so that the
// reported calc covers only optimization work.
RunReport pvm_solve(const AtomicDomain& domain, const Objective& f,
                    const SolverConfig& config, const WeightedPoint& start);

// Classical conditional gradient: full gradient each iteration, target
// vertex from the linear minimization oracle, Armijo search over [0, 1].
// Weights follow u <- (1-lambda) u + lambda e_j so sparsity is reportable.
RunReport cgm_solve(const AtomicDomain& domain, const Objective& f,
                    const SolverConfig& config, const WeightedPoint& start);

// Marginal swap-direction method: full gradient each iteration, exact
// argmax over the support and argmin over all atoms, Armijo capped at the
// source weight, weight transfer as in pvm_solve. Stops when the swap
// margin is nonpositive (a stationary point).
RunReport mdm_solve(const AtomicDomain& domain, const Objective& f,
                    const SolverConfig& config, const WeightedPoint& start);

}  // namespace pvm
