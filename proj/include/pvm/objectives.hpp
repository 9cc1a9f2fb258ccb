#pragma once

#include "pvm/atomic_domain.hpp"

namespace pvm {

// Upper bound L on the gradient's Lipschitz constant over the feasible set.
struct LipschitzEstimate {
  double value = 0.0;
};

/// A smooth objective. Definitions are immutable and shareable across
/// concurrent runs; evaluation counting lives in GradientOracle so each
/// solver run owns its own counters.
class Objective {
 public:
  virtual ~Objective() = default;

  virtual int dim() const = 0;
  virtual double value(const Vector& x) const = 0;
  virtual Vector gradient(const Vector& x) const = 0;
  virtual double partial(const Vector& x, int i) const = 0;

  // Lipschitz bound valid on the nonnegative orthant (which contains every
  // scaled simplex). Throws std::logic_error when no bound is known.
  virtual LipschitzEstimate lipschitz() const;
};

/// f(x) = 0.5 <Px, x> - <q, x> with P symmetric.
class QuadraticObjective : public Objective {
 public:
  QuadraticObjective(Matrix P, Vector q);

  int dim() const override { return static_cast<int>(q_.size()); }
  double value(const Vector& x) const override;
  Vector gradient(const Vector& x) const override;
  double partial(const Vector& x, int i) const override;
  LipschitzEstimate lipschitz() const override;  // largest eigenvalue of P

  const Matrix& P() const { return P_; }
  const Vector& q() const { return q_; }

 private:
  Matrix P_;
  Vector q_;
};

/// f(x) = quadratic(x) + 1/(<c,x> + mu), convex on the nonnegative orthant
/// for c > 0, mu > 0.
class ConvexBarrierObjective : public Objective {
 public:
  ConvexBarrierObjective(QuadraticObjective base, Vector c, double mu);

  int dim() const override { return base_.dim(); }
  double value(const Vector& x) const override;
  Vector gradient(const Vector& x) const override;
  double partial(const Vector& x, int i) const override;
  LipschitzEstimate lipschitz() const override;  // lambda_max(P) + 2 |c|^2 / mu^3

  const QuadraticObjective& base() const { return base_; }
  const Vector& c() const { return c_; }
  double mu() const { return mu_; }

 private:
  QuadraticObjective base_;
  Vector c_;
  double mu_;
};

enum class QMode { Zero, SinOverI };

// Benchmark matrix family: p_ij = sin(i) cos(j) for i < j (1-based indices,
// radians), mirrored below the diagonal, and p_jj = 1 + sum_{i != j} |p_ij|,
// which makes P strictly diagonally dominant and hence positive definite.
// q is zero or q_i = sin(i)/i depending on q_mode.
QuadraticObjective build_quadratic(int m, QMode q_mode);

// Benchmark barrier family: build_quadratic(m, q_mode) plus 1/(<c,x> + mu)
// with c_i = 2 + sin(i) and mu = 5.
ConvexBarrierObjective build_convex(int m, QMode q_mode);

struct EvalCounters {
  long long value_calls = 0;
  long long partial_calls = 0;  // a full gradient costs dim() partials
};

/// Counting facade over an Objective. One instance per solver run.
class GradientOracle {
 public:
  explicit GradientOracle(const Objective& f) : f_(&f) {}

  int dim() const { return f_->dim(); }

  double value(const Vector& x) {
    ++counters_.value_calls;
    return f_->value(x);
  }
  Vector gradient(const Vector& x) {
    counters_.partial_calls += f_->dim();
    return f_->gradient(x);
  }
  double partial(const Vector& x, int i) {
    ++counters_.partial_calls;
    return f_->partial(x, i);
  }

  // Registers the cost of a full gradient without re-evaluating it. Used
  // when a gradient obtained for a stopping test is committed to an
  // optimization step, so that the count stays dim() per iteration.
  void charge_full_gradient() { counters_.partial_calls += f_->dim(); }

  const EvalCounters& counters() const { return counters_; }
  void reset() { counters_ = EvalCounters{}; }

  const Objective& objective() const { return *f_; }

 private:
  const Objective* f_;
  EvalCounters counters_;
};

// Largest eigenvalue of a symmetric positive definite matrix by power
// iteration. Deterministic start vector; rel_tol bounds the relative change
// of the Rayleigh quotient between sweeps.
double power_iteration_lambda_max(const Matrix& P, double rel_tol = 1e-13,
                                  int max_iter = 100000);

}  // namespace pvm
