#pragma once

#include <Eigen/Core>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pvm {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

enum class DomainKind { ScaledSimplex, ExplicitAtoms };

struct LmoResult {
  int index = -1;      // atom index, 0-based
  double value = 0.0;  // <g, z_index>
};

// Upper bound B on the pairwise atom distance max_{i,j} ||z_i - z_j||.
struct DiameterBound {
  double value = 0.0;
};

class WeightedPoint;

/// A feasible set given as the convex hull of an indexed atom family.
///
/// Two representations are supported:
///   - ScaledSimplex(a, tau): atom i equals (tau/a_i) e_i, so the set is
///     {x >= 0 : <a, x> = tau}. Atoms are never materialized as a table.
///   - ExplicitAtoms: atoms stored as the columns of a dim x n matrix.
///
/// Instances are immutable after construction and safe to share across
/// concurrent solver runs.
class AtomicDomain {
 public:
  static AtomicDomain scaled_simplex(Vector a, double tau);
  static AtomicDomain simplex(int m, double tau);  // a = ones(m)
  static AtomicDomain explicit_atoms(Matrix atoms);
  static AtomicDomain explicit_atoms(const std::vector<Vector>& atoms);

  DomainKind kind() const { return kind_; }
  int atom_count() const { return n_; }
  int dim() const { return dim_; }

  Vector atom(int i) const;
  double atom_dot(int i, const Vector& g) const;  // <g, z_i>

  // Minimizes <g, z_i> over all atoms; ties break toward the lowest index.
  LmoResult lmo(const Vector& g) const;

  // Maximizes <g, z_i> over the supported atoms of wp with weight >= eps
  // (over the whole support when eps == 0). Empty search set gives an
  // empty result, not an error.
  std::optional<LmoResult> away_index(const Vector& g, const WeightedPoint& wp,
                                      double eps) const;

  // Recovers the unique weights u_i = a_i x_i / tau of a feasible point.
  // ScaledSimplex only; throws std::domain_error on infeasible input.
  WeightedPoint weights_of(const Vector& x) const;

  Vector reconstruct(const WeightedPoint& wp) const;

  // Membership test for ScaledSimplex: x >= 0 and |<a,x> - tau| <= rel_tol * tau.
  bool is_feasible(const Vector& x, double rel_tol = 1e-9) const;

  DiameterBound diameter() const { return diameter_; }

  double tau() const;
  const Vector& scale() const;  // a (ScaledSimplex only)
  const Matrix& atoms() const;  // atom matrix (ExplicitAtoms only)

 private:
  AtomicDomain() = default;
  void compute_diameter();

  DomainKind kind_ = DomainKind::ScaledSimplex;
  int n_ = 0;
  int dim_ = 0;
  Vector a_;
  double tau_ = 0.0;
  Matrix atoms_;
  DiameterBound diameter_;
};

/// A feasible point stored as a sparse convex combination of atoms together
/// with its cached coordinate vector. Only strictly positive weights are
/// stored; the map is renormalized to sum 1 after every update and the cache
/// is kept consistent incrementally.
class WeightedPoint {
 public:
  WeightedPoint() = default;  // empty; populate through the factories

  static WeightedPoint from_weights(const AtomicDomain& d,
                                    const std::map<int, double>& weights);
  static WeightedPoint at_vertex(const AtomicDomain& d, int i);
  static WeightedPoint uniform(const AtomicDomain& d);

  const std::map<int, double>& weights() const { return weights_; }
  const Vector& point() const { return point_; }
  double weight(int i) const;
  int support_size() const { return static_cast<int>(weights_.size()); }

  // Moves `lambda` of weight from atom `from` to atom `to`; lambda must not
  // exceed the current weight at `from`. Residuals below the pruning
  // threshold are dropped and accounted for in the cached point.
  void transfer(const AtomicDomain& d, int from, int to, double lambda);

  // u <- (1 - lambda) u + lambda e_j, the conditional-gradient update.
  void blend_toward_vertex(const AtomicDomain& d, int j, double lambda);

  void refresh_point(const AtomicDomain& d);

  static constexpr double kSumTolerance = 1e-12;
  static constexpr double kReconstructTolerance = 1e-9;
  static constexpr double kPruneThreshold = 1e-14;

 private:
  // Rescales weights to sum exactly one; returns the pre-scaling sum.
  double normalize();

  std::map<int, double> weights_;
  Vector point_;
};

// Gap function: max_{y in D} <g, x - y> = <g, x> - min_i <g, z_i>.
// Nonnegative on feasible points, zero exactly at stationary points.
double gap(const AtomicDomain& d, const Vector& g, const Vector& x);

// Loads an ExplicitAtoms domain from a CSV file, one atom per row, one
// column per coordinate; an optional non-numeric header row is skipped.
// Parse failures report the offending row and column.
AtomicDomain load_atoms_csv(const std::string& path);

// Loads a coordinate vector from a file holding either one value per line
// or a single comma-separated row.
Vector load_vector_csv(const std::string& path);

}  // namespace pvm
