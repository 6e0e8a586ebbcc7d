#pragma once

#include <Eigen/Core>

namespace gmwp {

enum class GaugeKind { EuclideanBall, L1Ball, LinfBall };

/// Minkowski gauge of a scaled norm ball F (radius * unit ball), with the
/// polar-set machinery needed by the smoothed objective: value, a
/// deterministic subgradient selection, Euclidean projection onto the polar
/// set F°, and the sup-norms of F and F°.
///
/// Immutable after construction; all member functions are pure.
class GaugeSet {
 public:
  explicit GaugeSet(GaugeKind kind, double radius = 1.0);

  GaugeKind kind() const { return kind_; }
  double radius() const { return radius_; }

  /// rho_F(x) = inf{t >= 0 : x in tF}. Positively homogeneous, subadditive.
  double value(const Eigen::VectorXd& x) const;

  /// One element of the subdifferential of rho_F at x; the zero vector at
  /// x = 0. Tie rules: l1 kinks emit 0 in the zero coordinates; linf puts
  /// full weight on the smallest-index maximal coordinate.
  Eigen::VectorXd subgradient(const Eigen::VectorXd& x) const;

  /// Euclidean projection of y onto the polar set F°.
  Eigen::VectorXd polar_projection(const Eigen::VectorXd& y) const;

  /// Euclidean distance from y to F°.
  double polar_distance(const Eigen::VectorXd& y) const;

  /// ||F|| = sup{||x|| : x in F} in dimension dim.
  double norm_set(int dim) const;
  /// ||F°|| = sup{||v|| : v in F°} in dimension dim.
  double norm_polar(int dim) const;

 private:
  GaugeKind kind_;
  double radius_;
};

/// Euclidean projection onto the l1 ball of the given radius
/// (sort-based simplex-projection scheme, O(n log n)).
Eigen::VectorXd project_l1_ball(const Eigen::VectorXd& y, double radius);

}  // namespace gmwp
