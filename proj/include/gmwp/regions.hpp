#pragma once

#include <Eigen/Core>

namespace gmwp {

enum class RegionKind { Ball, Box };

/// Closed convex constraint region (Euclidean ball or axis-aligned box) with
/// Euclidean projection, distance, and the penalty support term
/// phi(x) = 2 sup{<x,w> - ||w||^2/2 : w in Omega} = ||x||^2 - d(x;Omega)^2.
class ConvexRegion {
 public:
  static ConvexRegion ball(Eigen::VectorXd center, double radius);
  static ConvexRegion box(Eigen::VectorXd lo, Eigen::VectorXd hi);

  RegionKind kind() const { return kind_; }
  const Eigen::VectorXd& center() const { return a_; }
  double radius() const { return r_; }
  const Eigen::VectorXd& lo() const { return a_; }
  const Eigen::VectorXd& hi() const { return b_; }
  int dim() const { return static_cast<int>(a_.size()); }

  Eigen::VectorXd project(const Eigen::VectorXd& x) const;
  double distance(const Eigen::VectorXd& x) const;
  double phi(const Eigen::VectorXd& x) const;

 private:
  ConvexRegion(RegionKind kind, Eigen::VectorXd a, Eigen::VectorXd b, double r)
      : kind_(kind), a_(std::move(a)), b_(std::move(b)), r_(r) {}

  RegionKind kind_;
  Eigen::VectorXd a_;  // ball center, or box lower corner
  Eigen::VectorXd b_;  // box upper corner (unused for balls)
  double r_ = 0.0;     // ball radius
};

}  // namespace gmwp
