#include "gmwp/regions.hpp"

#include <cmath>
#include <stdexcept>

namespace gmwp {

ConvexRegion ConvexRegion::ball(Eigen::VectorXd center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius) || !center.allFinite()) {
    throw std::invalid_argument("ConvexRegion::ball: need finite center and radius > 0");
  }
  return ConvexRegion(RegionKind::Ball, std::move(center), Eigen::VectorXd(), radius);
}

ConvexRegion ConvexRegion::box(Eigen::VectorXd lo, Eigen::VectorXd hi) {
  if (lo.size() != hi.size() || !lo.allFinite() || !hi.allFinite()) {
    throw std::invalid_argument("ConvexRegion::box: corners must be finite and same size");
  }
  if (((hi - lo).array() < 0.0).any()) {
    throw std::invalid_argument("ConvexRegion::box: requires lo <= hi componentwise");
  }
  return ConvexRegion(RegionKind::Box, std::move(lo), std::move(hi), 0.0);
}

Eigen::VectorXd ConvexRegion::project(const Eigen::VectorXd& x) const {
  if (!x.allFinite()) throw std::invalid_argument("ConvexRegion::project: non-finite input");
  if (kind_ == RegionKind::Ball) {
    const Eigen::VectorXd d = x - a_;
    const double nrm = d.norm();
    if (nrm <= r_) return x;
    return a_ + d * (r_ / nrm);
  }
  return x.cwiseMax(a_).cwiseMin(b_);
}

double ConvexRegion::distance(const Eigen::VectorXd& x) const {
  return (x - project(x)).norm();
}

double ConvexRegion::phi(const Eigen::VectorXd& x) const {
  const double d = distance(x);
  return x.squaredNorm() - d * d;
}

}  // namespace gmwp
