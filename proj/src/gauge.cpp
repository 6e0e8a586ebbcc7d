#include "gmwp/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gmwp {

namespace {

void check_finite(const Eigen::VectorXd& x) {
  if (!x.allFinite()) {
    throw std::invalid_argument("gauge: non-finite input vector");
  }
}

}  // namespace

GaugeSet::GaugeSet(GaugeKind kind, double radius) : kind_(kind), radius_(radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("GaugeSet: radius must be positive and finite");
  }
}

double GaugeSet::value(const Eigen::VectorXd& x) const {
  check_finite(x);
  switch (kind_) {
    case GaugeKind::EuclideanBall:
      return x.norm() / radius_;
    case GaugeKind::L1Ball:
      return x.lpNorm<1>() / radius_;
    case GaugeKind::LinfBall:
      return x.lpNorm<Eigen::Infinity>() / radius_;
  }
  return 0.0;
}

Eigen::VectorXd GaugeSet::subgradient(const Eigen::VectorXd& x) const {
  check_finite(x);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(x.size());
  switch (kind_) {
    case GaugeKind::EuclideanBall: {
      const double nrm = x.norm();
      if (nrm > 0.0) v = x / (nrm * radius_);
      break;
    }
    case GaugeKind::L1Ball: {
      for (Eigen::Index i = 0; i < x.size(); ++i) {
        if (x[i] > 0.0) v[i] = 1.0 / radius_;
        else if (x[i] < 0.0) v[i] = -1.0 / radius_;
      }
      break;
    }
    case GaugeKind::LinfBall: {
      const double nrm = x.lpNorm<Eigen::Infinity>();
      if (nrm > 0.0) {
        for (Eigen::Index i = 0; i < x.size(); ++i) {
          if (std::abs(x[i]) == nrm) {
            v[i] = (x[i] > 0.0 ? 1.0 : -1.0) / radius_;
            break;  // smallest-index maximal coordinate takes full weight
          }
        }
      }
      break;
    }
  }
  return v;
}

Eigen::VectorXd project_l1_ball(const Eigen::VectorXd& y, double radius) {
  if (y.lpNorm<1>() <= radius) return y;
  // Project |y| onto the simplex of size `radius`, then restore signs.
  const Eigen::Index n = y.size();
  std::vector<double> u(static_cast<size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) u[static_cast<size_t>(i)] = std::abs(y[i]);
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cumsum = 0.0;
  double theta = 0.0;
  for (size_t j = 0; j < u.size(); ++j) {
    cumsum += u[j];
    const double t = (cumsum - radius) / static_cast<double>(j + 1);
    if (u[j] - t <= 0.0) break;
    theta = t;
  }
  Eigen::VectorXd p(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double mag = std::max(std::abs(y[i]) - theta, 0.0);
    p[i] = y[i] >= 0.0 ? mag : -mag;
  }
  return p;
}

Eigen::VectorXd GaugeSet::polar_projection(const Eigen::VectorXd& y) const {
  check_finite(y);
  const double pr = 1.0 / radius_;  // polar radius
  switch (kind_) {
    case GaugeKind::EuclideanBall: {
      const double nrm = y.norm();
      if (nrm <= pr) return y;
      return y * (pr / nrm);
    }
    case GaugeKind::L1Ball:
      // polar of the l1 ball is the linf box: coordinate clamp
      return y.cwiseMax(-pr).cwiseMin(pr);
    case GaugeKind::LinfBall:
      return project_l1_ball(y, pr);
  }
  return y;
}

double GaugeSet::polar_distance(const Eigen::VectorXd& y) const {
  return (y - polar_projection(y)).norm();
}

double GaugeSet::norm_set(int dim) const {
  switch (kind_) {
    case GaugeKind::EuclideanBall:
      return radius_;
    case GaugeKind::L1Ball:
      return radius_;  // sup norm attained at the scaled vertices
    case GaugeKind::LinfBall:
      return radius_ * std::sqrt(static_cast<double>(dim));
  }
  return 0.0;
}

double GaugeSet::norm_polar(int dim) const {
  switch (kind_) {
    case GaugeKind::EuclideanBall:
      return 1.0 / radius_;
    case GaugeKind::L1Ball:
      // polar is the linf box of half-width 1/radius
      return std::sqrt(static_cast<double>(dim)) / radius_;
    case GaugeKind::LinfBall:
      // polar is the l1 ball of radius 1/radius
      return 1.0 / radius_;
  }
  return 0.0;
}

}  // namespace gmwp
