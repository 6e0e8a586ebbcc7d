#include "gmwp/datasets.hpp"

#include <cmath>
#include <random>

namespace gmwp {

Eigen::MatrixXd triangle_points() {
  Eigen::MatrixXd A(3, 2);
  A << 0, 0, 1, 0, 0, 1;
  return A;
}

Eigen::MatrixXd square_points() {
  Eigen::MatrixXd A(4, 2);
  A << 0, 0, 1, 0, 0, 1, 1, 1;
  return A;
}

Eigen::MatrixXd four_circles_points(int per_circle, double spread, double circle_radius,
                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double cx[4] = {spread, -spread, -spread, spread};
  const double cy[4] = {spread, spread, -spread, -spread};
  Eigen::MatrixXd A(4 * per_circle, 2);
  int row = 0;
  for (int c = 0; c < 4; ++c) {
    for (int i = 0; i < per_circle; ++i) {
      const double t = angle(rng);
      const double r = circle_radius * std::sqrt(unit(rng));  // uniform over the disk
      A(row, 0) = cx[c] + r * std::cos(t);
      A(row, 1) = cy[c] + r * std::sin(t);
      ++row;
    }
  }
  return A;
}

Eigen::MatrixXd clustered_plane_points(int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  // cluster weights roughly mimic a population map: a few dense areas and
  // scattered background over a wide box
  const double cx[6] = {-74.0, -87.6, -118.2, -95.4, -84.4, -104.9};
  const double cy[6] = {40.7, 41.9, 34.1, 29.8, 33.7, 39.7};
  std::discrete_distribution<int> which{4, 3, 4, 2, 2, 2};
  std::normal_distribution<double> jitter(0.0, 2.5);
  std::uniform_real_distribution<double> bg_x(-124.0, -68.0);
  std::uniform_real_distribution<double> bg_y(26.0, 48.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::MatrixXd A(m, 2);
  for (int i = 0; i < m; ++i) {
    if (unit(rng) < 0.15) {
      A(i, 0) = bg_x(rng);
      A(i, 1) = bg_y(rng);
    } else {
      const int c = which(rng);
      A(i, 0) = cx[c] + jitter(rng);
      A(i, 1) = cy[c] + jitter(rng);
    }
  }
  return A;
}

}  // namespace gmwp
