#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gmwp/regions.hpp"

using gmwp::ConvexRegion;

TEST_CASE("region_projection examples") {
  const auto ball = ConvexRegion::ball(Eigen::Vector2d(0, 0), 1.0);
  Eigen::VectorXd p = ball.project(Eigen::Vector2d(2, 0));
  CHECK(p[0] == doctest::Approx(1.0));
  CHECK(p[1] == 0.0);

  const auto box = ConvexRegion::box(Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 1));
  Eigen::VectorXd q = box.project(Eigen::Vector2d(2, -1));
  CHECK(q[0] == doctest::Approx(1.0));
  CHECK(q[1] == doctest::Approx(0.0));

  const auto off = ConvexRegion::ball(Eigen::Vector2d(30, 40), 7.0);
  Eigen::VectorXd r = off.project(Eigen::Vector2d(30, 50));
  CHECK(r[0] == doctest::Approx(30.0));
  CHECK(r[1] == doctest::Approx(47.0));
}

TEST_CASE("region_distance examples") {
  const auto ball = ConvexRegion::ball(Eigen::Vector2d(0, 0), 1.0);
  CHECK(ball.distance(Eigen::Vector2d(2, 0)) == doctest::Approx(1.0));
  const auto box = ConvexRegion::box(Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 1));
  CHECK(box.distance(Eigen::Vector2d(0.5, 0.5)) == 0.0);
  CHECK(box.distance(Eigen::Vector2d(2, 2)) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("phi_value examples") {
  const auto ball = ConvexRegion::ball(Eigen::Vector2d(0, 0), 1.0);
  CHECK(ball.phi(Eigen::Vector2d(2, 0)) == doctest::Approx(3.0));
  CHECK(ball.phi(Eigen::Vector2d(0.25, 0.5)) ==
        doctest::Approx(Eigen::Vector2d(0.25, 0.5).squaredNorm()));
  const auto box = ConvexRegion::box(Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 1));
  CHECK(box.phi(Eigen::Vector2d(2, 2)) == doctest::Approx(6.0));
}

namespace {

// 1D refining grid maximization of a smooth function over [lo, hi]
template <typename F>
double maximize_1d(F f, double lo, double hi) {
  const double lo0 = lo, hi0 = hi;
  double best = -1e300;
  double best_t = lo;
  for (int level = 0; level < 8; ++level) {
    const int steps = 2000;
    for (int i = 0; i <= steps; ++i) {
      const double t = lo + (hi - lo) * i / steps;
      const double val = f(t);
      if (val > best) {
        best = val;
        best_t = t;
      }
    }
    const double spacing = (hi - lo) / steps;
    lo = std::max(lo0, best_t - 2.0 * spacing);
    hi = std::min(hi0, best_t + 2.0 * spacing);
  }
  return best;
}

}  // namespace

TEST_CASE("phi agrees with direct maximization") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  // sup_{w in C} 2<x,w> - |w|^2, computed without using project()

  // ball: the unconstrained maximizer is w = x; otherwise the maximum sits on
  // the boundary circle, which a 1D sweep over the angle covers
  const Eigen::Vector2d c(0.5, -0.25);
  const double r = 1.5;
  const auto ball = ConvexRegion::ball(c, r);
  for (int t = 0; t < 8; ++t) {
    Eigen::Vector2d x(u(rng), u(rng));
    double best;
    if ((x - c).norm() <= r) {
      best = x.squaredNorm();
    } else {
      best = maximize_1d(
          [&](double theta) {
            Eigen::Vector2d w = c + r * Eigen::Vector2d(std::cos(theta), std::sin(theta));
            return 2.0 * x.dot(w) - w.squaredNorm();
          },
          0.0, 2.0 * M_PI);
    }
    CHECK(ball.phi(x) == doctest::Approx(best).epsilon(1e-8));
  }

  // box: the objective is separable, so each coordinate maximizes on its own
  const Eigen::Vector2d lo(-1, 0), hi(2, 1);
  const auto box = ConvexRegion::box(lo, hi);
  for (int t = 0; t < 8; ++t) {
    Eigen::Vector2d x(u(rng), u(rng));
    double best = 0.0;
    for (int j = 0; j < 2; ++j) {
      best += maximize_1d([&](double w) { return 2.0 * x[j] * w - w * w; }, lo[j], hi[j]);
    }
    CHECK(box.phi(x) == doctest::Approx(best).epsilon(1e-8));
  }
}

TEST_CASE("projection is idempotent and nonexpansive") {
  const auto ball = ConvexRegion::ball(Eigen::Vector3d(1, 2, 3), 2.0);
  const auto box = ConvexRegion::box(Eigen::Vector3d(-1, -1, -1), Eigen::Vector3d(1, 2, 3));
  std::mt19937_64 rng(22);
  std::normal_distribution<double> gauss;
  for (const ConvexRegion* region : {&ball, &box}) {
    for (int t = 0; t < 300; ++t) {
      Eigen::VectorXd x(3), y(3);
      for (int i = 0; i < 3; ++i) {
        x[i] = 4.0 * gauss(rng);
        y[i] = 4.0 * gauss(rng);
      }
      const Eigen::VectorXd px = region->project(x);
      CHECK((region->project(px) - px).norm() < 1e-12);
      CHECK((px - region->project(y)).norm() <= (x - y).norm() + 1e-12);
    }
  }
}

TEST_CASE("half phi gradient is the projection (finite differences)") {
  const auto ball = ConvexRegion::ball(Eigen::Vector2d(0.3, 0.7), 1.2);
  const auto box = ConvexRegion::box(Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 1));
  std::mt19937_64 rng(23);
  std::normal_distribution<double> gauss;
  const double h = 1e-6;
  for (const ConvexRegion* region : {&ball, &box}) {
    for (int t = 0; t < 40; ++t) {
      Eigen::VectorXd x(2);
      x << 3.0 * gauss(rng), 3.0 * gauss(rng);
      const Eigen::VectorXd p = region->project(x);
      for (int j = 0; j < 2; ++j) {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(2);
        e[j] = h;
        const double fd = (region->phi(x + e) - region->phi(x - e)) / (4.0 * h);
        CHECK(fd == doctest::Approx(p[j]).epsilon(1e-5).scale(1.0 + std::abs(p[j])));
      }
    }
  }
}

TEST_CASE("construction validation") {
  CHECK_THROWS_AS(ConvexRegion::ball(Eigen::Vector2d(0, 0), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(ConvexRegion::box(Eigen::Vector2d(1, 1), Eigen::Vector2d(0, 0)),
                  std::invalid_argument);
}
