#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gmwp/gauge.hpp"
#include "gmwp/regions.hpp"

namespace gmwp {

/// k x n matrix of candidate centers, one row per center.
using CenterMatrix = Eigen::MatrixXd;

/// Immutable problem data: demand matrix A (m x n), center count k, the
/// gauge, and an optional per-center list of q constraint regions. Caches
/// the k x n matrix B whose every row is the column sum of A.
class ProblemInstance {
 public:
  ProblemInstance(Eigen::MatrixXd demand, int k, GaugeSet gauge,
                  std::vector<std::vector<ConvexRegion>> constraints = {});

  int m() const { return static_cast<int>(A_.rows()); }
  int n() const { return static_cast<int>(A_.cols()); }
  int k() const { return k_; }
  int q() const { return q_; }
  bool constrained() const { return q_ > 0; }
  const Eigen::MatrixXd& demand() const { return A_; }
  const GaugeSet& gauge() const { return gauge_; }
  const std::vector<std::vector<ConvexRegion>>& constraints() const { return constraints_; }
  const Eigen::MatrixXd& B() const { return B_; }

 private:
  Eigen::MatrixXd A_;
  int k_;
  int q_;
  GaugeSet gauge_;
  std::vector<std::vector<ConvexRegion>> constraints_;
  Eigen::MatrixXd B_;
};

/// f_F(X) = sum_i min_l rho_F(x^l - a^i).
double objective_true(const ProblemInstance& P, const CenterMatrix& X);

/// f_tau(X) = f_F(X) + (tau/2) sum_l sum_j d(x^l; Omega_j^l)^2.
double objective_penalized(const ProblemInstance& P, const CenterMatrix& X, double tau);

/// The DC split (g, h) with g - h = f_F exactly.
std::pair<double, double> dc_components(const ProblemInstance& P, const CenterMatrix& X);

/// Nesterov-smoothed surrogate f_mu (tau = 0) or f_{tau,mu} (tau > 0).
double smoothed_objective(const ProblemInstance& P, const CenterMatrix& X, double mu,
                          double tau = 0.0);

// Values of the individual convex pieces, G - (H1 + H2 + Htau) = smoothed objective.
double value_G(const ProblemInstance& P, const CenterMatrix& X, double mu, double tau);
double value_H1(const ProblemInstance& P, const CenterMatrix& X, double mu);
double value_H2(const ProblemInstance& P, const CenterMatrix& X);
double value_Htau(const ProblemInstance& P, const CenterMatrix& X, double tau);

/// grad G_{tau,mu}(X) = (m/mu) X - B/mu + tau q X.
Eigen::MatrixXd grad_G(const ProblemInstance& P, const CenterMatrix& X, double mu, double tau);

/// grad G*_{tau,mu}(Y) = (B + mu Y) / (m + mu tau q).
CenterMatrix grad_G_conj(const ProblemInstance& P, const Eigen::MatrixXd& Y, double mu,
                         double tau);

/// Row l: sum_i [ (x^l - a^i)/mu - P((x^l - a^i)/mu; F°) ].
Eigen::MatrixXd grad_H1(const ProblemInstance& P, const CenterMatrix& X, double mu);

/// Deterministic subgradient of the max-sum part H2 (ties to smallest index).
Eigen::MatrixXd subgrad_H2(const ProblemInstance& P, const CenterMatrix& X);

/// Row l: tau * sum_j P(x^l; Omega_j^l); zero when q = 0 or tau = 0.
Eigen::MatrixXd grad_Htau(const ProblemInstance& P, const CenterMatrix& X, double tau);

}  // namespace gmwp
