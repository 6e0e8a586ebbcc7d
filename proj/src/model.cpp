#include "gmwp/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gmwp {

namespace {

void check_shapes(const ProblemInstance& P, const CenterMatrix& X) {
  if (X.rows() != P.k() || X.cols() != P.n()) {
    throw std::invalid_argument("CenterMatrix shape does not match instance (k x n)");
  }
  if (!X.allFinite()) {
    throw std::invalid_argument("CenterMatrix has non-finite entries");
  }
}

// Gauge distances rho_F(x^l - a^i) as an m x k matrix; the ball gauges are
// symmetric, so the sign of the difference does not matter and each column
// reduces to a rowwise norm
Eigen::MatrixXd gauge_distances(const ProblemInstance& P, const CenterMatrix& X) {
  const int m = P.m(), k = P.k();
  const double r = P.gauge().radius();
  Eigen::MatrixXd D(m, k);
  for (int l = 0; l < k; ++l) {
    const Eigen::MatrixXd Z = P.demand().rowwise() - X.row(l);
    switch (P.gauge().kind()) {
      case GaugeKind::EuclideanBall:
        D.col(l) = Z.rowwise().norm() / r;
        break;
      case GaugeKind::L1Ball:
        D.col(l) = Z.cwiseAbs().rowwise().sum() / r;
        break;
      case GaugeKind::LinfBall:
        D.col(l) = Z.cwiseAbs().rowwise().maxCoeff() / r;
        break;
    }
  }
  return D;
}

}  // namespace

ProblemInstance::ProblemInstance(Eigen::MatrixXd demand, int k, GaugeSet gauge,
                                 std::vector<std::vector<ConvexRegion>> constraints)
    : A_(std::move(demand)), k_(k), q_(0), gauge_(gauge), constraints_(std::move(constraints)) {
  if (A_.rows() < 2) throw std::invalid_argument("ProblemInstance: need m >= 2 demand points");
  if (k_ < 1 || k_ > A_.rows()) {
    throw std::invalid_argument("ProblemInstance: need 1 <= k <= m");
  }
  if (!A_.allFinite()) throw std::invalid_argument("ProblemInstance: non-finite demand matrix");
  if (!constraints_.empty()) {
    if (static_cast<int>(constraints_.size()) != k_) {
      throw std::invalid_argument("ProblemInstance: need one constraint list per center");
    }
    q_ = static_cast<int>(constraints_.front().size());
    for (const auto& list : constraints_) {
      if (static_cast<int>(list.size()) != q_) {
        throw std::invalid_argument("ProblemInstance: constraint lists must have equal length");
      }
      for (const auto& region : list) {
        if (region.dim() != A_.cols()) {
          throw std::invalid_argument("ProblemInstance: constraint region dimension mismatch");
        }
      }
    }
    if (q_ == 0) constraints_.clear();
  }
  B_ = A_.colwise().sum().replicate(k_, 1);
}

double objective_true(const ProblemInstance& P, const CenterMatrix& X) {
  check_shapes(P, X);
  const Eigen::MatrixXd D = gauge_distances(P, X);
  return D.rowwise().minCoeff().sum();
}

double objective_penalized(const ProblemInstance& P, const CenterMatrix& X, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("objective_penalized: tau must be positive");
  double penalty = 0.0;
  if (P.constrained()) {
    for (int l = 0; l < P.k(); ++l) {
      for (const auto& region : P.constraints()[l]) {
        const double d = region.distance(X.row(l).transpose());
        penalty += d * d;
      }
    }
  }
  return objective_true(P, X) + 0.5 * tau * penalty;
}

std::pair<double, double> dc_components(const ProblemInstance& P, const CenterMatrix& X) {
  check_shapes(P, X);
  const Eigen::MatrixXd D = gauge_distances(P, X);
  double g = D.sum();
  double h = 0.0;
  for (int i = 0; i < P.m(); ++i) {
    const double row_sum = D.row(i).sum();
    h += row_sum - D.row(i).minCoeff();
  }
  return {g, h};
}

double value_G(const ProblemInstance& P, const CenterMatrix& X, double mu, double tau) {
  check_shapes(P, X);
  double quad = 0.0;
  for (int l = 0; l < P.k(); ++l) {
    quad += (P.demand().rowwise() - X.row(l)).squaredNorm();
  }
  double val = quad / (2.0 * mu);
  if (tau > 0.0 && P.constrained()) {
    val += 0.5 * tau * P.q() * X.squaredNorm();
  }
  return val;
}

double value_H1(const ProblemInstance& P, const CenterMatrix& X, double mu) {
  check_shapes(P, X);
  const double pr = 1.0 / P.gauge().radius();  // polar radius
  double acc = 0.0;
  for (int l = 0; l < P.k(); ++l) {
    const Eigen::MatrixXd Z = ((-P.demand()).rowwise() + X.row(l)) / mu;
    switch (P.gauge().kind()) {
      case GaugeKind::EuclideanBall:
        acc += (Z.rowwise().norm().array() - pr).max(0.0).square().sum();
        break;
      case GaugeKind::L1Ball:
        // polar is the linf box: the squared distance splits per coordinate
        acc += (Z.array().abs() - pr).max(0.0).square().sum();
        break;
      case GaugeKind::LinfBall:
        for (int i = 0; i < P.m(); ++i) {
          const double d = P.gauge().polar_distance(Z.row(i).transpose());
          acc += d * d;
        }
        break;
    }
  }
  return 0.5 * mu * acc;
}

double value_H2(const ProblemInstance& P, const CenterMatrix& X) {
  check_shapes(P, X);
  const Eigen::MatrixXd D = gauge_distances(P, X);
  double h2 = 0.0;
  for (int i = 0; i < P.m(); ++i) {
    h2 += D.row(i).sum() - D.row(i).minCoeff();
  }
  return h2;
}

double value_Htau(const ProblemInstance& P, const CenterMatrix& X, double tau) {
  if (tau <= 0.0 || !P.constrained()) return 0.0;
  double acc = 0.0;
  for (int l = 0; l < P.k(); ++l) {
    for (const auto& region : P.constraints()[l]) {
      acc += region.phi(X.row(l).transpose());
    }
  }
  return 0.5 * tau * acc;
}

double smoothed_objective(const ProblemInstance& P, const CenterMatrix& X, double mu,
                          double tau) {
  if (!(mu > 0.0)) throw std::invalid_argument("smoothed_objective: mu must be positive");
  if (tau < 0.0) throw std::invalid_argument("smoothed_objective: tau must be nonnegative");
  return value_G(P, X, mu, tau) - value_H1(P, X, mu) - value_H2(P, X) -
         value_Htau(P, X, tau);
}

Eigen::MatrixXd grad_G(const ProblemInstance& P, const CenterMatrix& X, double mu, double tau) {
  check_shapes(P, X);
  const double tq = (P.constrained() && tau > 0.0) ? tau * P.q() : 0.0;
  return (P.m() / mu + tq) * X - P.B() / mu;
}

CenterMatrix grad_G_conj(const ProblemInstance& P, const Eigen::MatrixXd& Y, double mu,
                         double tau) {
  if (!(mu > 0.0)) throw std::invalid_argument("grad_G_conj: mu must be positive");
  const double tq = (P.constrained() && tau > 0.0) ? tau * P.q() : 0.0;
  return (P.B() + mu * Y) / (P.m() + mu * tq);
}

Eigen::MatrixXd grad_H1(const ProblemInstance& P, const CenterMatrix& X, double mu) {
  check_shapes(P, X);
  const double pr = 1.0 / P.gauge().radius();  // polar radius
  Eigen::MatrixXd G = Eigen::MatrixXd::Zero(P.k(), P.n());
  for (int l = 0; l < P.k(); ++l) {
    const Eigen::MatrixXd Z = ((-P.demand()).rowwise() + X.row(l)) / mu;
    switch (P.gauge().kind()) {
      case GaugeKind::EuclideanBall: {
        // z - proj(z) = (1 - pr/|z|)_+ z
        const Eigen::ArrayXd nz = Z.rowwise().norm().array().max(1e-300);
        const Eigen::ArrayXd coef = (1.0 - pr / nz).max(0.0);
        G.row(l) = (Z.array().colwise() * coef).colwise().sum();
        break;
      }
      case GaugeKind::L1Ball:
        // polar is the linf box: per-coordinate soft shrinkage
        G.row(l) = (Z.array().sign() * (Z.array().abs() - pr).max(0.0)).colwise().sum();
        break;
      case GaugeKind::LinfBall:
        for (int i = 0; i < P.m(); ++i) {
          const Eigen::VectorXd z = Z.row(i).transpose();
          G.row(l) += (z - P.gauge().polar_projection(z)).transpose();
        }
        break;
    }
  }
  return G;
}

Eigen::MatrixXd subgrad_H2(const ProblemInstance& P, const CenterMatrix& X) {
  check_shapes(P, X);
  Eigen::MatrixXd V = Eigen::MatrixXd::Zero(P.k(), P.n());
  if (P.k() == 1) return V;
  const Eigen::MatrixXd D = gauge_distances(P, X);
  // argmax_r Q^{i,r} = argmin_r rho_F(x^r - a^i); smallest index on ties
  Eigen::VectorXi lstar(P.m());
  for (int i = 0; i < P.m(); ++i) {
    int idx = 0;
    D.row(i).minCoeff(&idx);
    lstar[i] = idx;
  }
  const double r = P.gauge().radius();
  for (int j = 0; j < P.k(); ++j) {
    const Eigen::MatrixXd Z = (-P.demand()).rowwise() + X.row(j);
    switch (P.gauge().kind()) {
      case GaugeKind::EuclideanBall: {
        const Eigen::ArrayXd nz = Z.rowwise().norm().array();
        Eigen::ArrayXd coef(P.m());
        for (int i = 0; i < P.m(); ++i) {
          coef[i] = (lstar[i] == j || nz[i] == 0.0) ? 0.0 : 1.0 / (nz[i] * r);
        }
        V.row(j) = (Z.array().colwise() * coef).colwise().sum();
        break;
      }
      case GaugeKind::L1Ball: {
        Eigen::ArrayXd mask(P.m());
        for (int i = 0; i < P.m(); ++i) mask[i] = lstar[i] == j ? 0.0 : 1.0 / r;
        V.row(j) = (Z.array().sign().colwise() * mask).colwise().sum();
        break;
      }
      case GaugeKind::LinfBall:
        for (int i = 0; i < P.m(); ++i) {
          if (lstar[i] == j) continue;
          V.row(j) += P.gauge().subgradient(Z.row(i).transpose()).transpose();
        }
        break;
    }
  }
  return V;
}

Eigen::MatrixXd grad_Htau(const ProblemInstance& P, const CenterMatrix& X, double tau) {
  check_shapes(P, X);
  if (tau < 0.0) throw std::invalid_argument("grad_Htau: tau must be nonnegative");
  Eigen::MatrixXd U = Eigen::MatrixXd::Zero(P.k(), P.n());
  if (tau == 0.0 || !P.constrained()) return U;
  for (int l = 0; l < P.k(); ++l) {
    for (const auto& region : P.constraints()[l]) {
      U.row(l) += region.project(X.row(l).transpose()).transpose();
    }
  }
  return tau * U;
}

}  // namespace gmwp
