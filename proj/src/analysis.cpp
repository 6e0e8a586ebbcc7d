#include "gmwp/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace gmwp {

namespace {

Eigen::MatrixXd gauge_distances(const ProblemInstance& P, const CenterMatrix& X) {
  Eigen::MatrixXd D(P.m(), P.k());
  for (int i = 0; i < P.m(); ++i) {
    for (int l = 0; l < P.k(); ++l) {
      D(i, l) = P.gauge().value(X.row(l).transpose() - P.demand().row(i).transpose());
    }
  }
  return D;
}

constexpr long kSingleSourceCap = 100000;

// Weiszfeld fixed point for the Euclidean median, with the anchor rule when
// an iterate lands on a data point.
SingleSourceResult weiszfeld(const Eigen::MatrixXd& pts, double tol) {
  const Eigen::Index p = pts.rows();
  const double scale = 1.0 + pts.cwiseAbs().maxCoeff();
  const double anchor_eps = 1e-13 * scale;

  SingleSourceResult res;
  res.x = pts.colwise().mean().transpose();

  for (long it = 0; it < kSingleSourceCap; ++it) {
    ++res.iterations;
    // anchor handling: iterate coincides with a data point
    Eigen::Index anchor = -1;
    for (Eigen::Index i = 0; i < p; ++i) {
      if ((res.x - pts.row(i).transpose()).norm() <= anchor_eps) {
        anchor = i;
        break;
      }
    }
    if (anchor >= 0) {
      Eigen::VectorXd R = Eigen::VectorXd::Zero(pts.cols());
      double inv_sum = 0.0;
      double multiplicity = 0.0;
      for (Eigen::Index i = 0; i < p; ++i) {
        const Eigen::VectorXd diff = pts.row(anchor).transpose() - pts.row(i).transpose();
        const double nrm = diff.norm();
        if (nrm <= anchor_eps) {
          multiplicity += 1.0;
        } else {
          R += diff / nrm;
          inv_sum += 1.0 / nrm;
        }
      }
      const double rn = R.norm();
      if (rn <= multiplicity + 1e-12 || inv_sum == 0.0) {
        res.x = pts.row(anchor).transpose();
        break;  // the data point satisfies the subgradient condition
      }
      const double step = (rn - multiplicity) / inv_sum;
      res.x = pts.row(anchor).transpose() - (step / rn) * R;
      continue;
    }

    Eigen::VectorXd num = Eigen::VectorXd::Zero(pts.cols());
    double den = 0.0;
    Eigen::VectorXd grad = Eigen::VectorXd::Zero(pts.cols());
    for (Eigen::Index i = 0; i < p; ++i) {
      const Eigen::VectorXd diff = res.x - pts.row(i).transpose();
      const double nrm = diff.norm();
      num += pts.row(i).transpose() / nrm;
      den += 1.0 / nrm;
      grad += diff / nrm;
    }
    const Eigen::VectorXd next = num / den;
    const double step = (next - res.x).norm();
    res.x = next;
    if (step <= 1e-14 * scale || grad.norm() <= tol / scale) break;
  }

  for (Eigen::Index i = 0; i < p; ++i) {
    res.value += (res.x - pts.row(i).transpose()).norm();
  }
  return res;
}

// Exact minimizer of sum_i ||x - a^i||_1: coordinate-wise median
// (midpoint of the two middle order statistics for even counts).
SingleSourceResult l1_median(const Eigen::MatrixXd& pts) {
  const Eigen::Index p = pts.rows(), n = pts.cols();
  SingleSourceResult res;
  res.x.resize(n);
  std::vector<double> col(static_cast<size_t>(p));
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < p; ++i) col[static_cast<size_t>(i)] = pts(i, j);
    std::sort(col.begin(), col.end());
    const size_t mid = col.size() / 2;
    res.x[j] = (col.size() % 2 == 1) ? col[mid] : 0.5 * (col[mid - 1] + col[mid]);
  }
  for (Eigen::Index i = 0; i < p; ++i) {
    res.value += (res.x - pts.row(i).transpose()).lpNorm<1>();
  }
  res.iterations = 1;
  return res;
}

// Smoothing continuation for gauges without a closed-form route: gradient
// steps on the smoothed single-source objective while mu is driven down
// until the smoothing gap is below tol.
SingleSourceResult smoothed_descent(const Eigen::MatrixXd& pts, const GaugeSet& gauge,
                                    double tol) {
  const Eigen::Index p = pts.rows();
  const double polar = gauge.norm_polar(static_cast<int>(pts.cols()));
  const double scale = 1.0 + pts.cwiseAbs().maxCoeff();
  const double mu_min = std::max(tol / (static_cast<double>(p) * polar * polar), 1e-14);

  SingleSourceResult res;
  res.x = pts.colwise().mean().transpose();
  double mu = scale;
  while (true) {
    for (;;) {
      if (res.iterations >= kSingleSourceCap) {
        throw std::runtime_error("single_source_solve: iteration cap reached before tolerance");
      }
      ++res.iterations;
      Eigen::VectorXd grad = Eigen::VectorXd::Zero(pts.cols());
      for (Eigen::Index i = 0; i < p; ++i) {
        grad += gauge.polar_projection((res.x - pts.row(i).transpose()) / mu);
      }
      const Eigen::VectorXd next = res.x - (mu / static_cast<double>(p)) * grad;
      const double step = (next - res.x).norm();
      res.x = next;
      if (step <= std::max(mu * 1e-10, 1e-15 * scale)) break;
    }
    if (mu <= mu_min) break;
    mu = std::max(mu * 0.25, mu_min);
  }
  for (Eigen::Index i = 0; i < p; ++i) {
    res.value += gauge.value(res.x - pts.row(i).transpose());
  }
  return res;
}

}  // namespace

Clustering natural_clustering(const ProblemInstance& P, const CenterMatrix& X) {
  const Eigen::MatrixXd D = gauge_distances(P, X);
  Clustering cl;
  cl.clusters.assign(static_cast<size_t>(P.k()), {});
  cl.attraction.assign(static_cast<size_t>(P.k()), {});
  cl.level_sets.assign(static_cast<size_t>(P.m()), {});
  for (int i = 0; i < P.m(); ++i) {
    const double minv = D.row(i).minCoeff();
    int owner = -1;
    for (int l = 0; l < P.k(); ++l) {
      if (D(i, l) == minv) {
        cl.attraction[static_cast<size_t>(l)].push_back(i);
        cl.level_sets[static_cast<size_t>(i)].push_back(l);
        if (owner < 0) owner = l;  // ties absorbed by the earliest center
      }
    }
    cl.clusters[static_cast<size_t>(owner)].push_back(i);
  }
  return cl;
}

std::vector<std::vector<int>> level_index_sets(const ProblemInstance& P, const CenterMatrix& X) {
  const Eigen::MatrixXd D = gauge_distances(P, X);
  const Clustering cl = natural_clustering(P, X);
  std::vector<std::vector<int>> via_max(static_cast<size_t>(P.m()));
  for (int i = 0; i < P.m(); ++i) {
    // h_{i,l} summed directly, as in the partial-sum definition
    Eigen::VectorXd h(P.k());
    for (int l = 0; l < P.k(); ++l) {
      double s = 0.0;
      for (int r = 0; r < P.k(); ++r) {
        if (r != l) s += D(i, r);
      }
      h[l] = s;
    }
    const double hmax = h.maxCoeff();
    for (int l = 0; l < P.k(); ++l) {
      if (h[l] == hmax) via_max[static_cast<size_t>(i)].push_back(l);
    }
    if (via_max[static_cast<size_t>(i)] != cl.level_sets[static_cast<size_t>(i)]) {
      throw std::logic_error("level_index_sets: max-sum and attraction routes disagree at i=" +
                             std::to_string(i));
    }
  }
  return via_max;
}

SingleSourceResult single_source_solve(const Eigen::MatrixXd& points, const GaugeSet& gauge,
                                       double tol) {
  if (points.rows() < 1) throw std::invalid_argument("single_source_solve: empty point set");
  if (points.rows() == 1) {
    return {points.row(0).transpose(), 0.0, 0};
  }

  SingleSourceResult res;
  switch (gauge.kind()) {
    case GaugeKind::EuclideanBall:
      res = weiszfeld(points, tol * gauge.radius());
      break;
    case GaugeKind::L1Ball:
      res = l1_median(points);
      break;
    case GaugeKind::LinfBall:
      if (points.cols() == 2) {
        // ||z||_inf in R^2 equals ||Tz||_1 for T = [[.5,.5],[.5,-.5]]
        Eigen::MatrixXd rotated(points.rows(), 2);
        rotated.col(0) = 0.5 * (points.col(0) + points.col(1));
        rotated.col(1) = 0.5 * (points.col(0) - points.col(1));
        res = l1_median(rotated);
        const Eigen::VectorXd y = res.x;
        res.x[0] = y[0] + y[1];
        res.x[1] = y[0] - y[1];
      } else {
        return smoothed_descent(points, gauge, tol);
      }
      break;
  }
  res.value /= gauge.radius();
  return res;
}

Certificate local_certificate(const ProblemInstance& P, const CenterMatrix& X, double tol) {
  const Eigen::MatrixXd D = gauge_distances(P, X);
  const Clustering cl = natural_clustering(P, X);

  Certificate cert;
  cert.is_singleton.resize(static_cast<size_t>(P.m()));
  bool all_singleton = true;
  for (int i = 0; i < P.m(); ++i) {
    const bool singleton = cl.level_sets[static_cast<size_t>(i)].size() == 1;
    cert.is_singleton[static_cast<size_t>(i)] = singleton;
    all_singleton = all_singleton && singleton;
    if (P.k() >= 2) {
      Eigen::VectorXd row = D.row(i).transpose();
      std::sort(row.data(), row.data() + row.size());
      if (row[1] - row[0] < 1e-9 && row[1] != row[0]) cert.ambiguous_singleton = true;
    }
  }

  cert.per_center_residual.assign(static_cast<size_t>(P.k()), 0.0);
  bool all_optimal = true;
  for (int l = 0; l < P.k(); ++l) {
    const auto& members = cl.attraction[static_cast<size_t>(l)];
    if (members.empty()) continue;
    Eigen::MatrixXd pts(static_cast<Eigen::Index>(members.size()), P.n());
    double value_at_center = 0.0;
    for (size_t j = 0; j < members.size(); ++j) {
      pts.row(static_cast<Eigen::Index>(j)) = P.demand().row(members[j]);
      value_at_center += D(members[j], l);
    }
    const SingleSourceResult opt =
        single_source_solve(pts, P.gauge(), std::min(tol * 1e-2, 1e-8));
    const double residual = value_at_center - opt.value;
    cert.per_center_residual[static_cast<size_t>(l)] = residual;
    if (residual > tol * (1.0 + std::abs(opt.value))) all_optimal = false;
  }

  if (!all_singleton) {
    cert.status = LocalStatus::Inconclusive;
  } else {
    cert.status = all_optimal ? LocalStatus::Local : LocalStatus::NotLocal;
  }
  return cert;
}

namespace {

struct OracleSearch {
  const ProblemInstance& P;
  double tol;
  std::vector<int> assign;
  OracleResult best;

  explicit OracleSearch(const ProblemInstance& p, double t) : P(p), tol(t) {
    assign.assign(static_cast<size_t>(P.m()), 0);
    best.value = std::numeric_limits<double>::infinity();
  }

  void evaluate() {
    ++best.partitions_examined;
    CenterMatrix X(P.k(), P.n());
    double total = 0.0;
    for (int b = 0; b < P.k(); ++b) {
      std::vector<int> members;
      for (int i = 0; i < P.m(); ++i) {
        if (assign[static_cast<size_t>(i)] == b) members.push_back(i);
      }
      Eigen::MatrixXd pts(static_cast<Eigen::Index>(members.size()), P.n());
      for (size_t j = 0; j < members.size(); ++j) {
        pts.row(static_cast<Eigen::Index>(j)) = P.demand().row(members[j]);
      }
      const SingleSourceResult r = single_source_solve(pts, P.gauge(), tol);
      X.row(b) = r.x.transpose();
      total += r.value;
      if (total >= best.value) return;  // partial sums only grow
    }
    if (total < best.value) {
      best.value = total;
      best.X = X;
    }
  }

  // canonical restricted-growth enumeration of partitions into exactly k blocks
  void recurse(int i, int used) {
    if (P.m() - i < P.k() - used) return;
    if (i == P.m()) {
      if (used == P.k()) evaluate();
      return;
    }
    for (int b = 0; b < used; ++b) {
      assign[static_cast<size_t>(i)] = b;
      recurse(i + 1, used);
    }
    if (used < P.k()) {
      assign[static_cast<size_t>(i)] = used;
      recurse(i + 1, used + 1);
    }
  }
};

}  // namespace

OracleResult brute_force_global(const ProblemInstance& P, double tol) {
  const double combos = std::pow(static_cast<double>(P.k()), static_cast<double>(P.m()));
  if (combos > 1e6) {
    throw std::invalid_argument("brute_force_global: k^m = " + std::to_string(combos) +
                                " exceeds the 1e6 size guard");
  }
  OracleSearch search(P, tol);
  search.recurse(0, 0);
  return search.best;
}

}  // namespace gmwp
