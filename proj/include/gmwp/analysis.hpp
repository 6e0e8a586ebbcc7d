#pragma once

#include <vector>

#include "gmwp/model.hpp"

namespace gmwp {

/// Natural clustering of the demand points with respect to X: A^l are the
/// disjoint clusters (ties absorbed by the earliest center), attraction[l]
/// is the full attraction index set I(x^l), level_sets[i] is L_i(X).
struct Clustering {
  std::vector<std::vector<int>> clusters;
  std::vector<std::vector<int>> attraction;
  std::vector<std::vector<int>> level_sets;
};

enum class LocalStatus { Local, NotLocal, Inconclusive };

struct Certificate {
  std::vector<bool> is_singleton;           // one flag per demand point
  LocalStatus status = LocalStatus::Inconclusive;
  std::vector<double> per_center_residual;  // gap vs. the single-source optimum
  bool ambiguous_singleton = false;         // top-two gauge distances within 1e-9
};

Clustering natural_clustering(const ProblemInstance& P, const CenterMatrix& X);

/// L_i(X) computed both through the max of the h_{i,l} partial sums and
/// through attraction-set membership; throws std::logic_error if the two
/// routes disagree.
std::vector<std::vector<int>> level_index_sets(const ProblemInstance& P, const CenterMatrix& X);

struct SingleSourceResult {
  Eigen::VectorXd x;
  double value = 0.0;
  long iterations = 0;
};

/// Minimizes sum_i rho_F(x - a^i) over the rows of `points` to within tol in
/// value. Euclidean gauge: Weiszfeld fixed point with anchor handling;
/// l1 gauge: exact coordinate-wise median; linf in R^2: exact via the
/// 45-degree rotation onto the l1 case; otherwise smoothing continuation.
SingleSourceResult single_source_solve(const Eigen::MatrixXd& points, const GaugeSet& gauge,
                                       double tol);

/// Theorem-style local-optimality check: every L_i a singleton and every
/// nonempty attraction cluster solved to optimality by its own center.
/// Reports Inconclusive (never NotLocal) when some L_i is not a singleton.
Certificate local_certificate(const ProblemInstance& P, const CenterMatrix& X,
                              double tol = 1e-6);

struct OracleResult {
  CenterMatrix X;
  double value = 0.0;
  long partitions_examined = 0;
};

/// Exhaustive global solve for small instances: enumerates all surjective
/// partitions of the demand points into k clusters and solves each cluster's
/// convex single-source problem. Refuses when k^m > 1e6.
OracleResult brute_force_global(const ProblemInstance& P, double tol = 1e-8);

}  // namespace gmwp
