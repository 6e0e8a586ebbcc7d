#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "gmwp/model.hpp"

namespace gmwp {

enum class Variant { Dca, Abdca, AbdcaSkip };
enum class Merit { TrueObjective, PenalizedObjective, SmoothedObjective };

struct SolverParams {
  double alpha = 0.05;          // Armijo coefficient
  double beta = 0.01;           // backtracking shrink factor, in (0,1)
  double gamma = 2.0;           // trial-step growth factor, > 1
  double delta = 0.5;           // smoothing decrement, in (0,1)
  double sigma = 10.0;          // penalty growth, > 1
  double mu0 = 1.0;
  double mu_f = 1e-6;
  double tau0 = 1.0;
  double tau_f = 1e8;
  double lambda_start = 1.0;
  double lambda_f = 1e-3;       // skip threshold on the accepted step
  int lambda_skip = 30;         // probe period while the search is suppressed
  int max_inner = 5000;         // N, inner-iteration budget per stage
  double tol = 1e-6;            // Frobenius step threshold per stage
  Merit merit = Merit::TrueObjective;
  double lambda_min_guard = 1e-8;  // smallest lambda before backtracking aborts to 0

  void validate() const;
};

struct TraceRow {
  int stage = 0;
  int iter = 0;  // global iteration index
  double mu = 0.0;
  double tau = 0.0;
  double lambda_trial = 0.0;
  double lambda_accepted = 0.0;
  int backtracks = 0;
  double f_value = 0.0;     // true objective at X_{p+1}
  double f_z = 0.0;         // true objective at Z_p
  double merit_value = 0.0; // merit at X_{p+1}
  double smoothed = 0.0;    // f_{tau,mu}(X_{p+1}) at the stage's (mu, tau)
  double step_fro = 0.0;    // ||X_{p+1} - X_p||_F
  bool skipped = false;     // line search not executed this iteration
  std::int64_t wall_ns = 0;
};

struct StageRecord {
  int stage = 0;
  double mu = 0.0;
  double tau = 0.0;
  int iterations = 0;
  double f_end = 0.0;
};

struct SolverReport {
  CenterMatrix X;
  double value = 0.0;  // true objective at the final X
  long total_iterations = 0;
  std::vector<StageRecord> stages;
  std::vector<TraceRow> trace;
  bool failed = false;
  std::string failure;
};

/// One DCA step at fixed (mu, tau): Y = grad H1 + subgrad H2 (+ grad Htau),
/// Z = grad G*(Y). Returns (Z, Y).
std::pair<CenterMatrix, Eigen::MatrixXd> dca_step(const ProblemInstance& P,
                                                  const CenterMatrix& X, double mu,
                                                  double tau);

/// Trial/accepted step pair from one line-searched iteration.
struct StepPair {
  double trial = 0.0;
  double accepted = 0.0;
};

/// Self-adaptive trial step: lambda_start until two line searches have run;
/// then gamma * previous accepted step if the last two searches accepted
/// their trials unshrunk, else the previous accepted step.
double adaptive_trial(const std::deque<StepPair>& history, double gamma, double lambda_start);

/// Backtracking Armijo search along d from Z: largest lambda in
/// {lb, beta*lb, ...} with merit(Z + lambda d) <= merit(Z) - alpha lambda^2 ||d||_F^2,
/// or lambda = 0 once lambda < lambda_min_guard. Returns (lambda, backtracks).
std::pair<double, int> armijo_search(const std::function<double(const CenterMatrix&)>& merit,
                                     const CenterMatrix& Z, const Eigen::MatrixXd& d,
                                     double lambda_bar, double alpha, double beta,
                                     double lambda_min_guard);

SolverReport solve(const ProblemInstance& P, const CenterMatrix& X0, const SolverParams& params,
                   Variant variant);

const char* variant_name(Variant v);

}  // namespace gmwp
