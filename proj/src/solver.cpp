#include "gmwp/solver.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace gmwp {

void SolverParams::validate() const {
  if (!(alpha > 0.0)) throw std::invalid_argument("SolverParams: alpha must be > 0");
  if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("SolverParams: beta in (0,1)");
  if (!(gamma > 1.0)) throw std::invalid_argument("SolverParams: gamma must be > 1");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("SolverParams: delta in (0,1)");
  if (!(sigma > 1.0)) throw std::invalid_argument("SolverParams: sigma must be > 1");
  if (!(mu0 > mu_f && mu_f > 0.0)) throw std::invalid_argument("SolverParams: need mu0 > mu_f > 0");
  if (!(tau0 > 0.0)) throw std::invalid_argument("SolverParams: tau0 must be > 0");
  if (!(tau_f > tau0)) throw std::invalid_argument("SolverParams: need tau_f > tau0");
  if (!(lambda_start > lambda_f && lambda_f > 0.0)) {
    throw std::invalid_argument("SolverParams: need lambda_start > lambda_f > 0");
  }
  if (lambda_skip < 1) throw std::invalid_argument("SolverParams: lambda_skip must be >= 1");
  if (max_inner < 1) throw std::invalid_argument("SolverParams: max_inner must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("SolverParams: tol must be > 0");
  if (!(lambda_min_guard > 0.0)) {
    throw std::invalid_argument("SolverParams: lambda_min_guard must be > 0");
  }
}

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::Dca: return "dca";
    case Variant::Abdca: return "abdca";
    case Variant::AbdcaSkip: return "abdca-skip";
  }
  return "?";
}

std::pair<CenterMatrix, Eigen::MatrixXd> dca_step(const ProblemInstance& P,
                                                  const CenterMatrix& X, double mu,
                                                  double tau) {
  Eigen::MatrixXd Y = grad_H1(P, X, mu) + subgrad_H2(P, X);
  if (tau > 0.0 && P.constrained()) Y += grad_Htau(P, X, tau);
  return {grad_G_conj(P, Y, mu, tau), Y};
}

double adaptive_trial(const std::deque<StepPair>& history, double gamma, double lambda_start) {
  if (gamma <= 1.0) throw std::invalid_argument("adaptive_trial: gamma must be > 1");
  if (history.size() < 2) return lambda_start;
  const StepPair& prev2 = history[history.size() - 2];
  const StepPair& prev1 = history.back();
  if (prev2.accepted == prev2.trial && prev1.accepted == prev1.trial) {
    return gamma * prev1.accepted;
  }
  return prev1.accepted;
}

std::pair<double, int> armijo_search(const std::function<double(const CenterMatrix&)>& merit,
                                     const CenterMatrix& Z, const Eigen::MatrixXd& d,
                                     double lambda_bar, double alpha, double beta,
                                     double lambda_min_guard) {
  const double d2 = d.squaredNorm();
  if (!(lambda_bar > 0.0) || d2 == 0.0) return {0.0, 0};
  const double fz = merit(Z);
  double lambda = lambda_bar;
  int backtracks = 0;
  while (lambda >= lambda_min_guard) {
    if (merit(Z + lambda * d) <= fz - alpha * lambda * lambda * d2) {
      return {lambda, backtracks};
    }
    lambda *= beta;
    ++backtracks;
  }
  return {0.0, backtracks};
}

namespace {

std::function<double(const CenterMatrix&)> make_merit(const ProblemInstance& P, Merit merit,
                                                      double mu, double tau) {
  switch (merit) {
    case Merit::TrueObjective:
      return [&P](const CenterMatrix& W) { return objective_true(P, W); };
    case Merit::PenalizedObjective:
      if (P.constrained() && tau > 0.0) {
        return [&P, tau](const CenterMatrix& W) { return objective_penalized(P, W, tau); };
      }
      return [&P](const CenterMatrix& W) { return objective_true(P, W); };
    case Merit::SmoothedObjective:
      return [&P, mu, tau](const CenterMatrix& W) { return smoothed_objective(P, W, mu, tau); };
  }
  return [&P](const CenterMatrix& W) { return objective_true(P, W); };
}

}  // namespace

SolverReport solve(const ProblemInstance& P, const CenterMatrix& X0, const SolverParams& params,
                   Variant variant) {
  params.validate();
  if (X0.rows() != P.k() || X0.cols() != P.n() || !X0.allFinite()) {
    throw std::invalid_argument("solve: X0 must be a finite k x n matrix");
  }
  using clock = std::chrono::steady_clock;

  SolverReport report;
  CenterMatrix X = X0;
  double mu = params.mu0;
  double tau = P.constrained() ? params.tau0 : 0.0;

  std::deque<StepPair> history;
  bool suppressing = false;  // skip variant: line search disabled, waiting for a probe
  int until_probe = 0;
  int stage = 0;
  long iter = 0;

  while (mu > params.mu_f && (!P.constrained() || tau < params.tau_f)) {
    ++stage;
    int stage_iters = 0;
    // the self-adaptive trial step is indexed by the inner counter, so its
    // two-iteration memory starts fresh with every (mu, tau) stage
    history.clear();
    suppressing = false;
    until_probe = 0;
    const auto merit_fn = make_merit(P, params.merit, mu, tau);

    for (int p = 0; p < params.max_inner; ++p) {
      const auto t0 = clock::now();
      TraceRow row;
      row.stage = stage;
      row.mu = mu;
      row.tau = tau;

      const auto [Z, Y] = dca_step(P, X, mu, tau);
      const Eigen::MatrixXd d = Z - X;
      const double dist = d.norm();
      bool stop_inner = false;
      CenterMatrix Xnext;

      if (variant == Variant::Dca) {
        Xnext = Z;
        row.skipped = true;
      } else if (variant == Variant::AbdcaSkip && dist <= 1e-6) {
        Xnext = Z;
        row.skipped = true;
        stop_inner = true;
      } else {
        bool search = dist > 0.0;
        if (variant == Variant::AbdcaSkip && suppressing) {
          if (until_probe > 0) {
            --until_probe;
            search = false;
          }
          // until_probe == 0: probe once with a fresh trial step
        }
        if (search) {
          double trial = adaptive_trial(history, params.gamma, params.lambda_start);
          if (trial <= 0.0) trial = params.lambda_start;  // restart after a zero step
          const auto [lambda, backtracks] =
              armijo_search(merit_fn, Z, d, trial, params.alpha, params.beta,
                            params.lambda_min_guard);
          Xnext = Z + lambda * d;
          history.push_back({trial, lambda});
          if (history.size() > 2) history.pop_front();
          row.lambda_trial = trial;
          row.lambda_accepted = lambda;
          row.backtracks = backtracks;
          if (variant == Variant::AbdcaSkip) {
            suppressing = lambda < params.lambda_f;
            until_probe = suppressing ? params.lambda_skip - 1 : 0;
          }
        } else {
          Xnext = Z;
          row.skipped = true;
        }
      }

      const double f = objective_true(P, Xnext);
      if (!std::isfinite(f)) {
        report.failed = true;
        report.failure = "non-finite objective at stage " + std::to_string(stage) +
                         ", iteration " + std::to_string(iter);
        report.X = X;
        report.value = objective_true(P, X);
        report.total_iterations = iter;
        return report;
      }
      row.f_value = f;
      row.f_z = objective_true(P, Z);
      row.merit_value = merit_fn(Xnext);
      row.smoothed = smoothed_objective(P, Xnext, mu, tau);
      row.step_fro = (Xnext - X).norm();
      row.iter = static_cast<int>(iter);
      row.wall_ns =
          std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - t0).count();

      X = std::move(Xnext);
      report.trace.push_back(row);
      ++iter;
      ++stage_iters;

      if (stop_inner || row.step_fro < params.tol) break;
    }

    report.stages.push_back({stage, mu, tau, stage_iters, objective_true(P, X)});
    mu *= params.delta;
    if (P.constrained()) tau *= params.sigma;
  }

  report.X = X;
  report.value = objective_true(P, X);
  report.total_iterations = iter;
  return report;
}

}  // namespace gmwp
