#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gmwp/solver.hpp"

namespace gmwp {

struct CompareConfig {
  int runs = 20;
  std::uint64_t seed = 0;
  Eigen::VectorXd init_lo;  // per-dimension initial box
  Eigen::VectorXd init_hi;
  std::vector<Variant> variants{Variant::Dca, Variant::AbdcaSkip};
  SolverParams params;
  int threads = 1;  // runs are independent; >1 executes them concurrently
};

struct VariantOutcome {
  Variant variant = Variant::Dca;
  long iterations = 0;
  double value = 0.0;
  std::int64_t wall_ns = 0;
  bool failed = false;
};

struct RunRecord {
  int run = 0;
  std::uint64_t x0_hash = 0;
  std::vector<VariantOutcome> outcomes;
};

struct VariantAggregate {
  Variant variant = Variant::Dca;
  double mean_iterations = 0.0;
  double mean_value = 0.0;
  double mean_wall_ns = 0.0;
  double iter_ratio = 1.0;  // DCA mean / this variant's mean
  double time_ratio = 1.0;
  int failures = 0;
};

struct CompareReport {
  std::vector<RunRecord> runs;
  std::vector<VariantAggregate> aggregates;
  bool valid = true;  // false once failures exceed 5% of runs
};

/// Deterministic uniform draw of a k x n start inside the box, keyed on
/// (seed, run_index).
CenterMatrix random_init(const ProblemInstance& P, const Eigen::VectorXd& lo,
                         const Eigen::VectorXd& hi, std::uint64_t seed, int run_index);

/// Runs every requested variant from the same per-run start and aggregates
/// mean iterations / values / wall times plus DCA-relative ratios.
CompareReport compare(const ProblemInstance& P, const CompareConfig& cfg);

/// Ratio-table CSV row block: dataset,gauge,m,n,k,variant,mean_iters,
/// mean_time_ns,iter_ratio,time_ratio.
std::string ratio_csv(const CompareReport& report, const ProblemInstance& P,
                      const std::string& dataset, const std::string& gauge_name,
                      bool header = true);

std::uint64_t matrix_hash(const Eigen::MatrixXd& M);

}  // namespace gmwp
