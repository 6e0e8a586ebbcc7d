#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gmwp/analysis.hpp"
#include "gmwp/harness.hpp"
#include "gmwp/model.hpp"
#include "gmwp/solver.hpp"

namespace gmwp {

/// Comma-separated numeric rows, optional header line (auto-detected when
/// the first row has a non-numeric cell). Throws with row/column context.
Eigen::MatrixXd load_points_csv(const std::string& path);

/// TSPLIB NODE_COORD_SECTION (EUC_2D subset); node indices are discarded.
Eigen::MatrixXd load_points_tsplib(const std::string& path);

/// Per-center region literals:
///   center <1-based index>
///   ball <c_1> ... <c_n> <radius>
///   box <lo_1> ... <lo_n> <hi_1> ... <hi_n>
/// Every center must receive the same number of regions.
std::vector<std::vector<ConvexRegion>> load_constraints(const std::string& path, int k, int n);

nlohmann::json solve_result_json(const ProblemInstance& P, const SolverReport& report);
nlohmann::json certificate_json(const Certificate& cert);
nlohmann::json oracle_json(const OracleResult& result);
nlohmann::json compare_json(const CompareReport& report);

/// Trace rows in the fixed schema: stage,iter,mu,tau,lambda_trial,
/// lambda_accepted,backtracks,f_value,step_fro,skipped,wall_ns.
std::string trace_csv(const std::vector<TraceRow>& trace);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace gmwp
