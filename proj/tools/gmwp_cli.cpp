#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gmwp/analysis.hpp"
#include "gmwp/harness.hpp"
#include "gmwp/io.hpp"
#include "gmwp/model.hpp"
#include "gmwp/solver.hpp"

namespace {

struct CommonOptions {
  std::string data;
  std::string format = "csv";
  std::string gauge = "l2";
  double radius = 1.0;
  int k = 1;
  std::string constraints;
};

gmwp::GaugeSet make_gauge(const CommonOptions& opt) {
  if (opt.gauge == "l2") return gmwp::GaugeSet(gmwp::GaugeKind::EuclideanBall, opt.radius);
  if (opt.gauge == "l1") return gmwp::GaugeSet(gmwp::GaugeKind::L1Ball, opt.radius);
  if (opt.gauge == "linf") return gmwp::GaugeSet(gmwp::GaugeKind::LinfBall, opt.radius);
  throw CLI::ValidationError("--gauge must be one of l2, l1, linf");
}

gmwp::ProblemInstance make_instance(const CommonOptions& opt) {
  Eigen::MatrixXd A;
  if (opt.format == "csv") {
    A = gmwp::load_points_csv(opt.data);
  } else if (opt.format == "tsplib") {
    A = gmwp::load_points_tsplib(opt.data);
  } else {
    throw CLI::ValidationError("--format must be csv or tsplib");
  }
  std::vector<std::vector<gmwp::ConvexRegion>> regions;
  if (!opt.constraints.empty()) {
    regions = gmwp::load_constraints(opt.constraints, opt.k, static_cast<int>(A.cols()));
  }
  return gmwp::ProblemInstance(std::move(A), opt.k, make_gauge(opt), std::move(regions));
}

gmwp::Variant parse_variant(const std::string& name) {
  if (name == "dca") return gmwp::Variant::Dca;
  if (name == "abdca") return gmwp::Variant::Abdca;
  if (name == "abdca-skip") return gmwp::Variant::AbdcaSkip;
  throw CLI::ValidationError("--variant must be one of dca, abdca, abdca-skip");
}

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--data", opt.data, "points file")->required();
  cmd->add_option("--format", opt.format, "csv or tsplib");
  cmd->add_option("--gauge", opt.gauge, "l2, l1 or linf");
  cmd->add_option("--radius", opt.radius, "gauge ball radius");
  cmd->add_option("--k", opt.k, "number of centers")->required();
  cmd->add_option("--constraints", opt.constraints, "per-center region config file");
}

void add_params(CLI::App* cmd, gmwp::SolverParams& p) {
  cmd->add_option("--alpha", p.alpha);
  cmd->add_option("--beta", p.beta);
  cmd->add_option("--gamma", p.gamma);
  cmd->add_option("--delta", p.delta);
  cmd->add_option("--sigma", p.sigma);
  cmd->add_option("--mu0", p.mu0);
  cmd->add_option("--muf", p.mu_f);
  cmd->add_option("--tau0", p.tau0);
  cmd->add_option("--tauf", p.tau_f);
  cmd->add_option("--lambda-start", p.lambda_start);
  cmd->add_option("--lambda-f", p.lambda_f);
  cmd->add_option("--lambda-skip", p.lambda_skip);
  cmd->add_option("--n-max", p.max_inner);
  cmd->add_option("--tol", p.tol);
}

Eigen::VectorXd column_min(const Eigen::MatrixXd& A) { return A.colwise().minCoeff().transpose(); }
Eigen::VectorXd column_max(const Eigen::MatrixXd& A) { return A.colwise().maxCoeff().transpose(); }

void emit(const std::string& out_path, const nlohmann::json& j) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    gmwp::write_text_file(out_path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-source Weber solver under Minkowski gauges"};
  app.require_subcommand(1);

  CommonOptions opt;
  gmwp::SolverParams params;
  std::string variant_name = "abdca-skip";
  std::string out_path, trace_path;
  int runs = 20;
  std::uint64_t seed = 0;
  std::string merit_name;

  auto* cmd_solve = app.add_subcommand("solve", "run one solver variant from a random start");
  add_common(cmd_solve, opt);
  add_params(cmd_solve, params);
  cmd_solve->add_option("--variant", variant_name);
  cmd_solve->add_option("--seed", seed);
  cmd_solve->add_option("--merit", merit_name, "true, penalized or smoothed");
  cmd_solve->add_option("--out", out_path, "result JSON path (default stdout)");
  cmd_solve->add_option("--trace", trace_path, "per-iteration CSV path");

  auto* cmd_compare = app.add_subcommand("compare", "multi-start DCA vs aBDCA comparison");
  add_common(cmd_compare, opt);
  add_params(cmd_compare, params);
  cmd_compare->add_option("--runs", runs);
  cmd_compare->add_option("--seed", seed);
  cmd_compare->add_option("--merit", merit_name, "true, penalized or smoothed");
  cmd_compare->add_option("--out", out_path, "summary JSON path (default stdout)");
  cmd_compare->add_option("--trace", trace_path, "ratio CSV path");

  std::string centers_path;
  double cert_tol = 1e-6;
  auto* cmd_certify = app.add_subcommand("certify", "local-optimality certificate for centers");
  add_common(cmd_certify, opt);
  cmd_certify->add_option("--centers", centers_path, "CSV with k center rows")->required();
  cmd_certify->add_option("--tol", cert_tol);
  cmd_certify->add_option("--out", out_path);

  double oracle_tol = 1e-8;
  auto* cmd_oracle = app.add_subcommand("oracle", "brute-force global value (small instances)");
  add_common(cmd_oracle, opt);
  cmd_oracle->add_option("--tol", oracle_tol);
  cmd_oracle->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    const gmwp::ProblemInstance P = make_instance(opt);

    if (!merit_name.empty()) {
      if (merit_name == "true") params.merit = gmwp::Merit::TrueObjective;
      else if (merit_name == "penalized") params.merit = gmwp::Merit::PenalizedObjective;
      else if (merit_name == "smoothed") params.merit = gmwp::Merit::SmoothedObjective;
      else throw std::runtime_error("--merit must be true, penalized or smoothed");
    } else if (P.constrained()) {
      params.merit = gmwp::Merit::PenalizedObjective;
    }

    if (cmd_solve->parsed()) {
      const Eigen::MatrixXd X0 =
          gmwp::random_init(P, column_min(P.demand()), column_max(P.demand()), seed, 0);
      const gmwp::SolverReport report = gmwp::solve(P, X0, params, parse_variant(variant_name));
      emit(out_path, gmwp::solve_result_json(P, report));
      if (!trace_path.empty()) gmwp::write_text_file(trace_path, gmwp::trace_csv(report.trace));
      return report.failed ? 1 : 0;
    }

    if (cmd_compare->parsed()) {
      gmwp::CompareConfig cfg;
      cfg.runs = runs;
      cfg.seed = seed;
      cfg.init_lo = column_min(P.demand());
      cfg.init_hi = column_max(P.demand());
      cfg.variants = {gmwp::Variant::Dca, gmwp::Variant::Abdca, gmwp::Variant::AbdcaSkip};
      cfg.params = params;
      const gmwp::CompareReport report = gmwp::compare(P, cfg);
      emit(out_path, gmwp::compare_json(report));
      if (!trace_path.empty()) {
        gmwp::write_text_file(trace_path, gmwp::ratio_csv(report, P, opt.data, opt.gauge));
      }
      return report.valid ? 0 : 1;
    }

    if (cmd_certify->parsed()) {
      const Eigen::MatrixXd X = gmwp::load_points_csv(centers_path);
      const gmwp::Certificate cert = gmwp::local_certificate(P, X, cert_tol);
      emit(out_path, gmwp::certificate_json(cert));
      return 0;
    }

    if (cmd_oracle->parsed()) {
      const gmwp::OracleResult result = gmwp::brute_force_global(P, oracle_tol);
      emit(out_path, gmwp::oracle_json(result));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
