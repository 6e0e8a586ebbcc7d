#include "gmwp/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace gmwp {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& cell, double& out) {
  const std::string t = trim(cell);
  if (t.empty()) return false;
  char* end = nullptr;
  out = std::strtod(t.c_str(), &end);
  return end == t.c_str() + t.size();
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> cells;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      cells.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  cells.push_back(cur);
  return cells;
}

std::vector<std::string> whitespace_tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> tok;
  std::string t;
  while (is >> t) tok.push_back(t);
  return tok;
}

nlohmann::json matrix_json(const Eigen::MatrixXd& M) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < M.cols(); ++j) row.push_back(M(i, j));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Eigen::MatrixXd load_points_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);

  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  Eigen::Index ncols = -1;
  bool first_data_row = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    const auto cells = split(line, ',');
    std::vector<double> row(cells.size());
    bool numeric = true;
    size_t bad_col = 0;
    for (size_t c = 0; c < cells.size(); ++c) {
      if (!parse_double(cells[c], row[c])) {
        numeric = false;
        bad_col = c;
        break;
      }
    }
    if (!numeric) {
      if (first_data_row) continue;  // header row
      throw std::runtime_error(path + ": non-numeric cell at row " + std::to_string(lineno) +
                               ", column " + std::to_string(bad_col + 1));
    }
    if (ncols < 0) {
      ncols = static_cast<Eigen::Index>(row.size());
    } else if (static_cast<Eigen::Index>(row.size()) != ncols) {
      throw std::runtime_error(path + ": ragged row at line " + std::to_string(lineno) +
                               " (expected " + std::to_string(ncols) + " columns, got " +
                               std::to_string(row.size()) + ")");
    }
    rows.push_back(std::move(row));
    first_data_row = false;
  }
  if (rows.empty()) throw std::runtime_error(path + ": no data rows");

  Eigen::MatrixXd A(static_cast<Eigen::Index>(rows.size()), ncols);
  for (size_t i = 0; i < rows.size(); ++i) {
    for (Eigen::Index j = 0; j < ncols; ++j) {
      A(static_cast<Eigen::Index>(i), j) = rows[i][static_cast<size_t>(j)];
    }
  }
  return A;
}

Eigen::MatrixXd load_points_tsplib(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);

  std::string line;
  bool in_coords = false;
  std::vector<std::pair<double, double>> pts;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (!in_coords) {
      if (t == "NODE_COORD_SECTION") in_coords = true;
      continue;
    }
    if (t == "EOF" || t.empty()) break;
    const auto tok = whitespace_tokens(t);
    if (tok.size() != 3) {
      throw std::runtime_error(path + ": expected 'index x y' in NODE_COORD_SECTION, got: " + t);
    }
    double x = 0, y = 0;
    if (!parse_double(tok[1], x) || !parse_double(tok[2], y)) {
      throw std::runtime_error(path + ": non-numeric coordinate in line: " + t);
    }
    pts.emplace_back(x, y);
  }
  if (!in_coords) throw std::runtime_error(path + ": missing NODE_COORD_SECTION keyword");
  if (pts.empty()) throw std::runtime_error(path + ": empty NODE_COORD_SECTION");

  Eigen::MatrixXd A(static_cast<Eigen::Index>(pts.size()), 2);
  for (size_t i = 0; i < pts.size(); ++i) {
    A(static_cast<Eigen::Index>(i), 0) = pts[i].first;
    A(static_cast<Eigen::Index>(i), 1) = pts[i].second;
  }
  return A;
}

std::vector<std::vector<ConvexRegion>> load_constraints(const std::string& path, int k, int n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);

  std::vector<std::vector<ConvexRegion>> lists(static_cast<size_t>(k));
  int current = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto tok = whitespace_tokens(t);
    const std::string where = path + ":" + std::to_string(lineno);
    if (tok[0] == "center") {
      if (tok.size() != 2) throw std::runtime_error(where + ": expected 'center <index>'");
      current = std::stoi(tok[1]) - 1;
      if (current < 0 || current >= k) {
        throw std::runtime_error(where + ": center index out of range 1.." + std::to_string(k));
      }
    } else if (tok[0] == "ball") {
      if (current < 0) throw std::runtime_error(where + ": region before any 'center' line");
      if (static_cast<int>(tok.size()) != n + 2) {
        throw std::runtime_error(where + ": ball needs " + std::to_string(n) +
                                 " center coordinates and a radius");
      }
      Eigen::VectorXd c(n);
      for (int j = 0; j < n; ++j) {
        if (!parse_double(tok[static_cast<size_t>(j) + 1], c[j])) {
          throw std::runtime_error(where + ": non-numeric ball coordinate");
        }
      }
      double r = 0;
      if (!parse_double(tok.back(), r)) throw std::runtime_error(where + ": non-numeric radius");
      lists[static_cast<size_t>(current)].push_back(ConvexRegion::ball(c, r));
    } else if (tok[0] == "box") {
      if (current < 0) throw std::runtime_error(where + ": region before any 'center' line");
      if (static_cast<int>(tok.size()) != 2 * n + 1) {
        throw std::runtime_error(where + ": box needs lo and hi corners (" +
                                 std::to_string(2 * n) + " numbers)");
      }
      Eigen::VectorXd lo(n), hi(n);
      for (int j = 0; j < n; ++j) {
        if (!parse_double(tok[static_cast<size_t>(j) + 1], lo[j]) ||
            !parse_double(tok[static_cast<size_t>(j + n) + 1], hi[j])) {
          throw std::runtime_error(where + ": non-numeric box coordinate");
        }
      }
      lists[static_cast<size_t>(current)].push_back(ConvexRegion::box(lo, hi));
    } else {
      throw std::runtime_error(where + ": unknown directive '" + tok[0] + "'");
    }
  }
  const size_t q = lists.empty() ? 0 : lists.front().size();
  for (size_t l = 0; l < lists.size(); ++l) {
    if (lists[l].size() != q) {
      throw std::runtime_error(path + ": center " + std::to_string(l + 1) + " has " +
                               std::to_string(lists[l].size()) + " regions, expected " +
                               std::to_string(q));
    }
  }
  return lists;
}

nlohmann::json solve_result_json(const ProblemInstance& P, const SolverReport& report) {
  const Clustering cl = natural_clustering(P, report.X);
  nlohmann::json stages = nlohmann::json::array();
  for (const StageRecord& s : report.stages) {
    stages.push_back({{"stage", s.stage},
                      {"mu", s.mu},
                      {"tau", s.tau},
                      {"iterations", s.iterations},
                      {"f_end", s.f_end}});
  }
  nlohmann::json j{{"centers", matrix_json(report.X)},
                   {"value", report.value},
                   {"iterations", report.total_iterations},
                   {"stages", stages},
                   {"clustering", cl.clusters},
                   {"failed", report.failed}};
  if (report.failed) j["failure"] = report.failure;
  return j;
}

nlohmann::json certificate_json(const Certificate& cert) {
  const char* status = cert.status == LocalStatus::Local        ? "local"
                       : cert.status == LocalStatus::NotLocal   ? "not-local"
                                                                : "inconclusive";
  return nlohmann::json{{"status", status},
                        {"is_singleton", cert.is_singleton},
                        {"per_center_residual", cert.per_center_residual},
                        {"ambiguous_singleton", cert.ambiguous_singleton}};
}

nlohmann::json oracle_json(const OracleResult& result) {
  return nlohmann::json{{"centers", matrix_json(result.X)},
                        {"value", result.value},
                        {"partitions_examined", result.partitions_examined}};
}

nlohmann::json compare_json(const CompareReport& report) {
  nlohmann::json aggregates = nlohmann::json::array();
  for (const VariantAggregate& a : report.aggregates) {
    aggregates.push_back({{"variant", variant_name(a.variant)},
                          {"mean_iterations", a.mean_iterations},
                          {"mean_value", a.mean_value},
                          {"mean_wall_ns", a.mean_wall_ns},
                          {"iter_ratio", a.iter_ratio},
                          {"time_ratio", a.time_ratio},
                          {"failures", a.failures}});
  }
  nlohmann::json runs = nlohmann::json::array();
  for (const RunRecord& r : report.runs) {
    nlohmann::json outcomes = nlohmann::json::array();
    for (const VariantOutcome& o : r.outcomes) {
      outcomes.push_back({{"variant", variant_name(o.variant)},
                          {"iterations", o.iterations},
                          {"value", o.value},
                          {"wall_ns", o.wall_ns},
                          {"failed", o.failed}});
    }
    runs.push_back({{"run", r.run}, {"x0_hash", r.x0_hash}, {"outcomes", outcomes}});
  }
  return nlohmann::json{{"aggregates", aggregates}, {"runs", runs}, {"valid", report.valid}};
}

std::string trace_csv(const std::vector<TraceRow>& trace) {
  std::ostringstream os;
  os.precision(17);
  os << "stage,iter,mu,tau,lambda_trial,lambda_accepted,backtracks,f_value,step_fro,skipped,"
        "wall_ns\n";
  for (const TraceRow& r : trace) {
    os << r.stage << ',' << r.iter << ',' << r.mu << ',' << r.tau << ',' << r.lambda_trial << ','
       << r.lambda_accepted << ',' << r.backtracks << ',' << r.f_value << ',' << r.step_fro << ','
       << (r.skipped ? 1 : 0) << ',' << r.wall_ns << '\n';
  }
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace gmwp
