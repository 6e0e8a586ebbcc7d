#include "gmwp/harness.hpp"

#include <atomic>
#include <chrono>
#include <cstring>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace gmwp {

std::uint64_t matrix_hash(const Eigen::MatrixXd& M) {
  // FNV-1a over the raw doubles; only used as a shared-start fingerprint
  std::uint64_t h = 1469598103934665603ULL;
  for (Eigen::Index i = 0; i < M.size(); ++i) {
    std::uint64_t bits;
    std::memcpy(&bits, M.data() + i, sizeof(bits));
    for (int b = 0; b < 8; ++b) {
      h ^= (bits >> (8 * b)) & 0xffULL;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

CenterMatrix random_init(const ProblemInstance& P, const Eigen::VectorXd& lo,
                         const Eigen::VectorXd& hi, std::uint64_t seed, int run_index) {
  if (lo.size() != P.n() || hi.size() != P.n()) {
    throw std::invalid_argument("random_init: box dimension must equal n");
  }
  if (((hi - lo).array() < 0.0).any()) {
    throw std::invalid_argument("random_init: box must satisfy lo <= hi");
  }
  const std::uint64_t mix = static_cast<std::uint64_t>(run_index) + 0x9e3779b97f4a7c15ULL;
  std::seed_seq seq{static_cast<unsigned>(seed), static_cast<unsigned>(seed >> 32),
                    static_cast<unsigned>(mix), static_cast<unsigned>(mix >> 32)};
  std::mt19937_64 rng(seq);
  CenterMatrix X(P.k(), P.n());
  for (int l = 0; l < P.k(); ++l) {
    for (int j = 0; j < P.n(); ++j) {
      std::uniform_real_distribution<double> dist(lo[j], hi[j]);
      X(l, j) = dist(rng);
    }
  }
  return X;
}

namespace {

RunRecord run_one(const ProblemInstance& P, const CompareConfig& cfg, int run) {
  using clock = std::chrono::steady_clock;
  RunRecord rec;
  rec.run = run;
  const CenterMatrix X0 = random_init(P, cfg.init_lo, cfg.init_hi, cfg.seed, run);
  rec.x0_hash = matrix_hash(X0);
  for (Variant v : cfg.variants) {
    VariantOutcome out;
    out.variant = v;
    const auto t0 = clock::now();
    const SolverReport rep = solve(P, X0, cfg.params, v);
    out.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - t0).count();
    out.iterations = rep.total_iterations;
    out.value = rep.value;
    out.failed = rep.failed;
    rec.outcomes.push_back(out);
  }
  return rec;
}

}  // namespace

CompareReport compare(const ProblemInstance& P, const CompareConfig& cfg) {
  if (cfg.runs < 1) throw std::invalid_argument("compare: runs must be >= 1");
  if (cfg.variants.empty()) throw std::invalid_argument("compare: no variants requested");
  cfg.params.validate();

  CompareReport report;
  report.runs.resize(static_cast<size_t>(cfg.runs));

  const int threads = std::max(1, cfg.threads);
  if (threads == 1) {
    for (int r = 0; r < cfg.runs; ++r) report.runs[static_cast<size_t>(r)] = run_one(P, cfg, r);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&]() {
        for (;;) {
          const int r = next.fetch_add(1);
          if (r >= cfg.runs) return;
          report.runs[static_cast<size_t>(r)] = run_one(P, cfg, r);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  // aggregate per variant, excluding failed runs from the means
  double dca_mean_iters = 0.0, dca_mean_time = 0.0;
  bool have_dca = false;
  int total_failures = 0;
  for (size_t vi = 0; vi < cfg.variants.size(); ++vi) {
    VariantAggregate agg;
    agg.variant = cfg.variants[vi];
    double si = 0.0, sv = 0.0, st = 0.0;
    int ok = 0;
    for (const RunRecord& rec : report.runs) {
      const VariantOutcome& out = rec.outcomes[vi];
      if (out.failed) {
        ++agg.failures;
        ++total_failures;
        continue;
      }
      si += static_cast<double>(out.iterations);
      sv += out.value;
      st += static_cast<double>(out.wall_ns);
      ++ok;
    }
    if (ok > 0) {
      agg.mean_iterations = si / ok;
      agg.mean_value = sv / ok;
      agg.mean_wall_ns = st / ok;
    }
    if (agg.variant == Variant::Dca) {
      dca_mean_iters = agg.mean_iterations;
      dca_mean_time = agg.mean_wall_ns;
      have_dca = true;
    }
    report.aggregates.push_back(agg);
  }
  for (VariantAggregate& agg : report.aggregates) {
    if (have_dca && agg.mean_iterations > 0.0) {
      agg.iter_ratio = dca_mean_iters / agg.mean_iterations;
      agg.time_ratio = dca_mean_time / agg.mean_wall_ns;
    }
  }
  const double fail_frac =
      static_cast<double>(total_failures) /
      static_cast<double>(cfg.runs * static_cast<int>(cfg.variants.size()));
  report.valid = fail_frac <= 0.05;
  return report;
}

std::string ratio_csv(const CompareReport& report, const ProblemInstance& P,
                      const std::string& dataset, const std::string& gauge_name, bool header) {
  std::ostringstream os;
  os.precision(17);
  if (header) {
    os << "dataset,gauge,m,n,k,variant,mean_iters,mean_time_ns,iter_ratio,time_ratio\n";
  }
  for (const VariantAggregate& agg : report.aggregates) {
    os << dataset << ',' << gauge_name << ',' << P.m() << ',' << P.n() << ',' << P.k() << ','
       << variant_name(agg.variant) << ',' << agg.mean_iterations << ',' << agg.mean_wall_ns
       << ',' << agg.iter_ratio << ',' << agg.time_ratio << '\n';
  }
  return os.str();
}

}  // namespace gmwp
