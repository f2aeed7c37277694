#include "setmc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

namespace setmc {

Index TrialSpec::omega_size() const {
  return std::max<Index>(1, static_cast<Index>(std::llround(sampling_rate * static_cast<double>(m * n))));
}

void TrialSpec::validate() const {
  if (m < 1 || n < 1) throw std::invalid_argument("TrialSpec: dimensions must be positive");
  if (r != 1) throw std::invalid_argument("TrialSpec: rank must be 1");
  if (!(sampling_rate > 0.0 && sampling_rate <= 1.0))
    throw std::invalid_argument("TrialSpec: sampling_rate must lie in (0, 1]");
  if (trials < 1) throw std::invalid_argument("TrialSpec: trials must be >= 1");
}

Instance generate_instance(Index m, Index n, int r, Index omega_size, std::uint64_t seed) {
  if (m < 1 || n < 1) throw std::invalid_argument("generate_instance: bad dimensions");
  if (r != 1) throw std::invalid_argument("generate_instance: rank must be 1");
  if (omega_size < 1 || omega_size > m * n)
    throw std::out_of_range("generate_instance: omega_size outside [1, m*n]");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  Vector u(m), v(n);
  for (Index i = 0; i < m; ++i) u[i] = normal(rng);
  for (Index j = 0; j < n; ++j) v[j] = normal(rng);
  const double s = normal(rng);
  u.normalize();
  v.normalize();

  Eigen::MatrixXd full = s * u * v.transpose();

  // Uniform subset of linear indices; column-major mapping keeps the
  // sampled entries already grouped by column.
  std::vector<Index> linear(static_cast<std::size_t>(m * n));
  std::iota(linear.begin(), linear.end(), Index{0});
  std::vector<Index> picked;
  picked.reserve(static_cast<std::size_t>(omega_size));
  std::sample(linear.begin(), linear.end(), std::back_inserter(picked), omega_size, rng);

  std::vector<Entry> entries;
  entries.reserve(picked.size());
  for (Index lin : picked) {
    const Index i = lin % m;
    const Index j = lin / m;
    entries.push_back({i, j, full(i, j)});
  }

  return {std::move(full), ObservedMatrix(m, n, std::move(entries))};
}

namespace {

struct TrialOutcome {
  bool success = false;
  int iterations = 0;
  int transfers = 0;
  double exact_recovery_err = 0.0;
};

// The instance stream consumes its seed drawing U_X first, so the solver's
// initialization must not reuse the same stream or the initial guess would
// reproduce U_X exactly. Mix the trial seed into a distinct stream.
std::uint64_t solver_seed(std::uint64_t trial_seed) {
  return trial_seed * 0x9E3779B97F4A7C15ull + 0x2545F4914F6CDD1Dull;
}

TrialOutcome run_trial(const TrialSpec& spec, const SolverConfig& base, std::uint64_t trial_seed) {
  const Instance inst = generate_instance(spec.m, spec.n, spec.r, spec.omega_size(), trial_seed);

  SolverConfig cfg = base;
  cfg.transfer_enabled = spec.transfer_enabled;
  cfg.rng_seed = solver_seed(trial_seed);
  cfg.init_u.reset();

  const SolveReport report = solve(inst.observed, cfg);

  const Eigen::MatrixXd completed = report.u.vec() * report.w.transpose();
  const double full_norm = inst.full.norm();
  const double err = full_norm > 0.0 ? (completed - inst.full).norm() / full_norm : 0.0;

  return {report.success, report.outer_iterations, report.transfers_performed, err};
}

}  // namespace

SweepResult run_sweep(const std::vector<TrialSpec>& specs, const SolverConfig& config, int jobs) {
  if (specs.empty()) throw std::invalid_argument("run_sweep: no sweep points");
  for (const TrialSpec& spec : specs) spec.validate();
  jobs = std::max(1, jobs);

  SweepResult result;
  for (const TrialSpec& spec : specs) {
    std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(spec.trials));

    if (jobs == 1 || spec.trials == 1) {
      for (int t = 0; t < spec.trials; ++t)
        outcomes[static_cast<std::size_t>(t)] = run_trial(spec, config, spec.seed + static_cast<std::uint64_t>(t));
    } else {
      std::atomic<int> next{0};
      auto worker = [&] {
        for (int t = next.fetch_add(1); t < spec.trials; t = next.fetch_add(1))
          outcomes[static_cast<std::size_t>(t)] = run_trial(spec, config, spec.seed + static_cast<std::uint64_t>(t));
      };
      std::vector<std::thread> pool;
      const int nthreads = std::min(jobs, spec.trials);
      pool.reserve(static_cast<std::size_t>(nthreads));
      for (int k = 0; k < nthreads; ++k) pool.emplace_back(worker);
      for (std::thread& th : pool) th.join();
    }

    SweepPoint pt{};
    pt.sampling_rate = spec.sampling_rate;
    pt.trials = spec.trials;
    for (const TrialOutcome& o : outcomes) {
      pt.successes += o.success ? 1 : 0;
      pt.mean_iters += o.iterations;
      pt.mean_transfers += o.transfers;
      pt.mean_exact_recovery_err += o.exact_recovery_err;
    }
    pt.success_rate = static_cast<double>(pt.successes) / spec.trials;
    pt.mean_iters /= spec.trials;
    pt.mean_transfers /= spec.trials;
    pt.mean_exact_recovery_err /= spec.trials;
    result.points.push_back(pt);
  }
  return result;
}

namespace {

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

void write_atomically(const std::filesystem::path& path, const std::string& contents) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << contents;
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::vector<SweepPoint> sorted_by_rate(const SweepResult& result) {
  std::vector<SweepPoint> pts = result.points;
  std::stable_sort(pts.begin(), pts.end(),
                   [](const SweepPoint& a, const SweepPoint& b) { return a.sampling_rate < b.sampling_rate; });
  return pts;
}

}  // namespace

void emit_csv(const SweepResult& result, const std::filesystem::path& path) {
  std::string out =
      "sampling_rate,trials,successes,success_rate,mean_iters,mean_transfers,mean_exact_recovery_err\n";
  for (const SweepPoint& pt : sorted_by_rate(result)) {
    out += format_number(pt.sampling_rate) + "," + std::to_string(pt.trials) + "," +
           std::to_string(pt.successes) + "," + format_number(pt.success_rate) + "," +
           format_number(pt.mean_iters) + "," + format_number(pt.mean_transfers) + "," +
           format_number(pt.mean_exact_recovery_err) + "\n";
  }
  write_atomically(path, out);
}

void emit_gnuplot(const SweepResult& result, const std::filesystem::path& path) {
  std::string out = "# sampling_rate success_rate\n";
  for (const SweepPoint& pt : sorted_by_rate(result))
    out += format_number(pt.sampling_rate) + " " + format_number(pt.success_rate) + "\n";
  write_atomically(path, out);
}

}  // namespace setmc
