// Command-line front end: solve (complete one observed matrix), bench
// (Monte-Carlo sweep over sampling rates), demo (the 3x2 barrier example).

#include "setmc/barrier.hpp"
#include "setmc/bench.hpp"
#include "setmc/geodesic.hpp"
#include "setmc/matrix_io.hpp"
#include "setmc/objective.hpp"
#include "setmc/solver.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace setmc;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNotConverged = 2;

std::string fmt6(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

ObservedFormat resolve_format(const std::string& format, const std::string& path) {
  if (format == "mm") return ObservedFormat::kMatrixMarket;
  if (format == "csv") return ObservedFormat::kCsvTriplets;
  // auto: by extension
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
    return ObservedFormat::kCsvTriplets;
  return ObservedFormat::kMatrixMarket;
}

struct SolveArgs {
  std::string input;
  std::string format = "auto";
  std::string output;
  std::string output_format = "dense-csv";
  std::string init_path;
  double tol = 1e-6;
  int max_iter = 2000;
  std::uint64_t seed = 0;
  bool no_transfer = false;
};

int run_solve(const SolveArgs& args) {
  try {
    const ObservedMatrix X = load_observed(args.input, resolve_format(args.format, args.input));

    SolverConfig cfg;
    cfg.eps_e = args.tol;
    cfg.max_outer_iters = args.max_iter;
    cfg.rng_seed = args.seed;
    cfg.transfer_enabled = !args.no_transfer;
    if (!args.init_path.empty()) cfg.init_u = load_unit_vector(args.init_path).vec();

    const SolveReport report = solve(X, cfg);

    if (!args.output.empty()) {
      const DenseFormat out_fmt = args.output_format == "mm-array"
                                      ? DenseFormat::kMatrixMarketArray
                                      : DenseFormat::kDenseCsv;
      save_completed(report.u, report.w, args.output, out_fmt);
    }

    std::cout << "status: " << (report.success ? "success" : "not converged") << "\n"
              << "iterations: " << report.outer_iterations << "\n"
              << "transfers: " << report.transfers_performed << "\n"
              << "objective: " << fmt6(report.final_objective) << "\n"
              << "relative residual: " << fmt6(report.relative_residual) << "\n";
    return report.success ? kExitOk : kExitNotConverged;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

struct BenchArgs {
  Index m = 100;
  Index n = 100;
  std::string rates = "0.02,0.05,0.08,0.1,0.15,0.2,0.3,0.5";
  int trials = 50;
  std::uint64_t seed = 42;
  std::string out = "bench.csv";
  std::string gnuplot_out;
  bool no_transfer = false;
  int jobs = 1;
};

int run_bench(const BenchArgs& args) {
  try {
    std::vector<TrialSpec> specs;
    std::stringstream ss(args.rates);
    std::string token;
    while (std::getline(ss, token, ',')) {
      if (token.empty()) continue;
      TrialSpec spec;
      spec.m = args.m;
      spec.n = args.n;
      spec.sampling_rate = std::stod(token);
      spec.trials = args.trials;
      spec.seed = args.seed;
      spec.transfer_enabled = !args.no_transfer;
      spec.validate();
      specs.push_back(spec);
    }
    if (specs.empty()) throw std::invalid_argument("no sampling rates given");

    const SweepResult result = run_sweep(specs, SolverConfig{}, args.jobs);
    emit_csv(result, args.out);
    if (!args.gnuplot_out.empty()) emit_gnuplot(result, args.gnuplot_out);

    std::cout << "rate      trials  successes  success_rate  mean_iters  mean_transfers\n";
    for (const SweepPoint& pt : result.points)
      std::printf("%-9s %-7d %-10d %-13s %-11s %s\n", fmt6(pt.sampling_rate).c_str(), pt.trials,
                  pt.successes, fmt6(pt.success_rate).c_str(), fmt6(pt.mean_iters).c_str(),
                  fmt6(pt.mean_transfers).c_str());
    std::cout << "wrote " << args.out << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

ObservedMatrix demo_matrix() {
  // columns (?, 2, 2) and (2, ?, 1); the rank-1 completion is u = (2,1,1)/sqrt(6).
  return ObservedMatrix(3, 2, {{1, 0, 2.0}, {2, 0, 2.0}, {0, 1, 2.0}, {2, 1, 1.0}});
}

void demo_arm(const ObservedMatrix& X, const Vector& u0, bool with_transfer) {
  std::cout << "\n--- " << (with_transfer ? "transfer enabled" : "transfer disabled") << " ---\n";
  SolverConfig cfg;
  cfg.init_u = u0;
  cfg.transfer_enabled = with_transfer;

  int printed = 0;
  const SolveReport report = solve(X, cfg, [&](int iter, double f, int transfers) {
    if (iter < 20 || iter % 200 == 0) {
      std::cout << "iter " << iter << ": f = " << fmt6(f) << ", transfers = " << transfers << "\n";
      ++printed;
    }
  });
  std::cout << "result: " << (report.success ? "success" : "stalled") << " after "
            << report.outer_iterations << " iterations, " << report.transfers_performed
            << " transfers, relative residual " << fmt6(report.relative_residual) << "\n";
}

int run_demo() {
  const ObservedMatrix X = demo_matrix();
  Vector u0(3);
  u0 << -10.0, 1.0, 1.0;
  const UnitVector u0n = UnitVector::normalized(u0);

  std::cout << "3x2 observation with one hidden entry per column; f(u) measures the\n"
               "best rank-1 data fit achievable from the column space spanned by u.\n\n";
  std::cout << "initial u0 = (-10, 1, 1)/sqrt(102)\n";
  std::cout << "f(u0) = " << fmt6(eval_f(u0n, X)) << "  (f_1 = " << fmt6(eval_atomic(u0n, X, 0))
            << ", f_2 = " << fmt6(eval_atomic(u0n, X, 1)) << ")\n";

  // Any u with u_2 = -u_3 sits on the ridge of the first column's term.
  Vector ridge(3);
  ridge << -10.0, 1.0, -1.0;
  std::cout << "contour probe at u = (-10, 1, -1)/sqrt(102): f_1 = "
            << fmt6(eval_atomic(UnitVector::normalized(ridge), X, 0)) << "\n";

  const auto ray = descent_ray(u0n, X);
  if (ray) {
    const auto records = detect_barriers(*ray, X);
    std::cout << "\nbarriers along the initial descent geodesic:\n";
    for (const BarrierRecord& rec : records)
      std::cout << "  column " << rec.blocking_column << " blocks column " << rec.blocked_column
                << ": t_o = " << fmt6(rec.t_o) << ", t_p = " << fmt6(rec.t_p)
                << ", slope at t_o = " << fmt6(rec.total_slope_at_t_o) << "\n";
    if (records.empty()) std::cout << "  (none)\n";
  }

  demo_arm(X, u0, false);
  demo_arm(X, u0, true);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rank-1 consistent matrix completion via subspace evolution and transfer"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Complete one observed matrix");
  solve_cmd->add_option("input", solve_args.input, "Observed matrix file")->required();
  solve_cmd->add_option("--format", solve_args.format, "Input format: auto|mm|csv")
      ->check(CLI::IsMember({"auto", "mm", "csv"}));
  solve_cmd->add_option("--tol", solve_args.tol, "Relative fit tolerance");
  solve_cmd->add_option("--max-iter", solve_args.max_iter, "Outer iteration cap");
  solve_cmd->add_option("--seed", solve_args.seed, "RNG seed for the random start")
      ->envname("SETMC_SEED");
  solve_cmd->add_option("--init", solve_args.init_path, "Initial vector file (one value per line)");
  solve_cmd->add_flag("--no-transfer", solve_args.no_transfer, "Disable barrier crossing");
  solve_cmd->add_option("--output", solve_args.output, "Write the completed dense matrix here");
  solve_cmd->add_option("--output-format", solve_args.output_format, "dense-csv|mm-array")
      ->check(CLI::IsMember({"dense-csv", "mm-array"}));

  BenchArgs bench_args;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Monte-Carlo sweep over sampling rates");
  bench_cmd->add_option("--m", bench_args.m, "Rows");
  bench_cmd->add_option("--n", bench_args.n, "Columns");
  bench_cmd->add_option("--rates", bench_args.rates, "Comma-separated sampling rates in (0,1]");
  bench_cmd->add_option("--trials", bench_args.trials, "Trials per rate");
  bench_cmd->add_option("--seed", bench_args.seed, "Base seed")->envname("SETMC_SEED");
  bench_cmd->add_option("--out", bench_args.out, "Output CSV path");
  bench_cmd->add_option("--gnuplot-out", bench_args.gnuplot_out, "Optional two-column series");
  bench_cmd->add_flag("--no-transfer", bench_args.no_transfer, "Disable barrier crossing");
  bench_cmd->add_option("--jobs", bench_args.jobs, "Worker threads for trials");

  CLI::App* demo_cmd = app.add_subcommand("demo", "Run the built-in 3x2 barrier example");

  CLI11_PARSE(app, argc, argv);

  if (solve_cmd->parsed()) return run_solve(solve_args);
  if (bench_cmd->parsed()) return run_bench(bench_args);
  if (demo_cmd->parsed()) return run_demo();
  return kExitInputError;
}
