// Command line front end: solve one instance, solve it exactly, or run a
// benchmark table over many instances.
//
// Exit codes: 0 success, 1 usage error, 2 parse/config error,
// 3 solver error or budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "krnn/bench.hpp"
#include "krnn/error.hpp"
#include "krnn/oracle.hpp"
#include "krnn/solvers.hpp"
#include "krnn/tsplib.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

int DefaultThreads() {
  if (const char* env = std::getenv("KRNN_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
    std::cerr << "ignoring invalid KRNN_THREADS=" << env << "\n";
  }
  return 1;
}

double Millis(std::chrono::nanoseconds t) {
  return std::chrono::duration<double, std::milli>(t).count();
}

std::string Join(const std::vector<krnn::Vertex>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

struct SolveArgs {
  std::string instance;
  std::string variant = "krnn";
  int k = 1;
  int start = 0;
  int threads = 1;
  std::uint64_t start_budget = krnn::kDefaultStartBudget;
  std::uint64_t node_budget = krnn::kDefaultNodeBudget;
  std::string format = "text";
};

int Solve(const SolveArgs& args) {
  const auto instance = krnn::tsplib::LoadInstance(args.instance);
  krnn::RunOptions options;
  options.threads = args.threads;
  options.start_budget = args.start_budget;

  krnn::RunResult run;
  if (args.variant == "krnn") {
    run = krnn::RunKRnn(instance, args.k, options);
  } else if (args.variant == "bi") {
    run = krnn::RunBiKRnn(instance, args.k, options);
  } else {
    const auto started = std::chrono::steady_clock::now();
    const bool branch = args.variant == "branch";
    run.variant = branch ? krnn::Variant::kBranchingNn : krnn::Variant::kNn;
    run.k = 1;
    run.winning_start = {args.start};
    run.starts_evaluated = 1;
    run.tour = branch ? krnn::RunBranchingNn(instance, args.start, args.node_budget)
                      : krnn::RunNnFrom(instance, args.start);
    run.wall_time = std::chrono::steady_clock::now() - started;
  }
  krnn::ValidateTour(instance, run.tour);

  if (args.format == "json") {
    nlohmann::ordered_json out;
    out["instance"] = instance.name();
    out["dimension"] = instance.dimension();
    out["variant"] = krnn::VariantName(run.variant);
    out["k"] = run.k;
    out["length"] = run.tour.length;
    out["winning_start"] = run.winning_start;
    out["starts_evaluated"] = run.starts_evaluated;
    out["wall_ms"] = Millis(run.wall_time);
    out["tour"] = run.tour.order;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "instance  " << instance.name() << " (" << instance.dimension()
              << " vertices, " << (instance.symmetric() ? "symmetric" : "asymmetric")
              << ")\n"
              << "variant   " << krnn::VariantName(run.variant) << " k=" << run.k << "\n"
              << "length    " << run.tour.length << "\n"
              << "start     " << Join(run.winning_start) << "\n"
              << "starts    " << run.starts_evaluated << "\n"
              << "time_ms   " << Millis(run.wall_time) << "\n"
              << "tour      " << Join(run.tour.order) << "\n";
  }
  return 0;
}

int Exact(const std::string& path, const std::string& method, int cap) {
  const auto instance = krnn::tsplib::LoadInstance(path);
  const auto started = std::chrono::steady_clock::now();
  const auto result = method == "perm" ? krnn::SolvePermEnum(instance, cap)
                                       : krnn::SolveHeldKarp(instance, cap);
  const auto elapsed = std::chrono::steady_clock::now() - started;
  krnn::ValidateTour(instance, result.tour);
  std::cout << "instance  " << instance.name() << "\n"
            << "method    " << (method == "perm" ? "perm" : "hk") << "\n"
            << "optimum   " << result.tour.length << "\n"
            << "explored  " << result.states_or_perms_explored << "\n"
            << "time_ms   " << Millis(elapsed) << "\n"
            << "tour      " << Join(result.tour.order) << "\n";
  return 0;
}

struct BenchArgs {
  std::string instances;
  std::string optima;
  std::string variants = "krnn:1,krnn:2,bi:2";
  int threads = 1;
  std::string format = "csv";
  std::string out;
  bool no_timing = false;
  std::uint64_t start_budget = krnn::kDefaultStartBudget;
  std::uint64_t node_budget = krnn::kDefaultNodeBudget;
  int synthetic = 0;
  int synthetic_n = 9;
  std::uint64_t seed = 1;
};

int Bench(const BenchArgs& args) {
  krnn::bench::BenchConfig config;
  if (!args.instances.empty()) {
    config.instance_paths = krnn::bench::CollectInstancePaths(args.instances);
  }
  if (args.synthetic > 0) {
    config.synthetic = krnn::bench::SyntheticSuite{args.synthetic, args.synthetic_n, false,
                                                   args.seed};
  }
  config.variants = krnn::bench::ParseVariants(args.variants);
  config.threads = args.threads;
  config.start_budget = args.start_budget;
  config.node_budget = args.node_budget;
  if (!args.optima.empty()) config.optima = krnn::bench::LoadOptima(args.optima);
  const auto format = krnn::bench::ParseReportFormat(args.format);

  const auto report = krnn::bench::RunBenchmark(config);
  krnn::bench::FormatOptions options;
  options.timings = !args.no_timing;
  const auto text = krnn::bench::FormatReport(report, format, options);
  if (args.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(args.out);
    if (!file) throw krnn::ConfigError("cannot write " + args.out);
    file << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-Repetitive-Nearest-Neighbor TSP heuristics"};
  app.require_subcommand(1);

  SolveArgs solve;
  solve.threads = DefaultThreads();
  auto* solve_cmd = app.add_subcommand("solve", "Run one heuristic on one instance");
  solve_cmd->add_option("--instance", solve.instance, "TSPLIB file")->required();
  solve_cmd->add_option("--variant", solve.variant)
      ->check(CLI::IsMember({"nn", "krnn", "bi", "branch"}));
  solve_cmd->add_option("--k", solve.k, "Starting permutation length");
  solve_cmd->add_option("--start", solve.start, "Start vertex for nn/branch");
  solve_cmd->add_option("--threads", solve.threads)->check(CLI::PositiveNumber);
  solve_cmd->add_option("--budget", solve.start_budget, "Maximum starting permutations");
  solve_cmd->add_option("--node-budget", solve.node_budget, "Branching node limit");
  solve_cmd->add_option("--format", solve.format)->check(CLI::IsMember({"json", "text"}));

  std::string exact_instance;
  std::string exact_method = "hk";
  int exact_cap = 0;
  auto* exact_cmd = app.add_subcommand("exact", "Solve an instance to optimality");
  exact_cmd->add_option("--instance", exact_instance, "TSPLIB file")->required();
  exact_cmd->add_option("--method", exact_method)->check(CLI::IsMember({"hk", "perm"}));
  exact_cmd->add_option("--cap", exact_cap, "Largest dimension accepted");

  BenchArgs bench;
  bench.threads = DefaultThreads();
  auto* bench_cmd = app.add_subcommand("bench", "Tabulate excess over optimum");
  bench_cmd->add_option("--instances", bench.instances,
                        "Directory of .tsp/.atsp files or comma separated list");
  bench_cmd->add_option("--optima", bench.optima, "CSV of dataset,optimum");
  bench_cmd->add_option("--variants", bench.variants, "e.g. krnn:1,krnn:2,bi:2");
  bench_cmd->add_option("--threads", bench.threads)->check(CLI::PositiveNumber);
  bench_cmd->add_option("--format", bench.format)
      ->check(CLI::IsMember({"csv", "json", "md", "markdown"}));
  bench_cmd->add_option("--out", bench.out, "Write the report here instead of stdout");
  bench_cmd->add_flag("--no-timing", bench.no_timing, "Omit wall-clock columns");
  bench_cmd->add_option("--budget", bench.start_budget, "Maximum starting permutations");
  bench_cmd->add_option("--node-budget", bench.node_budget, "Branching node limit");
  bench_cmd->add_option("--synthetic", bench.synthetic,
                        "Add this many seeded random instances");
  bench_cmd->add_option("--synthetic-n", bench.synthetic_n, "Dimension of synthetic instances");
  bench_cmd->add_option("--seed", bench.seed, "Seed for synthetic instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve_cmd) return Solve(solve);
    if (*exact_cmd) {
      const int cap = exact_cap > 0 ? exact_cap
                                    : (exact_method == "perm" ? krnn::kDefaultPermEnumCap
                                                              : krnn::kDefaultHeldKarpCap);
      return Exact(exact_instance, exact_method, cap);
    }
    if (bench.instances.empty() && bench.synthetic == 0) {
      std::cerr << "bench: give --instances or --synthetic\n";
      return kExitUsage;
    }
    return Bench(bench);
  } catch (const krnn::UnsupportedFormat& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const krnn::MalformedFile& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const krnn::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const krnn::MissingOptimum& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const krnn::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  }
}
