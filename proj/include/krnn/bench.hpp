#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "krnn/instance.hpp"
#include "krnn/oracle.hpp"
#include "krnn/solvers.hpp"

namespace krnn::bench {

// One solver configuration, written on the command line as krnn:K, bi:K,
// nn[:START] or branch[:START].
struct VariantSpec {
  Variant variant = Variant::kKRnn;
  int k = 1;
  Vertex start = 0;  // nn and branch only

  // Column label: "2-RNN", "Bi-2-RNN", "NN(0)", "Branch-NN(0)".
  std::string Label() const;

  friend bool operator==(const VariantSpec&, const VariantSpec&) = default;
};

// Parses a comma separated list such as "krnn:1,krnn:2,bi:2".
// Throws ConfigError.
std::vector<VariantSpec> ParseVariants(std::string_view text);

// Percentage by which a result exceeds the optimum, held exactly in
// hundredths of a percent.
struct ExcessPercent {
  std::int64_t hundredths = 0;

  double value() const { return static_cast<double>(hundredths) / 100.0; }
  // Two fraction digits, e.g. "43.59".
  std::string ToString() const;

  friend auto operator<=>(const ExcessPercent&, const ExcessPercent&) = default;
};

// 100 * (result - optimum) / optimum, rounded half away from zero to two
// decimals. Throws NonPositiveOptimum.
ExcessPercent ComputeExcess(CostValue result, CostValue optimum);

// dataset -> optimum
using OptimaTable = std::map<std::string, CostValue, std::less<>>;

// `dataset,optimum` lines; an optional header line and '#' comments are
// skipped. Throws ConfigError.
OptimaTable ParseOptima(std::string_view text);
OptimaTable LoadOptima(const std::filesystem::path& path);

// Seeded random instances with exactly known optima.
struct SyntheticSuite {
  int count = 0;
  int n = 9;
  bool symmetric = false;
  std::uint64_t seed = 1;
};

struct BenchConfig {
  std::vector<std::filesystem::path> instance_paths;
  std::optional<SyntheticSuite> synthetic;
  std::vector<VariantSpec> variants;
  int threads = 1;
  std::uint64_t start_budget = kDefaultStartBudget;
  std::uint64_t node_budget = kDefaultNodeBudget;
  OptimaTable optima;
  // Datasets missing from `optima` are solved exactly when their dimension
  // is at most this cap; larger ones raise MissingOptimum.
  int held_karp_cap = kDefaultHeldKarpCap;
};

struct VariantOutcome {
  CostValue result = 0;
  ExcessPercent excess;
  std::chrono::nanoseconds wall_time{0};
  RunResult run;
};

struct BenchRow {
  std::string dataset;
  int dimension = 0;
  CostValue optimum = 0;
  std::vector<VariantOutcome> outcomes;  // parallel to BenchReport::variants
};

struct BenchReport {
  std::vector<VariantSpec> variants;
  std::vector<BenchRow> rows;  // sorted by dataset
};

// Expands a directory (every *.tsp / *.atsp inside, sorted) or a comma
// separated list of files.
std::vector<std::filesystem::path> CollectInstancePaths(std::string_view spec);

// Runs every variant on every instance, one instance at a time. Each tour is
// re-validated, and a result shorter than the optimum is an error.
//
// Throws ConfigError, MissingOptimum, krnn::tsplib parse errors, or
// SolverError carrying the dataset name.
BenchReport RunBenchmark(const BenchConfig& config);

enum class ReportFormat { kCsv, kJson, kMarkdown };

// Throws ConfigError for anything other than csv, json, md/markdown.
ReportFormat ParseReportFormat(std::string_view text);

struct FormatOptions {
  // Emit the <variant>_ms columns. Without them a report depends only on
  // the instances and variants, not on the machine.
  bool timings = true;
};

std::string FormatReport(const BenchReport& report, ReportFormat format,
                         const FormatOptions& options = {});

}  // namespace krnn::bench
