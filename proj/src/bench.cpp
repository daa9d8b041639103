#include "krnn/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "krnn/error.hpp"
#include "krnn/synthetic.hpp"
#include "krnn/tsplib.hpp"

namespace krnn::bench {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto end = s.find(sep, pos);
    out.push_back(s.substr(pos, end == std::string_view::npos ? s.npos : end - pos));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

template <typename Int>
std::optional<Int> ParseInteger(std::string_view s) {
  s = Trim(s);
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::string FormatMillis(std::chrono::nanoseconds t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f",
                std::chrono::duration<double, std::milli>(t).count());
  return buf;
}

struct NamedInstance {
  std::string dataset;
  Instance instance;
};

CostValue ResolveOptimum(const BenchConfig& config, const NamedInstance& named) {
  if (const auto it = config.optima.find(named.dataset); it != config.optima.end()) {
    return it->second;
  }
  const int n = named.instance.dimension();
  if (n <= std::min(config.held_karp_cap, kDefaultPermEnumCap)) {
    return SolvePermEnum(named.instance, kDefaultPermEnumCap).tour.length;
  }
  if (n <= config.held_karp_cap) {
    return SolveHeldKarp(named.instance, config.held_karp_cap).tour.length;
  }
  throw MissingOptimum(named.dataset);
}

RunResult RunVariant(const Instance& instance, const VariantSpec& spec,
                     const BenchConfig& config) {
  RunOptions options;
  options.threads = config.threads;
  options.start_budget = config.start_budget;
  switch (spec.variant) {
    case Variant::kKRnn: return RunKRnn(instance, spec.k, options);
    case Variant::kBiKRnn: return RunBiKRnn(instance, spec.k, options);
    case Variant::kNn:
    case Variant::kBranchingNn: {
      const auto started = std::chrono::steady_clock::now();
      RunResult run;
      run.variant = spec.variant;
      run.k = 1;
      run.winning_start = {spec.start};
      run.starts_evaluated = 1;
      run.tour = spec.variant == Variant::kNn
                     ? RunNnFrom(instance, spec.start)
                     : RunBranchingNn(instance, spec.start, config.node_budget);
      run.wall_time = std::chrono::steady_clock::now() - started;
      return run;
    }
  }
  throw ConfigError("unknown variant");
}

BenchRow RunRow(const NamedInstance& named, const BenchConfig& config) {
  BenchRow row;
  row.dataset = named.dataset;
  row.dimension = named.instance.dimension();
  row.optimum = ResolveOptimum(config, named);
  for (const auto& spec : config.variants) {
    VariantOutcome outcome;
    try {
      outcome.run = RunVariant(named.instance, spec, config);
      outcome.result = ValidateTour(named.instance, outcome.run.tour);
    } catch (const Error& e) {
      throw SolverError(named.dataset, spec.Label() + ": " + e.what());
    }
    if (outcome.result < row.optimum) {
      throw SolverError(named.dataset,
                        spec.Label() + " found length " +
                            std::to_string(outcome.result) +
                            " below the declared optimum " +
                            std::to_string(row.optimum));
    }
    outcome.excess = ComputeExcess(outcome.result, row.optimum);
    outcome.wall_time = outcome.run.wall_time;
    row.outcomes.push_back(std::move(outcome));
  }
  return row;
}

std::string CsvHeader(const BenchReport& report, const FormatOptions& options) {
  std::string out = "dataset,optimum";
  for (const auto& spec : report.variants) {
    const auto label = spec.Label();
    out += "," + label + "_result," + label + "_excess";
    if (options.timings) out += "," + label + "_ms";
  }
  return out;
}

std::string FormatCsv(const BenchReport& report, const FormatOptions& options) {
  std::string out = CsvHeader(report, options) + "\n";
  for (const auto& row : report.rows) {
    out += row.dataset + "," + std::to_string(row.optimum);
    for (const auto& o : row.outcomes) {
      out += "," + std::to_string(o.result) + "," + o.excess.ToString();
      if (options.timings) out += "," + FormatMillis(o.wall_time);
    }
    out += "\n";
  }
  return out;
}

std::string FormatJson(const BenchReport& report, const FormatOptions& options) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json obj;
    obj["dataset"] = row.dataset;
    obj["optimum"] = row.optimum;
    for (std::size_t v = 0; v < report.variants.size(); ++v) {
      const auto label = report.variants[v].Label();
      const auto& o = row.outcomes[v];
      obj[label + "_result"] = o.result;
      obj[label + "_excess"] = o.excess.value();
      if (options.timings) {
        obj[label + "_ms"] = std::chrono::duration<double, std::milli>(o.wall_time).count();
      }
    }
    rows.push_back(std::move(obj));
  }
  return rows.dump(2) + "\n";
}

std::string FormatMarkdown(const BenchReport& report, const FormatOptions& options) {
  std::ostringstream out;
  out << "| Dataset | Optimum |";
  for (const auto& spec : report.variants) {
    out << ' ' << spec.Label() << " Result | " << spec.Label() << " Excess |";
    if (options.timings) out << ' ' << spec.Label() << " ms |";
  }
  out << "\n|---|---:|";
  for (std::size_t v = 0; v < report.variants.size(); ++v) {
    out << "---:|---:|" << (options.timings ? "---:|" : "");
  }
  out << '\n';
  for (const auto& row : report.rows) {
    out << "| " << row.dataset << " | " << row.optimum << " |";
    for (const auto& o : row.outcomes) {
      out << ' ' << o.result << " | **" << o.excess.ToString() << "** |";
      if (options.timings) out << ' ' << FormatMillis(o.wall_time) << " |";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string VariantSpec::Label() const {
  switch (variant) {
    case Variant::kKRnn: return std::to_string(k) + "-RNN";
    case Variant::kBiKRnn: return "Bi-" + std::to_string(k) + "-RNN";
    case Variant::kNn: return "NN(" + std::to_string(start) + ")";
    case Variant::kBranchingNn: return "Branch-NN(" + std::to_string(start) + ")";
  }
  return "?";
}

std::vector<VariantSpec> ParseVariants(std::string_view text) {
  std::vector<VariantSpec> out;
  for (const auto item : Split(text, ',')) {
    const auto token = Trim(item);
    if (token.empty()) continue;
    const auto colon = token.find(':');
    const auto kind = token.substr(0, colon);
    const std::optional<std::string_view> arg =
        colon == std::string_view::npos ? std::nullopt
                                        : std::optional(token.substr(colon + 1));
    VariantSpec spec;
    if (kind == "krnn" || kind == "bi") {
      spec.variant = kind == "krnn" ? Variant::kKRnn : Variant::kBiKRnn;
      const auto k = arg ? ParseInteger<int>(*arg) : std::nullopt;
      if (!k || *k < 1) {
        throw ConfigError("variant '" + std::string(token) + "' needs k >= 1, e.g. " +
                          std::string(kind) + ":2");
      }
      spec.k = *k;
    } else if (kind == "nn" || kind == "branch") {
      spec.variant = kind == "nn" ? Variant::kNn : Variant::kBranchingNn;
      if (arg) {
        const auto start = ParseInteger<int>(*arg);
        if (!start || *start < 0) {
          throw ConfigError("variant '" + std::string(token) + "' has an invalid start");
        }
        spec.start = *start;
      }
    } else {
      throw ConfigError("unknown variant '" + std::string(token) + "'");
    }
    out.push_back(spec);
  }
  if (out.empty()) throw ConfigError("no variants given");
  return out;
}

std::string ExcessPercent::ToString() const {
  const std::int64_t magnitude = hundredths < 0 ? -hundredths : hundredths;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%s%lld.%02lld", hundredths < 0 ? "-" : "",
                static_cast<long long>(magnitude / 100),
                static_cast<long long>(magnitude % 100));
  return buf;
}

ExcessPercent ComputeExcess(CostValue result, CostValue optimum) {
  if (optimum <= 0) throw NonPositiveOptimum(optimum);
  // round(10000 * diff / optimum), halves away from zero, in exact integers.
  const __int128 scaled = static_cast<__int128>(result - optimum) * 10000;
  const __int128 magnitude = scaled < 0 ? -scaled : scaled;
  const __int128 rounded = (2 * magnitude + optimum) / (2 * static_cast<__int128>(optimum));
  return ExcessPercent{static_cast<std::int64_t>(scaled < 0 ? -rounded : rounded)};
}

OptimaTable ParseOptima(std::string_view text) {
  OptimaTable table;
  int line_no = 0;
  for (const auto raw : Split(text, '\n')) {
    ++line_no;
    const auto line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = Split(line, ',');
    if (fields.size() != 2) {
      throw ConfigError("optima line " + std::to_string(line_no) +
                        ": expected 'dataset,optimum'");
    }
    const auto name = Trim(fields[0]);
    const auto value = ParseInteger<CostValue>(fields[1]);
    if (!value) {
      if (table.empty() && name == "dataset") continue;  // header
      throw ConfigError("optima line " + std::to_string(line_no) +
                        ": optimum is not an integer");
    }
    if (!table.emplace(std::string(name), *value).second) {
      throw ConfigError("optima line " + std::to_string(line_no) + ": duplicate dataset '" +
                        std::string(name) + "'");
    }
  }
  return table;
}

OptimaTable LoadOptima(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open optima file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return ParseOptima(buf.str());
}

std::vector<std::filesystem::path> CollectInstancePaths(std::string_view spec) {
  namespace fs = std::filesystem;
  std::vector<fs::path> out;
  if (fs::is_directory(fs::path(spec))) {
    for (const auto& entry : fs::directory_iterator(fs::path(spec))) {
      const auto ext = entry.path().extension();
      if (entry.is_regular_file() && (ext == ".tsp" || ext == ".atsp")) {
        out.push_back(entry.path());
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  for (const auto item : Split(spec, ',')) {
    const auto token = Trim(item);
    if (token.empty()) continue;
    if (!fs::is_regular_file(fs::path(token))) {
      throw ConfigError("instance file not found: " + std::string(token));
    }
    out.emplace_back(token);
  }
  if (out.empty()) throw ConfigError("no instances matched '" + std::string(spec) + "'");
  return out;
}

BenchReport RunBenchmark(const BenchConfig& config) {
  if (config.variants.empty()) throw ConfigError("no variants configured");
  if (config.threads < 1) throw ConfigError("thread count must be at least 1");
  for (const auto& spec : config.variants) {
    if ((spec.variant == Variant::kKRnn || spec.variant == Variant::kBiKRnn) && spec.k < 1) {
      throw ConfigError("k must be at least 1 for " + spec.Label());
    }
  }

  std::vector<NamedInstance> instances;
  for (const auto& path : config.instance_paths) {
    instances.push_back({path.stem().string(), tsplib::LoadInstance(path)});
  }
  if (config.synthetic) {
    const auto& s = *config.synthetic;
    std::mt19937_64 rng(s.seed);
    for (int i = 0; i < s.count; ++i) {
      RandomInstanceSpec spec;
      spec.n = s.n;
      spec.symmetric = s.symmetric;
      const auto name = "synthetic-" + std::to_string(s.seed) + "-" + std::to_string(i);
      instances.push_back({name, RandomInstance(spec, rng, name)});
    }
  }
  if (instances.empty()) throw ConfigError("no instances to benchmark");
  std::sort(instances.begin(), instances.end(),
            [](const auto& a, const auto& b) { return a.dataset < b.dataset; });

  BenchReport report;
  report.variants = config.variants;
  for (const auto& named : instances) report.rows.push_back(RunRow(named, config));
  return report;
}

ReportFormat ParseReportFormat(std::string_view text) {
  if (text == "csv") return ReportFormat::kCsv;
  if (text == "json") return ReportFormat::kJson;
  if (text == "md" || text == "markdown") return ReportFormat::kMarkdown;
  throw ConfigError("unknown report format '" + std::string(text) + "'");
}

std::string FormatReport(const BenchReport& report, ReportFormat format,
                         const FormatOptions& options) {
  switch (format) {
    case ReportFormat::kCsv: return FormatCsv(report, options);
    case ReportFormat::kJson: return FormatJson(report, options);
    case ReportFormat::kMarkdown: return FormatMarkdown(report, options);
  }
  return {};
}

}  // namespace krnn::bench
