#include "krnn/bench.hpp"

#include <gtest/gtest.h>

#include <random>

#include "json.hpp"
#include "krnn/error.hpp"
#include "test_support.hpp"

namespace krnn::bench {
namespace {

// round(10000 (r - o) / o) with halves away from zero, for r >= o > 0.
std::int64_t RefHundredths(std::int64_t r, std::int64_t o) {
  return (20000 * (r - o) + o) / (2 * o);
}

TEST(ExcessTest, HandValues) {
  EXPECT_EQ(ComputeExcess(56, 39).ToString(), "43.59");
  EXPECT_EQ(ComputeExcess(39, 39).ToString(), "0.00");
  EXPECT_EQ(ComputeExcess(5639, 5620).ToString(), "0.34");
  EXPECT_EQ(ComputeExcess(3, 2).ToString(), "50.00");
  EXPECT_EQ(ComputeExcess(2, 1).ToString(), "100.00");
  // 1/80000 = 0.00125% rounds down, 1/20000 = 0.005% rounds up.
  EXPECT_EQ(ComputeExcess(80001, 80000).hundredths, 0);
  EXPECT_EQ(ComputeExcess(20001, 20000).hundredths, 1);
  EXPECT_DOUBLE_EQ(ComputeExcess(56, 39).value(), 43.59);
  EXPECT_THROW(ComputeExcess(5, 0), NonPositiveOptimum);
  EXPECT_THROW(ComputeExcess(5, -3), NonPositiveOptimum);
}

TEST(ExcessTest, MatchesIntegerOracle) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::int64_t> opt(1, 5'000'000);
  for (int i = 0; i < 20000; ++i) {
    const std::int64_t o = opt(rng);
    const std::int64_t r = o + opt(rng) % (o + 1);
    ASSERT_EQ(ComputeExcess(r, o).hundredths, RefHundredths(r, o)) << r << "/" << o;
  }
}

TEST(VariantTest, ParseAndLabel) {
  const auto v = ParseVariants("krnn:1, krnn:2,bi:2,nn,nn:3,branch:4");
  ASSERT_EQ(v.size(), 6u);
  EXPECT_EQ(v[0].Label(), "1-RNN");
  EXPECT_EQ(v[1].Label(), "2-RNN");
  EXPECT_EQ(v[2].Label(), "Bi-2-RNN");
  EXPECT_EQ(v[3].Label(), "NN(0)");
  EXPECT_EQ(v[4].Label(), "NN(3)");
  EXPECT_EQ(v[5].Label(), "Branch-NN(4)");
  EXPECT_EQ(v[2].variant, Variant::kBiKRnn);
  EXPECT_EQ(v[2].k, 2);
  for (const char* bad : {"", "krnn", "krnn:x", "foo:1", "bi:-1", "krnn:1:2"}) {
    EXPECT_THROW(ParseVariants(bad), ConfigError) << bad;
  }
}

TEST(OptimaTest, Parse) {
  const auto t = ParseOptima("dataset,optimum\n# comment\nbr17,39\n\nft53, 6905\n");
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(t.at("br17"), 39);
  EXPECT_EQ(t.at("ft53"), 6905);
  EXPECT_THROW(ParseOptima("br17\n"), ConfigError);
  EXPECT_THROW(ParseOptima("br17,abc\n"), ConfigError);
  EXPECT_THROW(ParseOptima("br17,39\nbr17,40\n"), ConfigError);
  const auto shipped = LoadOptima(testing::DataDir() / "optima.csv");
  EXPECT_EQ(shipped.at("br17"), 39);
  EXPECT_EQ(shipped.at("gr17"), 2085);
  EXPECT_THROW(LoadOptima(testing::DataDir() / "no-such-file.csv"), ConfigError);
}

TEST(FormatTest, ParseReportFormat) {
  EXPECT_EQ(ParseReportFormat("csv"), ReportFormat::kCsv);
  EXPECT_EQ(ParseReportFormat("json"), ReportFormat::kJson);
  EXPECT_EQ(ParseReportFormat("md"), ReportFormat::kMarkdown);
  EXPECT_THROW(ParseReportFormat("xml"), ConfigError);
}

BenchConfig Br17Config() {
  BenchConfig config;
  config.instance_paths = {testing::DataDir() / "tsplib" / "br17.atsp"};
  config.variants = ParseVariants("krnn:1,krnn:2");
  config.optima = LoadOptima(testing::DataDir() / "optima.csv");
  return config;
}

TEST(RunBenchmarkTest, Br17Csv) {
  const BenchReport report = RunBenchmark(Br17Config());
  ASSERT_EQ(report.rows.size(), 1u);
  EXPECT_EQ(report.rows[0].dataset, "br17");
  EXPECT_EQ(report.rows[0].dimension, 17);
  EXPECT_EQ(FormatReport(report, ReportFormat::kCsv, {.timings = false}),
            "dataset,optimum,1-RNN_result,1-RNN_excess,2-RNN_result,2-RNN_excess\n"
            "br17,39,56,43.59,39,0.00\n");
  const std::string timed = FormatReport(report, ReportFormat::kCsv);
  EXPECT_NE(timed.find("1-RNN_ms"), std::string::npos);
  const std::string md = FormatReport(report, ReportFormat::kMarkdown, {.timings = false});
  EXPECT_NE(md.find("| br17 | 39 | 56 | **43.59** | 39 | **0.00** |"), std::string::npos);
}

TEST(RunBenchmarkTest, JsonRoundTrip) {
  const BenchReport report = RunBenchmark(Br17Config());
  const auto json = nlohmann::json::parse(FormatReport(report, ReportFormat::kJson));
  ASSERT_TRUE(json.is_array());
  ASSERT_EQ(json.size(), 1u);
  EXPECT_EQ(json[0]["dataset"], "br17");
  EXPECT_EQ(json[0]["optimum"], 39);
  EXPECT_EQ(json[0]["1-RNN_result"], 56);
  EXPECT_DOUBLE_EQ(json[0]["1-RNN_excess"].get<double>(), 43.59);
  EXPECT_TRUE(json[0].contains("2-RNN_ms"));
}

TEST(RunBenchmarkTest, ExactOptimumWhenMissingFromTable) {
  BenchConfig config = Br17Config();
  config.optima.clear();
  EXPECT_EQ(RunBenchmark(config).rows[0].optimum, 39);
  config.held_karp_cap = 16;
  EXPECT_THROW(RunBenchmark(config), MissingOptimum);
}

TEST(RunBenchmarkTest, OptimumAboveAResultIsReported) {
  BenchConfig config = Br17Config();
  config.optima["br17"] = 40;
  EXPECT_THROW(RunBenchmark(config), SolverError);
}

TEST(RunBenchmarkTest, SolverFailuresCarryTheDataset) {
  BenchConfig config = Br17Config();
  config.variants = ParseVariants("krnn:18");
  try {
    RunBenchmark(config);
    FAIL();
  } catch (const SolverError& e) {
    EXPECT_NE(std::string(e.what()).find("br17"), std::string::npos);
  }
}

TEST(RunBenchmarkTest, SyntheticFullKIsExact) {
  BenchConfig config;
  config.synthetic = SyntheticSuite{.count = 3, .n = 8, .symmetric = false, .seed = 5};
  config.variants = ParseVariants("krnn:8,krnn:1");
  const BenchReport report = RunBenchmark(config);
  ASSERT_EQ(report.rows.size(), 3u);
  for (const auto& row : report.rows) {
    EXPECT_EQ(row.outcomes[0].excess.hundredths, 0) << row.dataset;
    EXPECT_GE(row.outcomes[1].result, row.outcomes[0].result);
  }
}

TEST(RunBenchmarkTest, ReportIndependentOfThreadCount) {
  BenchConfig config;
  config.synthetic = SyntheticSuite{.count = 4, .n = 10, .symmetric = true, .seed = 9};
  config.variants = ParseVariants("krnn:1,krnn:2,bi:2,nn:3,branch:0");
  const auto one = FormatReport(RunBenchmark(config), ReportFormat::kCsv, {.timings = false});
  config.threads = 8;
  const auto eight = FormatReport(RunBenchmark(config), ReportFormat::kCsv, {.timings = false});
  EXPECT_EQ(one, eight);
}

TEST(RunBenchmarkTest, ConfigErrors) {
  BenchConfig config;
  config.variants = ParseVariants("krnn:1");
  EXPECT_THROW(RunBenchmark(config), ConfigError);  // no instances
  EXPECT_THROW(CollectInstancePaths("/no/such/dir"), ConfigError);
  const auto paths = CollectInstancePaths((testing::DataDir() / "tsplib").string());
  EXPECT_GE(paths.size(), 6u);
  EXPECT_TRUE(std::is_sorted(paths.begin(), paths.end()));
}

}  // namespace
}  // namespace krnn::bench
