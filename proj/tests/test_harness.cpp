#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "petz/harness.hpp"

namespace {

using namespace petz::harness;

SweepConfig small_config(std::size_t trials = 40) {
  SweepConfig cfg;
  cfg.trials = trials;
  cfg.dims = {2, 3, 4};
  return cfg;
}

TEST(CheckNames, RoundTrip) {
  for (auto name : check_names()) {
    const auto c = parse_check(name);
    ASSERT_TRUE(c.has_value()) << name;
    EXPECT_EQ(check_name(*c), name);
  }
  EXPECT_FALSE(parse_check("nope").has_value());
}

TEST(SweepConfig, Validation) {
  SweepConfig cfg;
  cfg.trials = 0;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = SweepConfig{};
  cfg.dims = {1};
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = SweepConfig{};
  cfg.alphas = {0.5, 0.0};
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg = SweepConfig{};
  cfg.jobs = 0;
  EXPECT_THROW(cfg.validate(), ConfigError);
  EXPECT_NO_THROW(SweepConfig{}.validate());
}

TEST(IdentityMargin, Conventions) {
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_EQ(identity_margin(inf, inf), 0.0);
  EXPECT_EQ(identity_margin(1.0, 1.5), -0.5);
  EXPECT_TRUE(std::isinf(identity_margin(inf, 1.0)));
}

TEST(FormatNumber, Conventions) {
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_number(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(format_number(std::nan("")), "");
}

class EveryCheck : public ::testing::TestWithParam<std::string> {};

TEST_P(EveryCheck, SmallSweepPasses) {
  const auto check = parse_check(GetParam());
  ASSERT_TRUE(check);
  const auto report = run_sweep(*check, small_config());
  EXPECT_TRUE(report.passed()) << report.failure_count;
  EXPECT_FALSE(report.rows.empty());
  std::size_t failures = 0;
  for (const auto& r : report.rows) {
    failures += r.margin < -report.config.tolerance;
    EXPECT_EQ(r.seed, 7u);
  }
  EXPECT_EQ(failures, report.failure_count);
  for (std::size_t k = 1; k < report.rows.size(); ++k) EXPECT_LE(report.rows[k - 1].trial, report.rows[k].trial);
}

INSTANTIATE_TEST_SUITE_P(Harness, EveryCheck,
                         ::testing::Values("theorem", "holevo", "inverted", "classical", "exchange", "ns-identity",
                                           "lemma1", "lemma2"));

TEST(RunSweep, RowCountsPerCheck) {
  const auto cfg = small_config(10);
  const std::size_t a = cfg.alphas.size();
  EXPECT_EQ(run_sweep(Check::Theorem, cfg).rows.size(), 10 * a);
  EXPECT_EQ(run_sweep(Check::Holevo, cfg).rows.size(), 30 * a);
  EXPECT_EQ(run_sweep(Check::Exchange, cfg).rows.size(), 10u);
  EXPECT_EQ(run_sweep(Check::Lemma1, cfg).rows.size(), 10 * (2 * a + 1));
}

TEST(RunSweep, NsIdentityResidualReported) {
  const auto report = run_sweep(Check::NsIdentity, small_config(100));
  const auto* s = report.find("ns-identity");
  ASSERT_NE(s, nullptr);
  EXPECT_LE(s->max_abs_residual, 1e-9);
}

TEST(RunSweep, ThreadCountDoesNotChangeOutput) {
  auto cfg = small_config(60);
  const auto serial = run_sweep(Check::Theorem, cfg);
  cfg.jobs = 4;
  const auto parallel = run_sweep(Check::Theorem, cfg);
  std::ostringstream a, b;
  write_csv(serial, a);
  write_csv(parallel, b);
  EXPECT_EQ(a.str(), b.str());
}

TEST(RunSweep, SeedChangesOutput) {
  auto cfg = small_config(5);
  std::ostringstream a, b;
  write_csv(run_sweep(Check::Theorem, cfg), a);
  cfg.seed = 8;
  write_csv(run_sweep(Check::Theorem, cfg), b);
  EXPECT_NE(a.str(), b.str());
}

TEST(Saturation, GridAndFlatRows) {
  const double eps[] = {0.0, 0.1, 2.0};
  const double alphas[] = {0.5, 1.0, 2.0};
  const auto report = run_saturation(eps, alphas, 7, 1e-8);
  ASSERT_EQ(report.rows.size(), 9u);
  EXPECT_TRUE(report.passed());
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(report.rows[k].lhs, 0.0);
    EXPECT_EQ(report.rows[k].rhs, 0.0);
  }
}

TEST(Report, CsvHeaderAndColumns) {
  const auto report = run_sweep(Check::Exchange, small_config(3));
  std::ostringstream out;
  write_csv(report, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "trial,dim,alpha,seed,lhs,rhs,margin,inequality-id,T,s,epsilon-kernel");
  std::size_t n = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 10);
    ++n;
  }
  EXPECT_EQ(n, 3u);
}

TEST(Report, SummaryJson) {
  const auto report = run_sweep(Check::Lemma2, small_config(5));
  const auto j = summary_json(report);
  EXPECT_EQ(j["check"], "lemma2");
  EXPECT_EQ(j["failure_count"], 0);
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["rows"], 5);
  EXPECT_EQ(j["inequalities"].size(), 1u);
  EXPECT_EQ(rows_json(report).size(), 5u);
}

}  // namespace
