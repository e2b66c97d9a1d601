#include <gtest/gtest.h>

#include <atomic>
#include <cmath>
#include <numbers>

#include "padeloc/errors.hpp"
#include "padeloc/experiment.hpp"
#include "padeloc/gof.hpp"
#include "padeloc/report.hpp"

using namespace padeloc;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.snr_grid = {0.0, 1.0};
  c.m = 40;
  c.reps = 60;
  c.seed = 17;
  c.statistics = {StatisticKind::pole, StatisticKind::original};
  c.tests = {TestKind::vdw, TestKind::pole_score, TestKind::hotelling};
  return c;
}

double rate_stderr(double p, std::size_t n) { return std::sqrt(p * (1.0 - p) / static_cast<double>(n)); }

}  // namespace

TEST(Config, ValidateRejects) {
  auto bad = [](auto mutate) {
    ExperimentConfig c;
    mutate(c);
    EXPECT_THROW(c.validate(), UsageError);
  };
  bad([](ExperimentConfig& c) { c.alpha = 0.0; });
  bad([](ExperimentConfig& c) { c.alpha = 2.1; });
  bad([](ExperimentConfig& c) { c.sigma = -1.0; });
  bad([](ExperimentConfig& c) { c.snr_grid.clear(); });
  bad([](ExperimentConfig& c) { c.snr_grid = {1.0, -0.5}; });
  bad([](ExperimentConfig& c) { c.m = 2; });
  bad([](ExperimentConfig& c) { c.reps = 0; });
  bad([](ExperimentConfig& c) { c.beta = 1.0; });
  bad([](ExperimentConfig& c) { c.p = 0; });
  bad([](ExperimentConfig& c) { c.statistics.clear(); });
  bad([](ExperimentConfig& c) { c.statistics = {StatisticKind::zero}; });
  bad([](ExperimentConfig& c) { c.original_term = 2; });
  ExperimentConfig ok;
  EXPECT_NO_THROW(ok.validate());
  ok.p = 2;
  ok.statistics = {StatisticKind::zero, StatisticKind::res_zero};
  EXPECT_NO_THROW(ok.validate());
}

TEST(Experiment, RowLayout) {
  const auto c = small_config();
  const auto rows = run_power_experiment(c);
  ASSERT_EQ(rows.size(), 2u * 2u * 3u);
  EXPECT_EQ(rows[0].snr, 0.0);
  EXPECT_EQ(rows[0].statistic, "pole");
  EXPECT_EQ(rows[0].test, "vdw");
  EXPECT_EQ(rows[0].mode, "interdirection");
  EXPECT_EQ(rows[2].test, "hotelling");
  EXPECT_EQ(rows[2].mode, "none");
  EXPECT_EQ(rows[3].statistic, "original");
  EXPECT_EQ(rows[6].snr, 1.0);
  for (const auto& r : rows) {
    EXPECT_GE(r.power, 0.0);
    EXPECT_LE(r.power, 1.0);
    EXPECT_NEAR(r.mc_stderr, rate_stderr(r.power, r.reps), 1e-15);
    EXPECT_EQ(r.seed, 17u);
    EXPECT_NEAR(r.xi_re, std::cos(std::numbers::pi / 4), 1e-15);
  }
}

TEST(Experiment, DeterministicAcrossRunsAndThreads) {
  auto c = small_config();
  c.threads = 1;
  const auto a = format_csv(run_power_experiment(c));
  const auto b = format_csv(run_power_experiment(c));
  c.threads = 3;
  const auto t = format_csv(run_power_experiment(c));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, t);
  c.seed = 18;
  EXPECT_NE(a, format_csv(run_power_experiment(c)));
}

TEST(Experiment, NullSizeNearBeta) {
  // size is a property of the null only, so it must hold for any alpha
  for (double alpha : {2.0, 0.7}) {
    ExperimentConfig c;
    c.alpha = alpha;
    c.snr_grid = {0.0};
    c.m = 50;
    c.reps = 600;
    c.seed = 3;
    c.tests = {TestKind::vdw, TestKind::pole_score};
    for (const auto& r : run_power_experiment(c)) {
      EXPECT_NEAR(r.power, c.beta, 4.0 * rate_stderr(c.beta, c.reps)) << alpha << " " << r.test;
    }
  }
}

TEST(Experiment, LargeSignalDetected) {
  ExperimentConfig c;
  c.snr_grid = {100.0};
  c.m = 30;
  c.reps = 100;
  c.statistics = {StatisticKind::original, StatisticKind::pole};
  c.tests = {TestKind::hotelling, TestKind::vdw};
  const auto rows = run_power_experiment(c);
  EXPECT_GE(rows[0].power, 0.99);  // original / hotelling
  EXPECT_GE(rows[1].power, 0.99);  // original / vdw
}

TEST(Experiment, PowerIncreasesWithSnr) {
  ExperimentConfig c;
  c.snr_grid = {0.0, 0.5, 4.0};
  c.m = 40;
  c.reps = 200;
  c.statistics = {StatisticKind::original};
  c.tests = {TestKind::hotelling};
  const auto rows = run_power_experiment(c);
  EXPECT_LT(rows[0].power, rows[1].power);
  EXPECT_LT(rows[1].power, rows[2].power);
}

TEST(Experiment, DegenerateSeriesAreRedrawn) {
  // sigma = 0: every noise-free series has rank one, so with p = 2 every
  // attempt fails and the run must report a numerical failure
  ExperimentConfig c;
  c.sigma = 0.0;
  c.snr_grid = {1.0};
  c.p = 2;
  c.m = 5;
  c.reps = 1;
  EXPECT_THROW(run_power_experiment(c), NumericalError);
}

TEST(Experiment, SimulatePolesShape) {
  const auto model = SignalNoiseModel::from_snr(1.5, 1.0, 0.0, 1.0, 2);
  std::size_t discarded = 99;
  const auto z = simulate_poles(model, 500, 5, &discarded, 2);
  ASSERT_EQ(z.size(), 500u);
  EXPECT_EQ(discarded, 0u);
  EXPECT_EQ(z, simulate_poles(model, 500, 5, nullptr, 1));
}

TEST(Experiment, NullPolesAreSpherical) {
  // argument uniform and independent of the modulus
  const auto model = SignalNoiseModel::from_snr(0.8, 1.0, 0.0, 1.0, 2);
  const auto z = simulate_poles(model, 20000, 11);
  std::vector<double> args;
  std::vector<std::size_t> table(64, 0);
  for (const auto& w : z) {
    const double a = (std::arg(w) + std::numbers::pi) / (2.0 * std::numbers::pi);
    const double r2 = std::norm(w);
    const double u = r2 / (1.0 + r2);
    args.push_back(a);
    const auto i = std::min<std::size_t>(7, static_cast<std::size_t>(u * 8));
    const auto j = std::min<std::size_t>(7, static_cast<std::size_t>(a * 8));
    ++table[i * 8 + j];
  }
  EXPECT_GT(ks_uniform(args).p_value, 0.001);
  EXPECT_GT(chi_square_independence(table, 8).p_value, 0.001);
}

TEST(Experiment, KsUniformityCheck) {
  EXPECT_GT(ks_uniformity_check(2.0, 1.0, 20000, 21).p_value, 0.01);
  EXPECT_GT(ks_uniformity_check(0.5, 3.0, 20000, 22).p_value, 0.01);
  EXPECT_THROW(ks_uniformity_check(1.0, 1.0, 999, 1), DomainError);
  const auto u = null_pole_modulus_transform(1.0, 1.0, 100, 4);
  for (double v : u) {
    EXPECT_GT(v, 0.0);
    EXPECT_LT(v, 1.0);
  }
}

TEST(ParallelFor, CoversAllAndRethrows) {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i]++; });
  for (auto& h : hits) EXPECT_EQ(h.load(), 1);
  EXPECT_THROW(parallel_for(100, 3,
                            [](std::size_t i) {
                              if (i == 57) throw NumericalError("boom");
                            }),
               NumericalError);
}
