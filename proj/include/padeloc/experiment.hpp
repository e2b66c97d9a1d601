#pragma once

// Monte Carlo power experiments and distributional diagnostics.
//
// Reproducibility: replicate r at SNR index s, attempt k draws from
// Rng(substream_seed(seed, {s, r, k})). Every statistic and test in one run
// sees the same replicates (paired comparisons), and the per-replicate
// decisions are reduced in index order, so results do not depend on the
// number of worker threads.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "padeloc/gof.hpp"
#include "padeloc/pade.hpp"
#include "padeloc/rank_test.hpp"
#include "padeloc/stable_noise.hpp"

namespace padeloc {

enum class StatisticKind { pole, zero, res_pole, res_zero, original };
enum class TestKind { vdw, pole_score, hotelling };

std::string_view to_string(StatisticKind s);
std::string_view to_string(TestKind t);

struct ExperimentConfig {
  double alpha = 2.0;
  double sigma = 1.0;
  std::vector<double> snr_grid{0.01, 0.02, 0.05, 0.1, 0.2, 0.5, 1.0, 2.0, 5.0};
  double xi_mod = 1.0;
  double xi_arg = std::numbers::pi / 4.0;
  double c_phase = 0.0;  ///< argument of the signal amplitude c
  std::size_t m = 100;
  std::size_t reps = 200;
  double beta = 0.05;
  std::uint64_t seed = 1;
  std::size_t p = 1;  ///< Pade order; series length n = 2p
  std::vector<StatisticKind> statistics{StatisticKind::pole};
  std::vector<TestKind> tests{TestKind::vdw};
  CosineMode mode = CosineMode::interdirection;
  SelectionRule pool_rule = SelectionRule::largest_modulus;
  std::size_t original_term = 0;  ///< which a_k the `original` statistic uses
  unsigned threads = 0;           ///< 0: hardware concurrency
  std::string out;                ///< output path, empty for stdout

  Complex xi() const { return std::polar(xi_mod, xi_arg); }
  /// Throws UsageError naming the offending key.
  void validate() const;
};

struct PowerRow {
  double alpha = 0.0;
  double snr = 0.0;
  double xi_re = 0.0;
  double xi_im = 0.0;
  std::size_t m = 0;
  std::size_t reps = 0;
  double beta = 0.0;
  std::string statistic;
  std::string test;
  std::string mode;
  double power = 0.0;
  double mc_stderr = 0.0;  ///< sqrt(power (1 - power) / reps)
  std::size_t discarded = 0;
  std::uint64_t seed = 0;
  bool warning = false;  ///< discarded draws above 1% of reps * m (not in CSV)
};

/// One PowerRow per (snr, statistic, test), in that nesting order.
std::vector<PowerRow> run_power_experiment(const ExperimentConfig& config);

/// Poles of `count` independent replicates of `model`, the largest-modulus
/// pole of each series. Draw i uses substream (seed, i, attempt); degenerate
/// series are redrawn. `discarded`, if given, receives the redraw count.
std::vector<Complex> simulate_poles(const SignalNoiseModel& model, std::size_t count,
                                    std::uint64_t seed, std::size_t* discarded = nullptr,
                                    unsigned threads = 0);

/// u = |xi|^2 / (1 + |xi|^2) for `reps` null poles (n = 2) at (alpha, sigma).
/// Uniform(0, 1) whatever alpha and sigma.
std::vector<double> null_pole_modulus_transform(double alpha, double sigma, std::size_t reps,
                                                std::uint64_t seed, unsigned threads = 0);

/// KS test of null_pole_modulus_transform against Uniform(0, 1).
/// DomainError when reps < 1000.
KsResult ks_uniformity_check(double alpha, double sigma, std::size_t reps, std::uint64_t seed,
                             unsigned threads = 0);

/// Runs fn(i) for i in [0, count) on `threads` workers (0: hardware
/// concurrency). The first exception thrown by any task is rethrown.
template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& fn);

}  // namespace padeloc

#include "padeloc/detail/parallel.hpp"
