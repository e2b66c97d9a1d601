#include "padeloc/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>

#include "padeloc/errors.hpp"

namespace padeloc {

namespace {

constexpr std::size_t kMaxAttempts = 1000;

bool is_pade_statistic(StatisticKind s) { return s != StatisticKind::original; }

PadeStatistic as_pade(StatisticKind s) {
  switch (s) {
    case StatisticKind::zero: return PadeStatistic::zero;
    case StatisticKind::res_pole: return PadeStatistic::res_pole;
    case StatisticKind::res_zero: return PadeStatistic::res_zero;
    default: return PadeStatistic::pole;
  }
}

bool run_test(TestKind test, const BivariateSample& sample, const ExperimentConfig& cfg) {
  switch (test) {
    case TestKind::vdw:
      return location_test(sample, ScoreFunction::vdw(), cfg.beta, cfg.mode).reject;
    case TestKind::pole_score:
      return location_test(sample, ScoreFunction::pole(), cfg.beta, cfg.mode).reject;
    case TestKind::hotelling:
      return hotelling_test(sample, cfg.beta).reject;
  }
  return false;
}

struct ReplicateOutcome {
  std::vector<std::uint8_t> reject;  // statistics x tests, row-major
  std::size_t discarded = 0;
};

ReplicateOutcome run_replicate(const ExperimentConfig& cfg, const SignalNoiseModel& model,
                               std::size_t snr_index, std::size_t rep) {
  const auto& stats = cfg.statistics;
  const bool need_pade = std::any_of(stats.begin(), stats.end(), is_pade_statistic);
  ReplicateOutcome out;
  out.reject.assign(stats.size() * cfg.tests.size(), 0);

  for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Rng rng(substream_seed(cfg.seed, {snr_index, rep, attempt}));
    std::vector<std::vector<Point2>> points(stats.size());
    for (auto& v : points) v.reserve(cfg.m);

    std::size_t series_draws = 0;
    while (points.front().size() < cfg.m) {
      if (++series_draws > kMaxAttempts * cfg.m) {
        throw NumericalError("too many degenerate series while drawing one replicate");
      }
      const auto series = sample_series(model, rng);
      PadeParameters params;
      if (need_pade) {
        try {
          params = extract_pade_parameters(series);
        } catch (const NumericalError&) {
          ++out.discarded;
          continue;
        }
      }
      for (std::size_t k = 0; k < stats.size(); ++k) {
        if (is_pade_statistic(stats[k])) {
          points[k].push_back(select_statistic(params, as_pade(stats[k]), cfg.pool_rule));
        } else {
          const auto& a = series[cfg.original_term];
          points[k].emplace_back(a.real(), a.imag());
        }
      }
    }

    try {
      for (std::size_t k = 0; k < stats.size(); ++k) {
        const BivariateSample sample(std::move(points[k]));
        for (std::size_t t = 0; t < cfg.tests.size(); ++t) {
          out.reject[k * cfg.tests.size() + t] = run_test(cfg.tests[t], sample, cfg) ? 1 : 0;
        }
      }
      return out;
    } catch (const NumericalError&) {
      ++out.discarded;  // whole replicate redrawn from the next substream
    }
  }
  throw NumericalError("replicate " + std::to_string(rep) + " failed after " +
                       std::to_string(kMaxAttempts) + " attempts");
}

}  // namespace

std::string_view to_string(StatisticKind s) {
  switch (s) {
    case StatisticKind::pole: return "pole";
    case StatisticKind::zero: return "zero";
    case StatisticKind::res_pole: return "res_pole";
    case StatisticKind::res_zero: return "res_zero";
    case StatisticKind::original: return "original";
  }
  return "?";
}

std::string_view to_string(TestKind t) {
  switch (t) {
    case TestKind::vdw: return "vdw";
    case TestKind::pole_score: return "pole_score";
    case TestKind::hotelling: return "hotelling";
  }
  return "?";
}

void ExperimentConfig::validate() const {
  if (!(alpha > 0.0 && alpha <= 2.0)) throw UsageError("alpha", "alpha must lie in (0, 2]");
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw UsageError("sigma", "sigma must be finite and >= 0");
  }
  if (snr_grid.empty()) throw UsageError("snr_grid", "snr_grid must not be empty");
  for (const double r : snr_grid) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw UsageError("snr_grid", "snr values must be finite and >= 0");
    }
  }
  if (!(xi_mod >= 0.0) || !std::isfinite(xi_mod) || !std::isfinite(xi_arg)) {
    throw UsageError("xi_mod", "xi must be finite with modulus >= 0");
  }
  if (!std::isfinite(c_phase)) throw UsageError("c_phase", "c_phase must be finite");
  if (m < 3) throw UsageError("m", "m must be >= 3");
  if (reps < 1) throw UsageError("reps", "reps must be >= 1");
  if (!(beta > 0.0 && beta < 1.0)) throw UsageError("beta", "beta must lie in (0, 1)");
  if (p < 1 || p > 8) throw UsageError("p", "Pade order p must lie in [1, 8]");
  if (statistics.empty()) throw UsageError("statistic", "at least one statistic is required");
  if (tests.empty()) throw UsageError("test", "at least one test is required");
  for (const auto s : statistics) {
    if ((s == StatisticKind::zero || s == StatisticKind::res_zero) && p < 2) {
      throw UsageError("statistic",
                       std::string(to_string(s)) + " statistic needs Pade order p >= 2");
    }
  }
  if (original_term >= 2 * p) {
    throw UsageError("original_term", "original_term must be < 2p");
  }
}

std::vector<PowerRow> run_power_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::size_t n_snr = cfg.snr_grid.size();
  std::vector<ReplicateOutcome> outcomes(n_snr * cfg.reps);
  std::vector<SignalNoiseModel> models;
  for (const double rho : cfg.snr_grid) {
    models.push_back(
        SignalNoiseModel::from_snr(cfg.alpha, cfg.sigma, rho, cfg.xi(), 2 * cfg.p, cfg.c_phase));
  }
  parallel_for(outcomes.size(), cfg.threads, [&](std::size_t task) {
    const std::size_t s = task / cfg.reps;
    const std::size_t r = task % cfg.reps;
    outcomes[task] = run_replicate(cfg, models[s], s, r);
  });

  std::vector<PowerRow> rows;
  const std::size_t n_tests = cfg.tests.size();
  for (std::size_t s = 0; s < n_snr; ++s) {
    std::size_t discarded = 0;
    for (std::size_t r = 0; r < cfg.reps; ++r) discarded += outcomes[s * cfg.reps + r].discarded;
    const bool warn = static_cast<double>(discarded) > 0.01 * static_cast<double>(cfg.reps * cfg.m);
    if (warn) {
      std::cerr << "warning: " << discarded << " degenerate draws discarded at snr "
                << cfg.snr_grid[s] << '\n';
    }
    for (std::size_t k = 0; k < cfg.statistics.size(); ++k) {
      for (std::size_t t = 0; t < n_tests; ++t) {
        std::size_t rejections = 0;
        for (std::size_t r = 0; r < cfg.reps; ++r) {
          rejections += outcomes[s * cfg.reps + r].reject[k * n_tests + t];
        }
        PowerRow row;
        row.alpha = cfg.alpha;
        row.snr = cfg.snr_grid[s];
        row.xi_re = cfg.xi().real();
        row.xi_im = cfg.xi().imag();
        row.m = cfg.m;
        row.reps = cfg.reps;
        row.beta = cfg.beta;
        row.statistic = std::string(to_string(cfg.statistics[k]));
        row.test = std::string(to_string(cfg.tests[t]));
        row.mode = cfg.tests[t] == TestKind::hotelling ? "none" : std::string(to_string(cfg.mode));
        row.power = static_cast<double>(rejections) / static_cast<double>(cfg.reps);
        row.mc_stderr = std::sqrt(row.power * (1.0 - row.power) / static_cast<double>(cfg.reps));
        row.discarded = discarded;
        row.seed = cfg.seed;
        row.warning = warn;
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::vector<Complex> simulate_poles(const SignalNoiseModel& model, std::size_t count,
                                    std::uint64_t seed, std::size_t* discarded,
                                    unsigned threads) {
  model.validate();
  std::vector<Complex> poles(count);
  std::vector<std::size_t> redraws(count, 0);
  parallel_for(count, threads, [&](std::size_t i) {
    for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
      Rng rng(substream_seed(seed, {i, attempt}));
      try {
        poles[i] = extract_pade_parameters(sample_series(model, rng)).poles.front();
        return;
      } catch (const NumericalError&) {
        ++redraws[i];
      }
    }
    throw NumericalError("pole draw " + std::to_string(i) + " stayed degenerate");
  });
  if (discarded) *discarded = std::accumulate(redraws.begin(), redraws.end(), std::size_t{0});
  return poles;
}

std::vector<double> null_pole_modulus_transform(double alpha, double sigma, std::size_t reps,
                                                std::uint64_t seed, unsigned threads) {
  const auto model = SignalNoiseModel::from_snr(alpha, sigma, 0.0, Complex{1.0, 0.0}, 2);
  const auto poles = simulate_poles(model, reps, seed, nullptr, threads);
  std::vector<double> u(poles.size());
  std::transform(poles.begin(), poles.end(), u.begin(), [](const Complex& z) {
    const double r2 = std::norm(z);
    return r2 / (1.0 + r2);
  });
  return u;
}

KsResult ks_uniformity_check(double alpha, double sigma, std::size_t reps, std::uint64_t seed,
                             unsigned threads) {
  if (reps < 1000) throw DomainError("ks_uniformity_check needs reps >= 1000");
  if (!(sigma > 0.0)) throw DomainError("ks_uniformity_check needs sigma > 0");
  return ks_uniform(null_pole_modulus_transform(alpha, sigma, reps, seed, threads));
}

}  // namespace padeloc
