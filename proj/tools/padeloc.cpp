// padeloc command-line tool: power experiments, location tests on CSV data,
// series simulation, Pade parameters and the null pole-modulus check.
//
// Exit codes: 0 success, 2 usage error, 3 numerical error, 1 anything else.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "padeloc/config.hpp"
#include "padeloc/errors.hpp"
#include "padeloc/experiment.hpp"
#include "padeloc/pade.hpp"
#include "padeloc/rank_test.hpp"
#include "padeloc/report.hpp"
#include "padeloc/rng.hpp"
#include "padeloc/stable_noise.hpp"

namespace {

using namespace padeloc;

const std::map<std::string_view, std::string_view> kKeyHelp{
    {"alpha", "stability index in (0, 2]"},
    {"sigma", "noise scale"},
    {"snr_grid", "comma-separated SNR values"},
    {"snr", "single SNR value"},
    {"xi_mod", "modulus of the true pole"},
    {"xi_arg", "argument of the true pole (radians)"},
    {"c_phase", "argument of the signal amplitude"},
    {"m", "points per test sample"},
    {"reps", "Monte Carlo replicates"},
    {"beta", "test level"},
    {"seed", "master seed"},
    {"p", "Pade order (series length 2p)"},
    {"statistic", "pole,zero,res_pole,res_zero,original (comma list)"},
    {"test", "vdw,pole_score,hotelling (comma list)"},
    {"mode", "interdirection or sign_cosine"},
    {"pool_rule", "largest_modulus or first"},
    {"original_term", "series index used by `original`"},
    {"threads", "worker threads, 0 for all cores"},
    {"out", "output path, stdout when empty"},
};

// Every configuration key as a --flag.
struct ConfigFlags {
  std::map<std::string, std::string> values;
  std::string file;

  void attach(CLI::App* app) {
    app->add_option("--config", file, "flat key=value configuration file")
        ->check(CLI::ExistingFile);
    for (const auto key : config_keys()) {
      std::string flag(key);
      std::replace(flag.begin(), flag.end(), '_', '-');
      const auto help = kKeyHelp.find(key);
      app->add_option("--" + flag, values[std::string(key)],
                      help == kKeyHelp.end() ? "" : std::string(help->second))
          ->allow_extra_args(false);
    }
  }

  bool given(const CLI::App* app, std::string_view key) const {
    std::string flag(key);
    std::replace(flag.begin(), flag.end(), '_', '-');
    return app->count("--" + flag) > 0;
  }

  // subcommand defaults < config file < flags
  ExperimentConfig resolve(const CLI::App* app,
                           const std::map<std::string, std::string>& defaults = {}) const {
    ExperimentConfig c;
    for (const auto& [k, v] : defaults) apply_setting(c, k, v);
    if (!file.empty()) {
      for (const auto& [k, v] : read_config_file(file)) apply_setting(c, k, v);
    }
    for (const auto key : config_keys()) {
      if (given(app, key)) apply_setting(c, key, values.at(std::string(key)));
    }
    c.validate();
    return c;
  }
};

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text_file(path, text);
  }
}

std::string fmt(Complex z) {
  return format_number(z.real()) + (std::signbit(z.imag()) ? "-" : "+") +
         format_number(std::abs(z.imag())) + "i";
}

void print_list(std::string_view name, const std::vector<Complex>& v) {
  std::cout << name << ':';
  for (const auto& z : v) std::cout << ' ' << fmt(z);
  std::cout << '\n';
}

int run_power(const CLI::App* app, const ConfigFlags& flags, const std::string& svg,
              bool theory) {
  const auto cfg = flags.resolve(app);
  const auto rows = run_power_experiment(cfg);
  write_output(format_csv(rows), cfg.out);
  if (!svg.empty()) {
    SvgOptions opts;
    opts.title = "power vs SNR, alpha=" + format_number(cfg.alpha) + ", m=" +
                 std::to_string(cfg.m);
    if (theory && cfg.alpha == 2.0) {
      // Gaussian a_k has mean c xi^k and covariance sigma^2 I
      const double gain = std::pow(cfg.xi_mod, 2.0 * static_cast<double>(cfg.original_term));
      for (const double rho : cfg.snr_grid) {
        opts.reference.emplace_back(
            rho, hotelling_power_from_noncentrality(static_cast<double>(cfg.m) * rho * gain,
                                                    cfg.m, cfg.beta));
      }
    }
    emit_svg(rows, svg, opts);
  }
  return 0;
}

int run_test(const CLI::App* app, const ConfigFlags& flags, const std::string& input) {
  const auto cfg = flags.resolve(app);
  const auto sample = BivariateSample::from_complex(read_complex_csv(input));
  LocationTestResult r;
  switch (cfg.tests.front()) {
    case TestKind::vdw: r = location_test(sample, ScoreFunction::vdw(), cfg.beta, cfg.mode); break;
    case TestKind::pole_score:
      r = location_test(sample, ScoreFunction::pole(), cfg.beta, cfg.mode);
      break;
    case TestKind::hotelling: r = hotelling_test(sample, cfg.beta); break;
  }
  std::cout << "test: " << r.test_label << '\n';
  if (!r.score_label.empty()) std::cout << "score: " << r.score_label << '\n';
  std::cout << "m: " << sample.size() << '\n'
            << "statistic: " << format_number(r.statistic) << '\n'
            << "threshold: " << format_number(r.threshold) << '\n'
            << "p_value: " << format_number(r.p_value) << '\n'
            << "reject: " << (r.reject ? "yes" : "no") << '\n';
  return 0;
}

int run_sample(const CLI::App* app, const ConfigFlags& flags) {
  const auto cfg = flags.resolve(app, {{"reps", "1"}});
  const auto model = SignalNoiseModel::from_snr(cfg.alpha, cfg.sigma, cfg.snr_grid.front(),
                                                cfg.xi(), 2 * cfg.p, cfg.c_phase);
  std::string out = "k,re,im,replicate\n";
  for (std::size_t r = 0; r < cfg.reps; ++r) {
    Rng rng(substream_seed(cfg.seed, {r}));
    const auto series = sample_series(model, rng);
    for (std::size_t k = 0; k < series.size(); ++k) {
      out += std::to_string(k) + ',' + format_number(series[k].real()) + ',' +
             format_number(series[k].imag()) + ',' + std::to_string(r) + '\n';
    }
  }
  write_output(out, cfg.out);
  return 0;
}

int run_pade(const std::string& input) {
  const auto series = read_complex_csv(input);
  const auto params = extract_pade_parameters(series);
  std::cout << "p: " << params.order() << '\n';
  print_list("poles", params.poles);
  print_list("residuals", params.residuals);
  print_list("normalized_residuals", params.normalized_residuals);
  print_list("zeros", params.zeros);
  print_list("zero_residuals", params.zero_residuals);
  print_list("normalized_zero_residuals", params.normalized_zero_residuals);
  return 0;
}

int run_density_check(const CLI::App* app, const ConfigFlags& flags) {
  const auto cfg = flags.resolve(app, {{"reps", "20000"}});
  const auto r = ks_uniformity_check(cfg.alpha, cfg.sigma, cfg.reps, cfg.seed, cfg.threads);
  std::cout << "alpha: " << format_number(cfg.alpha) << '\n'
            << "sigma: " << format_number(cfg.sigma) << '\n'
            << "reps: " << cfg.reps << '\n'
            << "ks_statistic: " << format_number(r.statistic) << '\n'
            << "p_value: " << format_number(r.p_value) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pade-parameter location tests under alpha-stable noise"};
  app.require_subcommand(1);

  ConfigFlags power_flags, test_flags, sample_flags, density_flags;
  std::string svg, test_input, pade_input;
  bool theory = false;

  auto* power = app.add_subcommand("power", "Monte Carlo power curves as CSV (and SVG)");
  power_flags.attach(power);
  power->add_option("--svg", svg, "also write an SVG plot to this path");
  power->add_flag("--theory", theory, "overlay exact Gaussian Hotelling power (alpha = 2)");

  auto* test = app.add_subcommand("test", "run one location test on a CSV of re,im rows");
  test_flags.attach(test);
  test->add_option("--input", test_input, "CSV file")->required()->check(CLI::ExistingFile);

  auto* sample = app.add_subcommand("sample", "simulate series as CSV k,re,im,replicate");
  sample_flags.attach(sample);

  auto* pade = app.add_subcommand("pade", "Pade parameters of a series (CSV re,im rows)");
  pade->add_option("--input", pade_input, "CSV file")->required()->check(CLI::ExistingFile);

  auto* density = app.add_subcommand("density-check", "KS test of the null pole modulus law");
  density_flags.attach(density);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (power->parsed()) return run_power(power, power_flags, svg, theory);
    if (test->parsed()) return run_test(test, test_flags, test_input);
    if (sample->parsed()) return run_sample(sample, sample_flags);
    if (pade->parsed()) return run_pade(pade_input);
    if (density->parsed()) return run_density_check(density, density_flags);
  } catch (const UsageError& e) {
    std::cerr << "usage error [" << e.key() << "]: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ShapeError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
