#include "padeloc/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <limits>

#include "padeloc/errors.hpp"

namespace padeloc {

namespace {

constexpr std::array<std::string_view, 19> kKeys{
    "alpha", "sigma", "snr_grid", "snr",       "xi_mod",    "xi_arg",        "c_phase",
    "m",     "reps",  "beta",     "seed",      "p",         "statistic",     "test",
    "mode",  "pool_rule", "original_term", "threads", "out"};

std::string canonical(std::string_view key) {
  std::string k(key);
  std::replace(k.begin(), k.end(), '-', '_');
  return k;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(',');
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

double to_double(const std::string& key, std::string_view s) {
  s = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError(key, key + ": not a number: '" + std::string(s) + "'");
  }
  return v;
}

std::uint64_t to_u64(const std::string& key, std::string_view s) {
  s = trim(s);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError(key, key + ": not a non-negative integer: '" + std::string(s) + "'");
  }
  return v;
}

template <class E, class Parse>
std::vector<E> parse_list(std::string_view value, Parse parse) {
  std::vector<E> out;
  for (const auto item : split_list(value)) out.push_back(parse(item));
  return out;
}

}  // namespace

std::span<const std::string_view> config_keys() { return kKeys; }

StatisticKind parse_statistic(std::string_view s) {
  for (auto k : {StatisticKind::pole, StatisticKind::zero, StatisticKind::res_pole,
                 StatisticKind::res_zero, StatisticKind::original}) {
    if (canonical(s) == to_string(k)) return k;
  }
  throw UsageError("statistic", "statistic: expected pole|zero|res_pole|res_zero|original, got '" +
                                    std::string(s) + "'");
}

TestKind parse_test(std::string_view s) {
  for (auto k : {TestKind::vdw, TestKind::pole_score, TestKind::hotelling}) {
    if (canonical(s) == to_string(k)) return k;
  }
  throw UsageError("test",
                   "test: expected vdw|pole_score|hotelling, got '" + std::string(s) + "'");
}

CosineMode parse_mode(std::string_view s) {
  for (auto k : {CosineMode::interdirection, CosineMode::sign_cosine}) {
    if (canonical(s) == to_string(k)) return k;
  }
  throw UsageError("mode",
                   "mode: expected interdirection|sign_cosine, got '" + std::string(s) + "'");
}

SelectionRule parse_rule(std::string_view s) {
  for (auto k : {SelectionRule::largest_modulus, SelectionRule::first}) {
    if (canonical(s) == to_string(k)) return k;
  }
  throw UsageError("pool_rule",
                   "pool_rule: expected largest_modulus|first, got '" + std::string(s) + "'");
}

void apply_setting(ExperimentConfig& c, std::string_view raw_key, std::string_view value) {
  const std::string key = canonical(trim(raw_key));
  value = trim(value);
  if (key == "alpha") {
    c.alpha = to_double(key, value);
  } else if (key == "sigma") {
    c.sigma = to_double(key, value);
  } else if (key == "snr_grid") {
    c.snr_grid = parse_list<double>(value, [&](std::string_view v) { return to_double(key, v); });
  } else if (key == "snr") {
    c.snr_grid = {to_double(key, value)};
  } else if (key == "xi_mod") {
    c.xi_mod = to_double(key, value);
  } else if (key == "xi_arg") {
    c.xi_arg = to_double(key, value);
  } else if (key == "c_phase") {
    c.c_phase = to_double(key, value);
  } else if (key == "m") {
    c.m = to_u64(key, value);
  } else if (key == "reps") {
    c.reps = to_u64(key, value);
  } else if (key == "beta") {
    c.beta = to_double(key, value);
  } else if (key == "seed") {
    c.seed = to_u64(key, value);
  } else if (key == "p") {
    c.p = to_u64(key, value);
  } else if (key == "statistic") {
    c.statistics = parse_list<StatisticKind>(value, parse_statistic);
  } else if (key == "test") {
    c.tests = parse_list<TestKind>(value, parse_test);
  } else if (key == "mode") {
    c.mode = parse_mode(value);
  } else if (key == "pool_rule") {
    c.pool_rule = parse_rule(value);
  } else if (key == "original_term") {
    c.original_term = to_u64(key, value);
  } else if (key == "threads") {
    const auto t = to_u64(key, value);
    if (t > std::numeric_limits<unsigned>::max()) throw UsageError(key, "threads: too large");
    c.threads = static_cast<unsigned>(t);
  } else if (key == "out") {
    c.out = std::string(value);
  } else {
    throw UsageError(key, "unknown configuration key '" + key + "'");
  }
}

std::vector<std::pair<std::string, std::string>> read_config_file(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError(std::string(t), path.string() + ":" + std::to_string(lineno) +
                                           ": expected key=value");
    }
    out.emplace_back(std::string(trim(t.substr(0, eq))), std::string(trim(t.substr(eq + 1))));
  }
  return out;
}

ExperimentConfig parse_config(std::span<const std::string> args,
                              const std::optional<std::filesystem::path>& file) {
  ExperimentConfig c;
  if (file) {
    for (const auto& [k, v] : read_config_file(*file)) apply_setting(c, k, v);
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string_view tok = args[i];
    if (!tok.starts_with("--") || tok.size() == 2) {
      throw UsageError(std::string(tok), "unexpected argument '" + std::string(tok) + "'");
    }
    tok.remove_prefix(2);
    if (const auto eq = tok.find('='); eq != std::string_view::npos) {
      apply_setting(c, tok.substr(0, eq), tok.substr(eq + 1));
    } else {
      if (i + 1 >= args.size()) {
        throw UsageError(canonical(tok), "missing value for --" + std::string(tok));
      }
      apply_setting(c, tok, args[++i]);
    }
  }
  c.validate();
  return c;
}

}  // namespace padeloc
