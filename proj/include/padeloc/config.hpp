#pragma once

// Experiment configuration from a flat key=value file and --key value flags.
//
// Keys are ExperimentConfig field names; dashes and underscores are
// interchangeable. Lists (snr_grid, statistic, test) are comma separated.
// `snr` sets a one-point grid. Blank lines and lines starting with '#' are
// ignored in files.

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "padeloc/experiment.hpp"

namespace padeloc {

/// Canonical (underscore) spelling of every accepted key.
std::span<const std::string_view> config_keys();

/// Sets one field. UsageError naming the key on an unknown key or bad value.
void apply_setting(ExperimentConfig& config, std::string_view key, std::string_view value);

/// key=value pairs of a config file, in file order. IoError when unreadable,
/// UsageError on a malformed line.
std::vector<std::pair<std::string, std::string>> read_config_file(
    const std::filesystem::path& path);

/// File settings first, then `--key value` / `--key=value` tokens from
/// `args`; the result is validated.
ExperimentConfig parse_config(std::span<const std::string> args,
                              const std::optional<std::filesystem::path>& file = std::nullopt);

StatisticKind parse_statistic(std::string_view s);
TestKind parse_test(std::string_view s);
CosineMode parse_mode(std::string_view s);
SelectionRule parse_rule(std::string_view s);

}  // namespace padeloc
