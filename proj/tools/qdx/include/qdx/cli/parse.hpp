#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qdx/channels.hpp"
#include "qdx/cli/sweep.hpp"
#include "qdx/oracle.hpp"

namespace qdx::cli {

// Thrown for malformed command-line or config values; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "0.1pi", "pi", "-2pi", "0.25" (radians).
double parse_angle(std::string_view text);

// Comma list of angles, or "start:stop:count" for an inclusive linear grid.
std::vector<double> parse_angle_list(std::string_view text);

// Comma list, or "start:stop:step" inclusive.
std::vector<int> parse_int_list(std::string_view text);

// "all" or a comma list of channel names.
std::vector<ChannelKind> parse_channel_list(std::string_view text);

// "start:stop:points", or a single value giving a one-point grid.
GammaGrid parse_gamma_grid(std::string_view text);

std::vector<Measure> parse_measure_list(std::string_view text);

// "coarse" or "coarse:rounds:shrink".
oracle::GridSpec parse_grid_spec(std::string_view text);

// `key = value` lines; '#' starts a comment. Keys are the long flag names
// without dashes (channel, n, theta, gamma-t, measures, preset, grid, out, svg).
using ConfigMap = std::map<std::string, std::string>;
ConfigMap read_config(const std::filesystem::path& path);

}  // namespace qdx::cli
