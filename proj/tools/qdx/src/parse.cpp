#include "qdx/cli/parse.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>

namespace qdx::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    parts.push_back(trim(s.substr(pos, next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

double parse_double(std::string_view text) {
  const std::string owned(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(owned, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (owned.empty() || used != owned.size() || !std::isfinite(v))
    throw UsageError("expected a number, got `" + owned + "`");
  return v;
}

int parse_int(std::string_view text) {
  int v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || ptr != end)
    throw UsageError("expected an integer, got `" + std::string(text) + "`");
  return v;
}

}  // namespace

double parse_angle(std::string_view text) {
  text = trim(text);
  if (text.ends_with("pi")) {
    auto factor = text.substr(0, text.size() - 2);
    double scale = 1.0;
    if (factor.empty() || factor == "+") scale = 1.0;
    else if (factor == "-") scale = -1.0;
    else scale = parse_double(factor);
    return scale * std::numbers::pi;
  }
  return parse_double(text);
}

std::vector<double> parse_angle_list(std::string_view text) {
  const auto range = split(text, ':');
  if (range.size() == 3) {
    const double start = parse_angle(range[0]);
    const double stop = parse_angle(range[1]);
    const int count = parse_int(range[2]);
    if (count < 2) throw UsageError("angle grid needs at least 2 points");
    std::vector<double> v;
    for (int i = 0; i < count; ++i) v.push_back(start + (stop - start) * i / (count - 1));
    v.back() = stop;
    return v;
  }
  if (range.size() != 1) throw UsageError("angle list must be a,b,c or start:stop:count");
  std::vector<double> v;
  for (auto part : split(text, ',')) v.push_back(parse_angle(part));
  return v;
}

std::vector<int> parse_int_list(std::string_view text) {
  const auto range = split(text, ':');
  if (range.size() == 3) {
    const int start = parse_int(range[0]);
    const int stop = parse_int(range[1]);
    const int step = parse_int(range[2]);
    if (step <= 0 || stop < start) throw UsageError("integer range needs step > 0 and stop >= start");
    std::vector<int> v;
    for (int n = start; n <= stop; n += step) v.push_back(n);
    return v;
  }
  if (range.size() != 1) throw UsageError("integer list must be a,b,c or start:stop:step");
  std::vector<int> v;
  for (auto part : split(text, ',')) v.push_back(parse_int(part));
  return v;
}

std::vector<ChannelKind> parse_channel_list(std::string_view text) {
  if (trim(text) == "all") return {kAllChannels.begin(), kAllChannels.end()};
  std::vector<ChannelKind> v;
  for (auto part : split(text, ',')) {
    const auto kind = parse_channel(part);
    if (!kind) throw UsageError("unknown channel `" + std::string(part) + "`");
    v.push_back(*kind);
  }
  return v;
}

GammaGrid parse_gamma_grid(std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() == 1) {
    const double g = parse_double(parts[0]);
    return {g, g, 1};
  }
  if (parts.size() != 3) throw UsageError("gamma-t must be a value or start:stop:points");
  return {parse_double(parts[0]), parse_double(parts[1]), parse_int(parts[2])};
}

std::vector<Measure> parse_measure_list(std::string_view text) {
  std::vector<Measure> v;
  for (auto part : split(text, ',')) {
    const auto m = parse_measure(part);
    if (!m) throw UsageError("unknown measure `" + std::string(part) + "`");
    v.push_back(*m);
  }
  return v;
}

oracle::GridSpec parse_grid_spec(std::string_view text) {
  const auto parts = split(text, ':');
  oracle::GridSpec g;
  if (parts.size() == 1) {
    g.coarse_points = parse_int(parts[0]);
  } else if (parts.size() == 3) {
    g.coarse_points = parse_int(parts[0]);
    g.refine_rounds = parse_int(parts[1]);
    g.refine_shrink = parse_double(parts[2]);
  } else {
    throw UsageError("grid must be coarse or coarse:rounds:shrink");
  }
  try {
    g.validate();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  return g;
}

ConfigMap read_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path.string());
  ConfigMap out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos)
      throw UsageError(path.string() + ":" + std::to_string(line_no) + ": expected key = value");
    out[std::string(trim(view.substr(0, eq)))] = std::string(trim(view.substr(eq + 1)));
  }
  return out;
}

}  // namespace qdx::cli
