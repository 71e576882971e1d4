// qdx: pairwise discord of one-axis-twisting states under local noise.
//
//   qdx point    --n 12 --theta 0.1pi [--channel phase_flip --gamma-t 0.69]
//   qdx sweep    --preset fig1 --out fig1.csv [--svg plots/]
//   qdx validate [--regenerate] [--grid 64:5:0.2]
//
// Exit codes: 0 success, 1 validation or runtime failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qdx/cli/parse.hpp"
#include "qdx/cli/point.hpp"
#include "qdx/cli/svg.hpp"
#include "qdx/cli/sweep.hpp"
#include "qdx/cli/validate.hpp"
#include "qdx/errors.hpp"

#ifndef QDX_DEFAULT_FIXTURES
#define QDX_DEFAULT_FIXTURES "golden.txt"
#endif

namespace {

using namespace qdx;
using namespace qdx::cli;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

// Flag values that were given explicitly, layered over a config file.
class Settings {
 public:
  void load_config(const std::string& path) {
    if (path.empty()) return;
    for (auto& [k, v] : read_config(path)) values_[k] = v;
  }

  void set_if(const CLI::Option* opt, const std::string& key, const std::string& value) {
    if (opt->count() > 0) values_[key] = value;
  }

  std::optional<std::string> get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::map<std::string, std::string> values_;
};

struct FlagValues {
  std::string config;
  std::string channel;
  std::string n;
  std::string theta;
  std::string gamma_t;
  std::string measures;
  std::string preset;
  std::string grid;
  std::string out;
  std::string svg;
  std::string fixtures = QDX_DEFAULT_FIXTURES;
  unsigned workers = 0;
  bool regenerate = false;
};

struct FlagOptions {
  CLI::Option* channel = nullptr;
  CLI::Option* n = nullptr;
  CLI::Option* theta = nullptr;
  CLI::Option* gamma_t = nullptr;
  CLI::Option* measures = nullptr;
  CLI::Option* preset = nullptr;
  CLI::Option* grid = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* svg = nullptr;
};

Settings collect(const FlagValues& f, const FlagOptions& o) {
  Settings s;
  s.load_config(f.config);
  if (o.channel) s.set_if(o.channel, "channel", f.channel);
  if (o.n) s.set_if(o.n, "n", f.n);
  if (o.theta) s.set_if(o.theta, "theta", f.theta);
  if (o.gamma_t) s.set_if(o.gamma_t, "gamma-t", f.gamma_t);
  if (o.measures) s.set_if(o.measures, "measures", f.measures);
  if (o.preset) s.set_if(o.preset, "preset", f.preset);
  if (o.grid) s.set_if(o.grid, "grid", f.grid);
  if (o.out) s.set_if(o.out, "out", f.out);
  if (o.svg) s.set_if(o.svg, "svg", f.svg);
  return s;
}

int cmd_point(const Settings& s) {
  const auto ns = parse_int_list(s.get("n").value_or("12"));
  const auto thetas = parse_angle_list(s.get("theta").value_or("0.1pi"));
  if (ns.size() != 1 || thetas.size() != 1) throw UsageError("point takes a single --n and --theta");
  const TwistingParams params{ns.front(), thetas.front()};
  params.validate();

  std::optional<ChannelKind> channel;
  const auto channel_text = s.get("channel").value_or("none");
  if (channel_text != "none") {
    channel = parse_channel(channel_text);
    if (!channel) throw UsageError("unknown channel `" + channel_text + "`");
  }
  const auto gamma = parse_gamma_grid(s.get("gamma-t").value_or("0"));
  if (gamma.points != 1) throw UsageError("point takes a single --gamma-t value");

  std::cout << render_point(params, channel, gamma.start, evaluate_single(params, channel, gamma.start));
  return 0;
}

int cmd_sweep(const Settings& s, unsigned workers) {
  const auto preset_name = s.get("preset").value_or("fig1");
  auto spec = preset(preset_name);
  if (!spec) throw UsageError("unknown preset `" + preset_name + "` (fig1, fig2, fig3)");
  if (auto v = s.get("channel")) spec->channels = parse_channel_list(*v);
  if (auto v = s.get("n")) spec->n_values = parse_int_list(*v);
  if (auto v = s.get("theta")) spec->theta_values = parse_angle_list(*v);
  if (auto v = s.get("gamma-t")) spec->gamma_t = parse_gamma_grid(*v);
  if (auto v = s.get("measures")) spec->measures = parse_measure_list(*v);
  spec->validate();

  const auto rows = run_sweep(*spec, workers);
  const auto out_path = s.get("out").value_or("-");
  if (out_path == "-") {
    write_csv(std::cout, rows);
  } else {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    write_csv(out, rows);
    if (!out) throw std::runtime_error("write failed for " + out_path);
  }
  if (auto dir = s.get("svg")) {
    const auto written = write_slice_plots(*dir, rows, spec->measures);
    std::cerr << "wrote " << written.size() << " SVG plots to " << *dir << "\n";
  }
  return 0;
}

int cmd_validate(const Settings& s, const std::string& fixtures, bool regenerate) {
  const auto grid = s.get("grid") ? parse_grid_spec(*s.get("grid")) : kValidationGrid;
  const auto report = run_validation(fixtures, grid, regenerate);
  for (const auto& c : report.checks)
    std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << ": " << c.detail << "\n";
  const bool ok = report.passed();
  std::cout << (ok ? "all checks passed" : "validation FAILED") << "\n";
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pairwise quantum discord of one-axis-twisting states under local noise"};
  app.require_subcommand(1);
  FlagValues f;

  auto add_common = [&](CLI::App* sub, FlagOptions& o) {
    sub->add_option("--config", f.config, "key = value config file (flags take precedence)");
    o.channel = sub->add_option("--channel", f.channel, "channel name(s) or all/none");
    o.n = sub->add_option("--n", f.n, "particle count(s): 12, 2,4,6 or 2:20:2");
    o.theta = sub->add_option("--theta", f.theta, "twisting angle(s): 0.1pi, 0.3, or 0:2pi:101");
    o.gamma_t = sub->add_option("--gamma-t", f.gamma_t, "gamma*t value or start:stop:points");
  };

  FlagOptions point_opts;
  auto* point = app.add_subcommand("point", "Evaluate all measures at one parameter point");
  add_common(point, point_opts);

  FlagOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Parameter sweep to CSV (and SVG plots)");
  add_common(sweep, sweep_opts);
  sweep_opts.preset = sweep->add_option("--preset", f.preset, "fig1 | fig2 | fig3 (default fig1)");
  sweep_opts.measures = sweep->add_option("--measures", f.measures, "qd,gmqd,classical,mutual_info");
  sweep_opts.out = sweep->add_option("--out", f.out, "CSV output path, - for stdout");
  sweep_opts.svg = sweep->add_option("--svg", f.svg, "directory for per-slice SVG plots");
  sweep->add_option("--workers", f.workers, "worker threads (0 = hardware concurrency)");

  FlagOptions validate_opts;
  auto* validate = app.add_subcommand("validate", "Run the oracle suite and compare golden fixtures");
  validate->add_option("--config", f.config, "key = value config file");
  validate_opts.grid = validate->add_option("--grid", f.grid, "oracle grid: coarse[:rounds:shrink]");
  validate->add_option("--fixtures", f.fixtures, "fixtures file");
  validate->add_flag("--regenerate", f.regenerate, "rewrite the fixtures file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*point) return cmd_point(collect(f, point_opts));
    if (*sweep) return cmd_sweep(collect(f, sweep_opts), f.workers);
    if (*validate) return cmd_validate(collect(f, validate_opts), f.fixtures, f.regenerate);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "invalid parameter: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
