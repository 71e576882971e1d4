#include "qdx/cli/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <ostream>
#include <thread>

#include "qdx/errors.hpp"
#include "qdx/fixtures.hpp"

namespace qdx::cli {

std::string_view measure_name(Measure m) {
  switch (m) {
    case Measure::Qd:
      return "qd";
    case Measure::Gmqd:
      return "gmqd";
    case Measure::Classical:
      return "classical";
    case Measure::MutualInfo:
      return "mutual_info";
  }
  return "unknown";
}

std::optional<Measure> parse_measure(std::string_view text) {
  for (auto m : {Measure::Qd, Measure::Gmqd, Measure::Classical, Measure::MutualInfo})
    if (text == measure_name(m)) return m;
  return std::nullopt;
}

std::vector<double> GammaGrid::values() const {
  std::vector<double> v(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i)
    v[static_cast<std::size_t>(i)] = start + (stop - start) * i / (points - 1);
  v.back() = stop;
  return v;
}

void SweepSpec::validate() const {
  if (channels.empty()) throw DomainError("sweep needs at least one channel");
  if (n_values.empty()) throw DomainError("sweep needs at least one N");
  if (theta_values.empty()) throw DomainError("sweep needs at least one theta");
  if (measures.empty()) throw DomainError("sweep needs at least one measure");
  for (int n : n_values) TwistingParams{n, 0.0}.validate();
  for (double t : theta_values)
    if (!std::isfinite(t)) throw DomainError("theta values must be finite");
  if (!(gamma_t.start >= 0.0) || !std::isfinite(gamma_t.stop))
    throw DomainError("gamma_t start must be >= 0 and stop finite");
  if (gamma_t.stop < gamma_t.start) throw DomainError("gamma_t stop must be >= start");
  if (gamma_t.points < 2) throw DomainError("gamma_t grid needs at least 2 points");
}

double SweepRow::measure(Measure m) const {
  switch (m) {
    case Measure::Qd:
      return qd;
    case Measure::Gmqd:
      return gmqd_normalized;
    case Measure::Classical:
      return classical;
    case Measure::MutualInfo:
      return mutual_info;
  }
  return 0.0;
}

TwoQubitXState evolved_twisting_state(ChannelKind channel, const TwistingParams& params,
                                      double gamma_t) {
  return evolved_state_analytic(channel, expectations(params), strength_at(channel, gamma_t));
}

SweepRow evaluate_point(ChannelKind channel, const TwistingParams& params, double gamma_t) {
  const auto report = correlations(evolved_twisting_state(channel, params, gamma_t));
  SweepRow row;
  row.channel = channel;
  row.n = params.n;
  row.theta = params.theta;
  row.gamma_t = gamma_t;
  row.p = p_of_t(gamma_t).value();
  row.qd = report.qd;
  row.gmqd_normalized = report.gmqd_normalized;
  row.classical = report.classical;
  row.mutual_info = report.mutual_info;
  return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned workers) {
  spec.validate();
  auto channels = spec.channels;
  auto ns = spec.n_values;
  auto thetas = spec.theta_values;
  std::ranges::sort(channels);
  std::ranges::sort(ns);
  std::ranges::sort(thetas);
  channels.erase(std::unique(channels.begin(), channels.end()), channels.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  thetas.erase(std::unique(thetas.begin(), thetas.end()), thetas.end());
  const auto gammas = spec.gamma_t.values();

  struct Task {
    ChannelKind channel;
    int n;
    double theta;
    double gamma_t;
  };
  std::vector<Task> tasks;
  tasks.reserve(channels.size() * ns.size() * thetas.size() * gammas.size());
  for (auto c : channels)
    for (int n : ns)
      for (double t : thetas)
        for (double g : gammas) tasks.push_back({c, n, t, g});

  std::vector<SweepRow> rows(tasks.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size() / 64)));

  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto& t = tasks[i];
      rows[i] = evaluate_point(t.channel, {t.n, t.theta}, t.gamma_t);
    }
  };
  if (workers <= 1) {
    drain();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(drain);
  }
  return rows;
}

std::string csv_line(const SweepRow& row) {
  std::string line{channel_name(row.channel)};
  line += ',';
  line += std::to_string(row.n);
  for (double v : {row.theta, row.gamma_t, row.p, row.qd, row.gmqd_normalized, row.classical,
                   row.mutual_info}) {
    line += ',';
    line += format_number(v);
  }
  return line;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& row : rows) out << csv_line(row) << '\n';
}

std::optional<SweepSpec> preset(std::string_view name) {
  using std::numbers::pi;
  SweepSpec spec;
  spec.channels.assign(kAllChannels.begin(), kAllChannels.end());
  spec.gamma_t = {0.0, 5.0, 101};
  if (name == "fig1") {
    for (int n = 2; n <= 20; n += 2) spec.n_values.push_back(n);
    spec.theta_values = {0.1 * pi};
    spec.measures = {Measure::Qd};
  } else if (name == "fig2") {
    spec.n_values = {12};
    for (int i = 0; i <= 100; ++i) spec.theta_values.push_back(2.0 * pi * i / 100);
    spec.gamma_t.points = 41;
    spec.measures = {Measure::Qd};
  } else if (name == "fig3") {
    spec.n_values = {12};
    spec.theta_values = {0.1 * pi};
    spec.measures = {Measure::Qd, Measure::Gmqd};
  } else {
    return std::nullopt;
  }
  return spec;
}

}  // namespace qdx::cli
