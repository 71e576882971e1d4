#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdx/channels.hpp"
#include "qdx/twisting.hpp"
#include "qdx/xstate.hpp"

namespace qdx::cli {

enum class Measure { Qd, Gmqd, Classical, MutualInfo };

std::string_view measure_name(Measure m);
std::optional<Measure> parse_measure(std::string_view text);

// Inclusive linear grid.
struct GammaGrid {
  double start = 0.0;
  double stop = 5.0;
  int points = 101;

  std::vector<double> values() const;
};

struct SweepSpec {
  std::vector<ChannelKind> channels;
  std::vector<int> n_values;
  std::vector<double> theta_values;  // radians
  GammaGrid gamma_t;
  std::vector<Measure> measures{Measure::Qd, Measure::Gmqd, Measure::Classical,
                                Measure::MutualInfo};

  // Throws DomainError on empty lists, n < 2, non-finite theta,
  // gamma_t.start < 0, stop < start or fewer than 2 points.
  void validate() const;
};

struct SweepRow {
  ChannelKind channel = ChannelKind::PhaseFlip;
  int n = 2;
  double theta = 0.0;
  double gamma_t = 0.0;
  double p = 1.0;  // exp(-gamma_t)
  double qd = 0.0;
  double gmqd_normalized = 0.0;
  double classical = 0.0;
  double mutual_info = 0.0;

  double measure(Measure m) const;
};

inline constexpr std::string_view kCsvHeader =
    "channel,n,theta,gamma_t,p,qd,gmqd_normalized,classical,mutual_info";

// Reduced state of the twisting register after gamma_t of `channel` on every qubit.
TwoQubitXState evolved_twisting_state(ChannelKind channel, const TwistingParams& params,
                                      double gamma_t);

SweepRow evaluate_point(ChannelKind channel, const TwistingParams& params, double gamma_t);

// One row per grid point, ordered by channel (enum order), n, theta and
// gamma_t ascending. Points are evaluated on up to `workers` threads; the
// result does not depend on the worker count.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, unsigned workers = 0);

std::string csv_line(const SweepRow& row);
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

// Figure presets: "fig1" (theta = 0.1 pi, N = 2..20 step 2), "fig2" (N = 12,
// 101 theta points over [0, 2 pi], 41 gamma_t points), "fig3" (theta = 0.1 pi,
// N = 12, qd and gmqd). All channels, gamma_t in [0, 5].
std::optional<SweepSpec> preset(std::string_view name);

}  // namespace qdx::cli
