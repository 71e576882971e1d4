#include "qdx/cli/validate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "qdx/channels.hpp"
#include "qdx/cli/sweep.hpp"
#include "qdx/twisting.hpp"

namespace qdx::cli {
namespace {

using std::numbers::pi;

std::string sci(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

CheckResult bounded(std::string name, double worst, double limit) {
  return {std::move(name), worst <= limit, "worst " + sci(worst) + " (limit " + sci(limit) + ")"};
}

std::vector<double> theta_grid(int points) {
  std::vector<double> v;
  for (int i = 0; i < points; ++i) v.push_back(2.0 * pi * i / (points - 1));
  return v;
}

// Twisting family used by the discord and GMQD cross-checks.
std::vector<TwoQubitXState> twisting_family(int n_max, int theta_points) {
  std::vector<TwoQubitXState> states;
  for (int n = 2; n <= n_max; ++n)
    for (double t : theta_grid(theta_points)) states.push_back(twisting_state({n, t}));
  return states;
}

void add_state(FixtureMap& f, const std::string& prefix, const TwoQubitXState& s) {
  f[prefix + ".d1"] = s.d1;
  f[prefix + ".d2"] = s.d2;
  f[prefix + ".d3"] = s.d3;
  f[prefix + ".d4"] = s.d4;
  f[prefix + ".a_re"] = s.a.real();
  f[prefix + ".a_im"] = s.a.imag();
  f[prefix + ".b_re"] = s.b.real();
  f[prefix + ".b_im"] = s.b.imag();
}

}  // namespace

bool ValidationReport::passed() const {
  return std::ranges::all_of(checks, [](const CheckResult& c) { return c.passed; });
}

Plateau qd_plateau(double theta, double tolerance, int scan_limit) {
  Plateau p;
  p.limit = quantum_discord(twisting_state({kMaxParticles, theta})).qd;
  p.n = 2;
  for (int n = scan_limit; n >= 2; --n) {
    if (std::abs(quantum_discord(twisting_state({n, theta})).qd - p.limit) >= tolerance) {
      p.n = n + 1;
      break;
    }
  }
  p.value = quantum_discord(twisting_state({p.n, theta})).qd;
  return p;
}

FixtureMap compute_fixtures(const oracle::GridSpec& grid) {
  FixtureMap f;
  const TwistingParams golden{12, 0.1 * pi};
  const auto exact = oracle::exact_reduced_state(golden);
  add_state(f, "oracle.exact_reduced_state.n12.theta0.1pi", exact);
  f["oracle.discord_bruteforce.n12.theta0.1pi"] = oracle::discord_bruteforce(exact, grid);
  f["oracle.gmqd_bruteforce.n12.theta0.1pi"] = oracle::gmqd_bruteforce(exact, grid);
  add_state(f, "oracle.exact_channel_reduced.n12.theta0.1pi.amplitude_damping.p0.7",
            oracle::exact_channel_reduced(golden, ChannelKind::AmplitudeDamping, NoiseStrength(0.7)));

  const auto closed = correlations(twisting_state(golden));
  f["xstate.quantum_discord.n12.theta0.1pi"] = closed.qd;
  f["xstate.gmqd_normalized.n12.theta0.1pi"] = closed.gmqd_normalized;
  f["xstate.mutual_information.n12.theta0.1pi"] = closed.mutual_info;

  const auto plateau = qd_plateau(0.1 * pi);
  f["twisting.qd_plateau.theta0.1pi.n"] = plateau.n;
  f["twisting.qd_plateau.theta0.1pi.value"] = plateau.value;
  f["twisting.qd_plateau.theta0.1pi.limit"] = plateau.limit;

  // Depolarizing qd - gmqd gap profile on the fig3 grid.
  double min_gap = 0.0;
  double at = 0.0;
  bool first = true;
  for (double g : GammaGrid{0.0, 5.0, 101}.values()) {
    const auto row = evaluate_point(ChannelKind::Depolarizing, golden, g);
    const double gap = row.qd - row.gmqd_normalized;
    if (first || gap < min_gap) {
      min_gap = gap;
      at = g;
      first = false;
    }
  }
  f["sweep.fig3.depolarizing.min_qd_minus_gmqd"] = min_gap;
  f["sweep.fig3.depolarizing.argmin_gamma_t"] = at;
  return f;
}

std::vector<CheckResult> compare_fixtures(const FixtureMap& expected, const FixtureMap& actual,
                                          double rel_tol) {
  std::vector<CheckResult> out;
  for (const auto& [key, want] : expected) {
    const auto it = actual.find(key);
    if (it == actual.end()) {
      out.push_back({"fixture " + key, false, "not produced by the oracle pipeline"});
      continue;
    }
    const double got = it->second;
    const double diff = std::abs(got - want);
    const bool ok = diff <= rel_tol * std::max(std::abs(got), std::abs(want)) + 1e-12;
    out.push_back({"fixture " + key, ok,
                   "stored " + format_number(want) + ", computed " + format_number(got)});
  }
  for (const auto& [key, value] : actual)
    if (!expected.contains(key))
      out.push_back({"fixture " + key, false, "missing from fixtures file (computed " +
                                                   format_number(value) + ")"});
  return out;
}

std::vector<CheckResult> run_oracle_checks(const oracle::GridSpec& grid) {
  std::vector<CheckResult> out;

  {
    double worst = 0.0;
    for (auto kind : kAllChannels)
      for (int i = 0; i <= 100; ++i)
        worst = std::max(worst, kraus_set(kind, NoiseStrength(i / 100.0)).completeness_defect());
    out.push_back(bounded("kraus completeness", worst, 1e-12));
  }

  {
    double worst = 0.0;
    for (auto kind : kAllChannels)
      for (int ip = 0; ip <= 10; ++ip)
        for (int n : {2, 3, 5, 8, 12})
          for (double t : {0.1 * pi, 0.45 * pi, 1.3 * pi, 1.9 * pi}) {
            const NoiseStrength p(ip / 10.0);
            const auto e = expectations({n, t});
            worst = std::max(worst, max_entry_difference(
                                        evolved_state_analytic(kind, e, p),
                                        apply_two_qubit(kraus_set(kind, p), reduced_state(e))));
          }
    out.push_back(bounded("channel analytic vs generic Kraus", worst, 1e-11));
  }

  {
    double worst = 0.0;
    double worst_full = 0.0;
    for (int n = 2; n <= 12; ++n)
      for (double t : theta_grid(33)) {
        const auto closed = twisting_state({n, t});
        worst = std::max(worst, max_entry_difference(oracle::exact_reduced_state({n, t}), closed));
        if (n <= 6)
          worst_full =
              std::max(worst_full, max_entry_difference(oracle::exact_reduced_state_full({n, t}), closed));
      }
    out.push_back(bounded("twisting closed form vs symmetric-subspace state", worst, 1e-10));
    out.push_back(bounded("twisting closed form vs full register state", worst_full, 1e-10));
  }

  {
    double worst = 0.0;
    for (auto kind : kAllChannels) {
      const TwistingParams params{kind == ChannelKind::Depolarizing ? 6 : 4, 0.3 * pi};
      for (double p : {0.0, 0.3, 0.5, 1.0})
        worst = std::max(worst, max_entry_difference(
                                    oracle::exact_channel_full_register(params, kind, NoiseStrength(p)),
                                    oracle::exact_channel_reduced(params, kind, NoiseStrength(p))));
    }
    out.push_back(bounded("channel on full register vs on reduced pair", worst, 1e-10));
  }

  const auto family = twisting_family(12, 33);
  std::mt19937_64 rng(20240611);
  std::vector<TwoQubitXState> randoms;
  for (int i = 0; i < 100; ++i) randoms.push_back(oracle::random_x_state(rng));
  std::vector<TwoQubitXState> population = family;
  population.insert(population.end(), randoms.begin(), randoms.end());

  {
    double worst = 0.0;
    for (const auto& s : population) {
      const auto dense = oracle::dense_eigenvalues(oracle::to_dense(s));
      auto closed = eigenvalues(s).eps;
      std::ranges::sort(closed);
      for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(dense[i] - closed[static_cast<std::size_t>(i)]));
    }
    out.push_back(bounded("eigenvalues closed form vs dense solver", worst, 1e-12));
  }

  {
    double over = -1.0;   // bruteforce - closed, must stay <= 1e-6
    double under = -1.0;  // closed - bruteforce, must stay <= 3e-3
    double gm = 0.0;
    for (const auto& s : population) {
      const double closed = quantum_discord(s).qd;
      const double brute = oracle::discord_bruteforce(s, grid);
      over = std::max(over, brute - closed);
      under = std::max(under, closed - brute);
      gm = std::max(gm, std::abs(gmqd(s, GmqdScale::Raw) - oracle::gmqd_bruteforce(s, grid)));
    }
    out.push_back(bounded("discord bruteforce <= closed form + 1e-6", over, 1e-6));
    out.push_back(bounded("discord closed form - bruteforce <= 3e-3", under, 3e-3));
    out.push_back(bounded("gmqd closed form vs bruteforce", gm, 1e-6));
  }

  {
    oracle::GridSpec doubled = grid;
    doubled.coarse_points *= 2;
    double worst = 0.0;
    for (std::size_t i = 0; i < 20 && i < randoms.size(); ++i) {
      const auto& s = randoms[i];
      worst = std::max(worst, oracle::discord_bruteforce(s, doubled) - oracle::discord_bruteforce(s, grid));
      worst = std::max(worst, oracle::gmqd_bruteforce(s, doubled) - oracle::gmqd_bruteforce(s, grid));
    }
    out.push_back(bounded("bruteforce does not grow when the coarse grid doubles", worst, 1e-9));
  }

  {
    double worst = 0.0;
    for (int n = 2; n <= 20; ++n)
      for (double t : theta_grid(101)) {
        const auto f = correlations(twisting_state({n, t}));
        for (double u : {2.0 * pi - t, t + 2.0 * pi}) {
          const auto g = correlations(twisting_state({n, u}));
          worst = std::max({worst, std::abs(f.qd - g.qd), std::abs(f.gmqd_normalized - g.gmqd_normalized)});
        }
      }
    out.push_back(bounded("twisting qd and gmqd symmetric under theta -> 2pi - theta, theta + 2pi",
                          worst, 1e-10));
  }

  {
    double worst = 0.0;
    for (const auto& s : randoms) {
      const auto r = quantum_discord(s);
      worst = std::max(worst, std::abs(r.qd + r.classical - r.mutual_info));
      if (r.qd < -1e-10 || r.classical < -1e-10) worst = std::max(worst, 1.0);
    }
    out.push_back(bounded("qd + classical = mutual information", worst, 1e-10));
  }
  return out;
}

ValidationReport run_validation(const std::filesystem::path& fixtures_path,
                                const oracle::GridSpec& grid, bool regenerate) {
  ValidationReport report;
  FixtureMap stored;
  if (!regenerate) {
    try {
      stored = read_fixtures(fixtures_path);
    } catch (const std::exception& e) {
      report.checks.push_back({"fixtures readable", false, e.what()});
      return report;
    }
  }
  report.checks = run_oracle_checks(grid);
  const auto computed = compute_fixtures(grid);
  if (regenerate) {
    write_fixtures(fixtures_path, computed);
    report.checks.push_back({"fixtures written", true, fixtures_path.string()});
  } else {
    for (auto& c : compare_fixtures(stored, computed)) report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace qdx::cli
