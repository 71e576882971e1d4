#include "qdx/cli/point.hpp"

#include <utility>
#include <vector>

#include "qdx/cli/sweep.hpp"
#include "qdx/fixtures.hpp"

namespace qdx::cli {

PointResult evaluate_single(const TwistingParams& params, std::optional<ChannelKind> channel,
                            double gamma_t) {
  PointResult r;
  if (channel) {
    r.state = evolved_twisting_state(*channel, params, gamma_t);
    r.p = p_of_t(gamma_t).value();
  } else {
    r.state = twisting_state(params);
  }
  r.report = correlations(r.state);
  return r;
}

std::string render_point(const TwistingParams& params, std::optional<ChannelKind> channel,
                         double gamma_t, const PointResult& result) {
  const auto& s = result.state;
  const auto& c = result.report;
  std::string text;
  text += "n " + std::to_string(params.n) + "\n";
  text += "theta " + format_number(params.theta) + "\n";
  text += "channel " + std::string(channel ? channel_name(*channel) : "none") + "\n";
  text += "gamma_t " + format_number(channel ? gamma_t : 0.0) + "\n";
  const std::vector<std::pair<const char*, double>> values{
      {"p", result.p},
      {"d1", s.d1},
      {"d2", s.d2},
      {"d3", s.d3},
      {"d4", s.d4},
      {"a_re", s.a.real()},
      {"a_im", s.a.imag()},
      {"b_re", s.b.real()},
      {"b_im", s.b.imag()},
      {"qd", c.qd},
      {"q1", c.q1},
      {"q2", c.q2},
      {"classical", c.classical},
      {"mutual_info", c.mutual_info},
      {"gmqd_normalized", c.gmqd_normalized},
  };
  for (const auto& [key, v] : values) text += std::string(key) + " " + format_number(v) + "\n";
  return text;
}

}  // namespace qdx::cli
