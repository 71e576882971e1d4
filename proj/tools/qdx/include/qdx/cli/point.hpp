#pragma once

#include <optional>
#include <string>

#include "qdx/channels.hpp"
#include "qdx/twisting.hpp"
#include "qdx/xstate.hpp"

namespace qdx::cli {

struct PointResult {
  TwoQubitXState state;
  CorrelationReport report;
  double p = 1.0;  // exp(-gamma_t)
};

// Without a channel gamma_t is ignored and the bare twisting state is used.
PointResult evaluate_single(const TwistingParams& params, std::optional<ChannelKind> channel,
                            double gamma_t);

// `key value` lines: inputs, the seven X-state entries, then all measures.
std::string render_point(const TwistingParams& params, std::optional<ChannelKind> channel,
                         double gamma_t, const PointResult& result);

}  // namespace qdx::cli
