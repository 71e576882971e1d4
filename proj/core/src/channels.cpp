#include "qdx/channels.hpp"

#include <cmath>
#include <sstream>

#include "qdx/errors.hpp"

namespace qdx {
namespace {

constexpr double kOffXTolerance = 1e-9;
constexpr double kEvolvedTolerance = 1e-9;

Matrix2c mat2(complex m00, complex m01, complex m10, complex m11) {
  Matrix2c m;
  m(0, 0) = m00;
  m(0, 1) = m01;
  m(1, 0) = m10;
  m(1, 1) = m11;
  return m;
}

// Diagonal of an X state with the given single- and two-site sigma_z moments.
void set_populations(TwoQubitXState& s, double sz, double szz) {
  s.d1 = 0.25 * (1.0 + 2.0 * sz + szz);
  s.d2 = 0.25 * (1.0 - szz);
  s.d3 = s.d2;
  s.d4 = 0.25 * (1.0 - 2.0 * sz + szz);
}

}  // namespace

std::string_view channel_name(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::PhaseFlip:
      return "phase_flip";
    case ChannelKind::AmplitudeDamping:
      return "amplitude_damping";
    case ChannelKind::PhaseDamping:
      return "phase_damping";
    case ChannelKind::Depolarizing:
      return "depolarizing";
  }
  return "unknown";
}

std::optional<ChannelKind> parse_channel(std::string_view text) {
  for (auto kind : kAllChannels)
    if (text == channel_name(kind)) return kind;
  if (text == "pf") return ChannelKind::PhaseFlip;
  if (text == "ad") return ChannelKind::AmplitudeDamping;
  if (text == "pd") return ChannelKind::PhaseDamping;
  if (text == "dp") return ChannelKind::Depolarizing;
  return std::nullopt;
}

NoiseStrength::NoiseStrength(double p) : p_(p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "noise strength " << p << " outside [0, 1]";
    throw DomainError(msg.str());
  }
}

NoiseStrength p_of_t(double gamma_t) {
  if (!(gamma_t >= 0.0) || !std::isfinite(gamma_t)) {
    std::ostringstream msg;
    msg << "gamma_t must be finite and non-negative, got " << gamma_t;
    throw DomainError(msg.str());
  }
  return NoiseStrength(std::exp(-gamma_t));
}

NoiseStrength strength_at(ChannelKind kind, double gamma_t) {
  const NoiseStrength decay = p_of_t(gamma_t);
  if (kind == ChannelKind::Depolarizing) return NoiseStrength(-std::expm1(-gamma_t));
  return decay;
}

double KrausSet::completeness_defect() const {
  Matrix2c sum;
  for (const auto& e : ops) sum += e.adjoint() * e;
  const auto diff = sum - Matrix2c::identity();
  double worst = 0.0;
  for (const auto& v : diff.data) worst = std::max(worst, std::abs(v));
  return worst;
}

KrausSet kraus_set(ChannelKind kind, NoiseStrength strength) {
  const double p = strength.value();
  const complex i{0.0, 1.0};
  switch (kind) {
    case ChannelKind::PhaseFlip: {
      const double s0 = std::sqrt(1.0 - p);
      const double s1 = std::sqrt(p);
      return {{mat2(s0, 0, 0, s0), mat2(s1, 0, 0, -s1)}};
    }
    case ChannelKind::AmplitudeDamping:
      return {{mat2(std::sqrt(p), 0, 0, 1), mat2(0, 0, std::sqrt(1.0 - p), 0)}};
    case ChannelKind::PhaseDamping: {
      const double s0 = std::sqrt(p);
      const double s1 = std::sqrt(1.0 - p);
      return {{mat2(s0, 0, 0, s0), mat2(s1, 0, 0, 0), mat2(0, 0, 0, s1)}};
    }
    case ChannelKind::Depolarizing: {
      const double s0 = std::sqrt(1.0 - 0.75 * p);
      const double s = std::sqrt(0.25 * p);
      return {{mat2(s0, 0, 0, s0), mat2(0, s, s, 0), mat2(0, -s * i, s * i, 0),
               mat2(s, 0, 0, -s)}};
    }
  }
  throw DomainError("unknown channel kind");
}

TwoQubitXState apply_two_qubit(const KrausSet& kraus, const TwoQubitXState& state) {
  const Matrix4c rho = state.dense();
  Matrix4c out;
  for (const auto& ea : kraus.ops)
    for (const auto& eb : kraus.ops) {
      const Matrix4c k = kron(ea, eb);
      out += k * rho * k.adjoint();
    }
  return x_state_from_dense(out, kOffXTolerance);
}

TwoQubitXState evolved_state_analytic(ChannelKind kind, const CollectiveExpectations& e,
                                      NoiseStrength strength) {
  const double p = strength.value();
  double sz = e.sz;
  double szz = e.szz;
  double coherence_scale = 1.0;

  switch (kind) {
    case ChannelKind::PhaseFlip:
      coherence_scale = (1.0 - 2.0 * p) * (1.0 - 2.0 * p);
      break;
    case ChannelKind::AmplitudeDamping:
      sz = p * e.sz + p - 1.0;
      szz = p * p * e.szz - 2.0 * (1.0 - p) * p * e.sz + (1.0 - p) * (1.0 - p);
      coherence_scale = p;
      break;
    case ChannelKind::PhaseDamping:
      coherence_scale = p * p;
      break;
    case ChannelKind::Depolarizing:
      sz = (1.0 - p) * e.sz;
      szz = (1.0 - p) * (1.0 - p) * e.szz;
      coherence_scale = (1.0 - p) * (1.0 - p);
      break;
  }

  TwoQubitXState s;
  set_populations(s, sz, szz);
  s.a = coherence_scale * e.smm;
  s.b = coherence_scale * e.spm;
  s.validate(kEvolvedTolerance);
  return s;
}

}  // namespace qdx
