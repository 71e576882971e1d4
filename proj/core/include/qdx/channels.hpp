#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "qdx/small_matrix.hpp"
#include "qdx/twisting.hpp"
#include "qdx/xstate.hpp"

namespace qdx {

enum class ChannelKind { PhaseFlip, AmplitudeDamping, PhaseDamping, Depolarizing };

inline constexpr std::array<ChannelKind, 4> kAllChannels{
    ChannelKind::PhaseFlip, ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping,
    ChannelKind::Depolarizing};

// Stable snake_case name used in CSV output and on the command line.
std::string_view channel_name(ChannelKind kind);

// Accepts the snake_case names and the short aliases pf, ad, pd, dp.
std::optional<ChannelKind> parse_channel(std::string_view text);

// Kraus-set parameter p in [0, 1].
class NoiseStrength {
 public:
  // Throws DomainError outside [0, 1].
  explicit NoiseStrength(double p);

  double value() const { return p_; }

 private:
  double p_;
};

// exp(-gamma_t). Throws DomainError for negative or non-finite gamma_t.
NoiseStrength p_of_t(double gamma_t);

// Kraus parameter of `kind` after scaled time gamma_t: exp(-gamma_t) for
// phase flip, amplitude damping and phase damping (identity at gamma_t = 0);
// 1 - exp(-gamma_t) for depolarizing, whose parameter is an error probability.
NoiseStrength strength_at(ChannelKind kind, double gamma_t);

struct KrausSet {
  std::vector<Matrix2c> ops;

  // Largest entry of |sum E^dagger E - I|.
  double completeness_defect() const;
};

//   phase flip         E0 = sqrt(1-p) I,  E1 = sqrt(p) Z
//   amplitude damping  E0 = diag(sqrt(p), 1),  E1 = sqrt(1-p) |d><u|
//   phase damping      E0 = sqrt(p) I,  E1 = sqrt(1-p) |u><u|,  E2 = sqrt(1-p) |d><d|
//   depolarizing       E0 = sqrt(1-3p/4) I,  E1..E3 = sqrt(p/4) X, Y, Z
KrausSet kraus_set(ChannelKind kind, NoiseStrength p);

// sum_ij (E_i (x) E_j) rho (E_i (x) E_j)^dagger, read back as an X state.
// Throws StructureError when an off-X entry of the result exceeds 1e-9.
TwoQubitXState apply_two_qubit(const KrausSet& kraus, const TwoQubitXState& state);

// Closed-form evolved reduced state of the twisting register when every
// qubit passes through the same channel. Throws InvalidStateError if the
// result fails positivity by more than 1e-9.
TwoQubitXState evolved_state_analytic(ChannelKind kind, const CollectiveExpectations& exp,
                                      NoiseStrength p);

}  // namespace qdx
