#pragma once

#include <complex>

#include "qdx/xstate.hpp"

namespace qdx {

inline constexpr int kMaxParticles = 1'000'000;

// One-axis twisting of an N-qubit register prepared with every qubit in the
// sigma_z = -1 eigenstate. `theta` is the twisting angle in radians and is
// used as given (no wrapping).
struct TwistingParams {
  int n = 2;
  double theta = 0.0;

  // Throws DomainError unless 2 <= n <= kMaxParticles and theta is finite.
  void validate() const;
};

// Single- and two-particle expectation values of the symmetric state.
struct CollectiveExpectations {
  double sz = 0.0;   // <s1z>
  double szz = 0.0;  // <s1z s2z>
  double spm = 0.0;  // <s1+ s2->
  complex smm{};     // <s1- s2->
};

CollectiveExpectations expectations(const TwistingParams& params);

// Two-qubit reduced X state built from the expectation values. Throws
// InvalidStateError if the result is not a density matrix within `tolerance`.
TwoQubitXState reduced_state(const CollectiveExpectations& exp,
                             double tolerance = kStateTolerance);

// reduced_state(expectations(params)).
TwoQubitXState twisting_state(const TwistingParams& params);

// x^k for integer k: |x|^k with the sign applied explicitly, so negative x
// with odd k stays negative.
double int_pow(double x, unsigned k);

// theta reduced into [0, 4 pi) for display only.
double display_angle(double theta);

}  // namespace qdx
