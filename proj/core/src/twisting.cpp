#include "qdx/twisting.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qdx/errors.hpp"

namespace qdx {

void TwistingParams::validate() const {
  if (n < 2 || n > kMaxParticles) {
    std::ostringstream msg;
    msg << "particle count " << n << " outside [2, " << kMaxParticles << "]";
    throw DomainError(msg.str());
  }
  if (!std::isfinite(theta)) throw DomainError("twisting angle must be finite");
}

double int_pow(double x, unsigned k) {
  // Repeated squaring drifts by about k ulps for k near 10^6; pow on the
  // magnitude stays within an ulp or two.
  const double magnitude = std::pow(std::abs(x), static_cast<double>(k));
  return (x < 0.0 && (k & 1u)) ? -magnitude : magnitude;
}

double display_angle(double theta) {
  constexpr double period = 4.0 * std::numbers::pi;
  const double r = std::fmod(theta, period);
  return r < 0.0 ? r + period : r;
}

CollectiveExpectations expectations(const TwistingParams& params) {
  params.validate();
  const auto n = static_cast<unsigned>(params.n);
  const double half_cos = std::cos(0.5 * params.theta);
  const double half_sin = std::sin(0.5 * params.theta);
  const double full_cos_pow = int_pow(std::cos(params.theta), n - 2);

  CollectiveExpectations e;
  e.sz = -int_pow(half_cos, n - 1);
  e.szz = 0.5 * (1.0 + full_cos_pow);
  e.spm = 0.125 * (1.0 - full_cos_pow);
  e.smm = {-0.125 * (1.0 - full_cos_pow), -0.5 * half_sin * int_pow(half_cos, n - 2)};
  return e;
}

TwoQubitXState reduced_state(const CollectiveExpectations& e, double tolerance) {
  TwoQubitXState s;
  s.d1 = 0.25 * (1.0 + 2.0 * e.sz + e.szz);
  s.d2 = 0.25 * (1.0 - e.szz);
  s.d3 = s.d2;
  s.d4 = 0.25 * (1.0 - 2.0 * e.sz + e.szz);
  s.a = e.smm;
  s.b = e.spm;
  s.validate(tolerance);
  return s;
}

TwoQubitXState twisting_state(const TwistingParams& params) {
  return reduced_state(expectations(params));
}

}  // namespace qdx
