#include "qdx/xstate.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <sstream>

#include "qdx/errors.hpp"

namespace qdx {
namespace {

constexpr double kClampSlack = 1e-12;
constexpr double kTraceTolerance = 1e-12;
constexpr double kEigenSlack = 1e-10;

double xlog2x(double v) { return v > 0.0 ? v * std::log2(v) : 0.0; }

// Eigenvalues of [[p, c], [c*, q]] with |c| given, larger first.
std::pair<double, double> block_eigenvalues(double p, double q, double abs_c) {
  const double mean = 0.5 * (p + q);
  const double radius = 0.5 * std::hypot(p - q, 2.0 * abs_c);
  return {mean + radius, mean - radius};
}

}  // namespace

Matrix4c TwoQubitXState::dense() const {
  Matrix4c m;
  m(0, 0) = d1;
  m(1, 1) = d2;
  m(2, 2) = d3;
  m(3, 3) = d4;
  m(0, 3) = a;
  m(3, 0) = std::conj(a);
  m(1, 2) = b;
  m(2, 1) = std::conj(b);
  return m;
}

bool TwoQubitXState::is_valid(double tolerance) const {
  if (!std::isfinite(d1) || !std::isfinite(d2) || !std::isfinite(d3) || !std::isfinite(d4) ||
      !std::isfinite(a.real()) || !std::isfinite(a.imag()) || !std::isfinite(b.real()) ||
      !std::isfinite(b.imag()))
    return false;
  if (std::abs(trace() - 1.0) > kTraceTolerance) return false;
  if (std::norm(a) > d1 * d4 + tolerance) return false;
  if (std::norm(b) > d2 * d3 + tolerance) return false;
  const auto spec = eigenvalues(*this);
  return std::ranges::all_of(spec.eps, [&](double e) { return e >= -tolerance; });
}

void TwoQubitXState::validate(double tolerance) const {
  if (is_valid(tolerance)) return;
  std::ostringstream msg;
  msg.precision(17);
  msg << "invalid X state: d=(" << d1 << ", " << d2 << ", " << d3 << ", " << d4 << "), a=" << a
      << ", b=" << b << ", trace=" << trace();
  throw InvalidStateError(msg.str());
}

TwoQubitXState x_state_from_dense(const Matrix4c& m, double off_x_tolerance) {
  double worst = 0.0;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      const bool on_x = r == c || r + c == 3;
      if (!on_x) worst = std::max(worst, std::abs(m(r, c)));
    }
  if (worst > off_x_tolerance) {
    std::ostringstream msg;
    msg << "matrix is not of X form: largest off-X entry " << worst;
    throw StructureError(msg.str());
  }
  TwoQubitXState s;
  s.d1 = m(0, 0).real();
  s.d2 = m(1, 1).real();
  s.d3 = m(2, 2).real();
  s.d4 = m(3, 3).real();
  // Average the Hermitian pair so rounding in either triangle is symmetric.
  s.a = 0.5 * (m(0, 3) + std::conj(m(3, 0)));
  s.b = 0.5 * (m(1, 2) + std::conj(m(2, 1)));
  return s;
}

double max_entry_difference(const TwoQubitXState& lhs, const TwoQubitXState& rhs) {
  return std::max({std::abs(lhs.d1 - rhs.d1), std::abs(lhs.d2 - rhs.d2),
                   std::abs(lhs.d3 - rhs.d3), std::abs(lhs.d4 - rhs.d4),
                   std::abs(lhs.a - rhs.a), std::abs(lhs.b - rhs.b)});
}

double binary_entropy(double x) {
  if (!(x >= -kClampSlack && x <= 1.0 + kClampSlack)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "binary_entropy: argument " << x << " outside [0, 1]";
    throw DomainError(msg.str());
  }
  x = std::clamp(x, 0.0, 1.0);
  return -xlog2x(x) - xlog2x(1.0 - x);
}

double shannon_entropy(std::span<const double> weights) {
  double h = 0.0;
  for (double w : weights) {
    if (w < -kEigenSlack) throw DomainError("shannon_entropy: negative weight");
    h -= xlog2x(std::max(w, 0.0));
  }
  return h;
}

SpectralData eigenvalues(const TwoQubitXState& s) {
  const auto [e1, e2] = block_eigenvalues(s.d1, s.d4, std::abs(s.a));
  const auto [e3, e4] = block_eigenvalues(s.d2, s.d3, std::abs(s.b));
  return {{e1, e2, e3, e4}};
}

std::pair<double, double> marginal_entropies(const TwoQubitXState& s) {
  return {binary_entropy(s.d1 + s.d2), binary_entropy(s.d1 + s.d3)};
}

double joint_entropy(const TwoQubitXState& s) { return shannon_entropy(eigenvalues(s).eps); }

double mutual_information(const TwoQubitXState& s) {
  const auto [sa, sb] = marginal_entropies(s);
  return sa + sb - joint_entropy(s);
}

CorrelationReport quantum_discord(const TwoQubitXState& s) {
  const double sb = binary_entropy(s.d1 + s.d3);
  const double neg_joint = -joint_entropy(s);

  // Conditional entropy of A after measuring B in the equatorial basis that
  // aligns the coherence phases.
  const double z_bias = 1.0 - 2.0 * (s.d3 + s.d4);
  const double coherence = std::abs(s.a) + std::abs(s.b);
  const double radius = std::min(1.0, std::hypot(z_bias, 2.0 * coherence));
  const double d1 = binary_entropy(0.5 * (1.0 + radius));

  // Conditional entropy of A after measuring B in the sigma_z basis.
  const std::array<double, 4> diag{s.d1, s.d2, s.d3, s.d4};
  const double d2 = shannon_entropy(diag) - sb;

  CorrelationReport r;
  r.q1 = sb + neg_joint + d1;
  r.q2 = sb + neg_joint + d2;
  r.qd = r.q2 < r.q1 ? r.q2 : r.q1;
  r.mutual_info = mutual_information(s);
  r.classical = r.mutual_info - r.qd;
  return r;
}

// Nonzero Pauli expectations of an X state (sigma_1 = x, sigma_2 = y, sigma_3 = z):
//   x3  = d1 + d2 - d3 - d4          y3  = d1 - d2 + d3 - d4
//   R11 = 2 Re(a + b)                R22 = 2 Re(b - a)
//   R12 = 2 Im(b - a)                R21 = -2 Im(a + b)
//   R33 = d1 - d2 - d3 + d4
BlochDecomposition bloch_decompose(const TwoQubitXState& s) {
  BlochDecomposition bd;
  bd.x[2] = s.d1 + s.d2 - s.d3 - s.d4;
  bd.y[2] = s.d1 - s.d2 + s.d3 - s.d4;
  bd.r[0][0] = 2.0 * (s.a.real() + s.b.real());
  bd.r[1][1] = 2.0 * (s.b.real() - s.a.real());
  bd.r[0][1] = 2.0 * (s.b.imag() - s.a.imag());
  bd.r[1][0] = -2.0 * (s.a.imag() + s.b.imag());
  bd.r[2][2] = s.d1 - s.d2 - s.d3 + s.d4;
  return bd;
}

double gmqd(const TwoQubitXState& s, GmqdScale scale) {
  const auto bd = bloch_decompose(s);
  const auto& r = bd.r;
  const double x3 = bd.x[2];

  double r_norm2 = 0.0;
  for (const auto& row : r)
    for (double v : row) r_norm2 += v * v;

  // K = x x^T + R R^T is block diagonal for X states: a 2x2 block in the
  // (1, 2) plane and K33 on its own.
  const double k11 = r[0][0] * r[0][0] + r[0][1] * r[0][1];
  const double k22 = r[1][0] * r[1][0] + r[1][1] * r[1][1];
  const double k12 = r[0][0] * r[1][0] + r[0][1] * r[1][1];
  const double k33 = x3 * x3 + r[2][2] * r[2][2];
  const double block_max = 0.5 * (k11 + k22) + std::hypot(0.5 * (k11 - k22), k12);
  const double k_max = std::max(block_max, k33);

  const double raw = 0.25 * (x3 * x3 + r_norm2 - k_max);
  return scale == GmqdScale::Normalized ? 2.0 * raw : raw;
}

CorrelationReport correlations(const TwoQubitXState& s) {
  auto r = quantum_discord(s);
  r.gmqd_normalized = gmqd(s, GmqdScale::Normalized);
  return r;
}

}  // namespace qdx
