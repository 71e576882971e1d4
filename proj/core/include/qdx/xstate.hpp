#pragma once

#include <array>
#include <complex>
#include <span>
#include <utility>

#include "qdx/small_matrix.hpp"

namespace qdx {

// Default tolerance for positivity checks on X states.
inline constexpr double kStateTolerance = 1e-10;

/**
 * Two-qubit density matrix with nonzero entries only on the main diagonal
 * and the anti-diagonal.
 *
 * Basis order is |uu>, |ud>, |du>, |dd>, where u is the sigma_z = +1
 * eigenstate. The first factor is subsystem A, the second B.
 *
 *     [ d1  0   0   a  ]
 *     [ 0   d2  b   0  ]
 *     [ 0   b*  d3  0  ]
 *     [ a*  0   0   d4 ]
 */
struct TwoQubitXState {
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
  double d4 = 0.0;
  complex a{};  // rho_14
  complex b{};  // rho_23

  double trace() const { return d1 + d2 + d3 + d4; }

  Matrix4c dense() const;

  // Throws InvalidStateError if trace, block positivity or the spectrum
  // violate the given tolerance. Trace is checked to 1e-12.
  void validate(double tolerance = kStateTolerance) const;
  bool is_valid(double tolerance = kStateTolerance) const;

  friend bool operator==(const TwoQubitXState&, const TwoQubitXState&) = default;
};

// Reads the X entries of a 4x4 matrix. Throws StructureError when any
// off-X entry exceeds `off_x_tolerance` in magnitude.
TwoQubitXState x_state_from_dense(const Matrix4c& m, double off_x_tolerance);

// Largest entrywise distance between two X states.
double max_entry_difference(const TwoQubitXState& lhs, const TwoQubitXState& rhs);

struct SpectralData {
  // eps[0] >= eps[1] come from the outer (d1, d4, a) block, eps[2] >= eps[3]
  // from the inner (d2, d3, b) block.
  std::array<double, 4> eps{};
};

struct BlochDecomposition {
  std::array<double, 3> x{};                  // Tr(rho s_i (x) 1)
  std::array<double, 3> y{};                  // Tr(rho 1 (x) s_i)
  std::array<std::array<double, 3>, 3> r{};   // Tr(rho s_i (x) s_j)
};

// All entropic quantities in bits.
struct CorrelationReport {
  double qd = 0.0;
  double gmqd_normalized = 0.0;
  double classical = 0.0;
  double mutual_info = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
};

enum class GmqdScale { Raw, Normalized };

// H(x) = -x log2 x - (1-x) log2 (1-x), 0 log 0 = 0. Inputs up to 1e-12
// outside [0, 1] are clamped; anything further throws DomainError.
double binary_entropy(double x);

// -sum p log2 p over the given weights, with weights in [-1e-10, 0) treated as 0.
double shannon_entropy(std::span<const double> weights);

SpectralData eigenvalues(const TwoQubitXState& state);

// (S(rho_A), S(rho_B)).
std::pair<double, double> marginal_entropies(const TwoQubitXState& state);

double joint_entropy(const TwoQubitXState& state);

double mutual_information(const TwoQubitXState& state);

// Closed-form discord with measurement on B. Populates qd, q1, q2,
// classical and mutual_info; gmqd_normalized is left at zero.
CorrelationReport quantum_discord(const TwoQubitXState& state);

BlochDecomposition bloch_decompose(const TwoQubitXState& state);

double gmqd(const TwoQubitXState& state, GmqdScale scale = GmqdScale::Normalized);

// quantum_discord plus the normalized geometric discord.
CorrelationReport correlations(const TwoQubitXState& state);

}  // namespace qdx
