#pragma once

#include <array>
#include <functional>
#include <random>

#include <Eigen/Dense>

#include "qdx/channels.hpp"
#include "qdx/twisting.hpp"
#include "qdx/xstate.hpp"

// Brute-force reference computations. Nothing here uses the closed forms of
// xstate.hpp, twisting.hpp or channels.hpp except where a function says so.
namespace qdx::oracle {

using DenseState = Eigen::Matrix4cd;

inline constexpr int kMaxExactParticles = 20;
inline constexpr int kMaxFullRegisterChannelParticles = 6;

// Bloch-sphere angles of the projector pair (1 +- n.sigma) / 2.
struct MeasurementDirection {
  double polar = 0.0;    // [0, pi]
  double azimuth = 0.0;  // [0, 2 pi)

  std::array<double, 3> unit_vector() const;
};

// Grid search over (polar, azimuth) followed by local refinement: keep the
// best point, shrink the window by `refine_shrink` around it and re-grid.
struct GridSpec {
  int coarse_points = 64;
  int refine_rounds = 3;
  double refine_shrink = 0.2;

  // Throws DomainError unless coarse_points >= 8, refine_rounds >= 0 and
  // 0 < refine_shrink < 1.
  void validate() const;
};

struct SphereMinimum {
  double value = 0.0;
  MeasurementDirection at;
};

// Deterministic minimum of `objective` over the sphere. Ties keep the
// lexicographically smallest (polar, azimuth).
SphereMinimum minimize_on_sphere(const std::function<double(const MeasurementDirection&)>& objective,
                                 const GridSpec& grid);

DenseState to_dense(const TwoQubitXState& state);

// Throws StructureError when an off-X entry exceeds `off_x_tolerance`.
TwoQubitXState from_dense(const DenseState& rho, double off_x_tolerance = 1e-10);

// Ascending eigenvalues of a Hermitian matrix.
Eigen::Vector4d dense_eigenvalues(const DenseState& rho);

// von Neumann entropy in bits via a dense eigensolver.
double von_neumann_entropy(const Eigen::MatrixXcd& rho);

Eigen::Matrix2cd partial_trace_b(const DenseState& rho);  // rho_A
Eigen::Matrix2cd partial_trace_a(const DenseState& rho);  // rho_B

// Tr(rho sigma_i (x) sigma_j), i, j in {0 (identity), 1, 2, 3}.
double pauli_expectation(const DenseState& rho, int i, int j);

// S(A) + S(B) - S(AB) from dense eigensolves.
double dense_mutual_information(const DenseState& rho);

// Sum_k p_k S(rho_A|k) for the projective measurement along `dir` on B.
double conditional_entropy_after_b(const DenseState& rho, const MeasurementDirection& dir);

// || rho - sum_k (P_k (x) 1) rho (P_k (x) 1) ||_HS^2 for the projective
// measurement along `dir` on A.
double dephasing_distance_on_a(const DenseState& rho, const MeasurementDirection& dir);

// I(rho) - max over sampled bases of [S(rho_A) - S(A | {P^B})]. Converges
// to the projective-measurement discord from above.
double discord_bruteforce(const TwoQubitXState& state, const GridSpec& grid = {});

// Minimum over sampled projective measurements on A of the Hilbert-Schmidt
// dephasing distance. Unnormalized; converges from above.
double gmqd_bruteforce(const TwoQubitXState& state, const GridSpec& grid = {});

// Two-qubit reduced state of exp(-i (theta/2) Sx^2) |d...d> built in the
// (N + 1)-dimensional symmetric subspace. Throws SizeError for N > 20 and
// StructureError if the reduced matrix is not of X form within 1e-10.
TwoQubitXState exact_reduced_state(const TwistingParams& params);

// Same state built as a 2^N state vector. Sx^2 is diagonalized by the
// Hadamard transform of the register. Throws SizeError for N > 20.
TwoQubitXState exact_reduced_state_full(const TwistingParams& params);

// apply_two_qubit(kraus_set(kind, p), exact_reduced_state(params)).
TwoQubitXState exact_channel_reduced(const TwistingParams& params, ChannelKind kind,
                                     NoiseStrength p);

// Evolves the full 2^N density matrix with the channel on every qubit and
// traces down to the first two. Throws SizeError for N > 6.
TwoQubitXState exact_channel_full_register(const TwistingParams& params, ChannelKind kind,
                                           NoiseStrength p);

// Random valid X state: Dirichlet-distributed populations, coherences with
// uniform phase and magnitude up to the positivity bound. One draw in five
// puts a coherence exactly on the bound (rank-deficient block).
TwoQubitXState random_x_state(std::mt19937_64& rng);

}  // namespace qdx::oracle
