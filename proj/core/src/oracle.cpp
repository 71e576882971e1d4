#include "qdx/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>
#include <tuple>

#include <Eigen/Eigenvalues>

#include "qdx/errors.hpp"

namespace qdx::oracle {
namespace {

using std::numbers::pi;
constexpr complex kI{0.0, 1.0};

double xlog2x(double v) { return v > 0.0 ? v * std::log2(v) : 0.0; }

double entropy_2x2(const Eigen::Matrix2cd& m) {
  const double mean = 0.5 * (m(0, 0).real() + m(1, 1).real());
  const double radius = std::hypot(0.5 * (m(0, 0).real() - m(1, 1).real()), std::abs(m(0, 1)));
  return -xlog2x(std::max(mean + radius, 0.0)) - xlog2x(std::max(mean - radius, 0.0));
}

Eigen::Matrix2cd projector(const MeasurementDirection& dir, double sign) {
  const auto n = dir.unit_vector();
  Eigen::Matrix2cd p;
  p(0, 0) = 0.5 * (1.0 + sign * n[2]);
  p(1, 1) = 0.5 * (1.0 - sign * n[2]);
  p(0, 1) = 0.5 * sign * complex(n[0], -n[1]);
  p(1, 0) = 0.5 * sign * complex(n[0], n[1]);
  return p;
}

DenseState kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  DenseState m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return m;
}

Eigen::Matrix2cd pauli(int i) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  switch (i) {
    case 0:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case 1:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case 2:
      m(0, 1) = -kI;
      m(1, 0) = kI;
      break;
    case 3:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    default:
      throw DomainError("pauli index must be in 0..3");
  }
  return m;
}

bool lex_less(const MeasurementDirection& a, const MeasurementDirection& b) {
  return std::tie(a.polar, a.azimuth) < std::tie(b.polar, b.azimuth);
}

void consider(SphereMinimum& best, bool& have, double value, const MeasurementDirection& at) {
  if (!have || value < best.value || (value == best.value && lex_less(at, best.at))) {
    best = {value, at};
    have = true;
  }
}

// Maps any (polar, azimuth) pair onto polar in [0, pi], azimuth in [0, 2 pi).
MeasurementDirection normalize(double polar, double azimuth) {
  polar = std::fmod(polar, 2.0 * pi);
  if (polar < 0.0) polar += 2.0 * pi;
  if (polar > pi) {
    polar = 2.0 * pi - polar;
    azimuth += pi;
  }
  azimuth = std::fmod(azimuth, 2.0 * pi);
  if (azimuth < 0.0) azimuth += 2.0 * pi;
  return {polar, azimuth};
}

void check_register_size(const TwistingParams& params, int limit) {
  params.validate();
  if (params.n > limit) {
    std::ostringstream msg;
    msg << "exact construction supports N <= " << limit << ", got " << params.n;
    throw SizeError(msg.str());
  }
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// In-place normalized Walsh-Hadamard transform (H on every qubit).
void hadamard_all(Eigen::VectorXcd& v) {
  const auto dim = v.size();
  for (Eigen::Index len = 1; len < dim; len <<= 1)
    for (Eigen::Index i = 0; i < dim; i += 2 * len)
      for (Eigen::Index j = i; j < i + len; ++j) {
        const complex u = v[j];
        const complex w = v[j + len];
        v[j] = u + w;
        v[j + len] = u - w;
      }
  v /= std::sqrt(static_cast<double>(dim));
}

// Register state vector; qubit 0 is the most significant bit, bit 0 = up.
Eigen::VectorXcd twisted_register(const TwistingParams& params) {
  const int n = params.n;
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
  psi[dim - 1] = 1.0;
  hadamard_all(psi);
  for (Eigen::Index s = 0; s < dim; ++s) {
    // After the transform, bit 0 marks a sigma_x = +1 qubit.
    const int minus = std::popcount(static_cast<std::uint64_t>(s));
    const double sx = 0.5 * (n - 2 * minus);
    psi[s] *= std::exp(-kI * (0.5 * params.theta * sx * sx));
  }
  hadamard_all(psi);
  return psi;
}

Eigen::MatrixXcd embed(const Matrix2c& op, int qubit, int n) {
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Ones(1, 1);
  for (int q = 0; q < n; ++q) {
    Eigen::Matrix2cd factor = Eigen::Matrix2cd::Identity();
    if (q == qubit)
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) factor(r, c) = op(r, c);
    Eigen::MatrixXcd next(full.rows() * 2, full.cols() * 2);
    for (Eigen::Index r = 0; r < full.rows(); ++r)
      for (Eigen::Index c = 0; c < full.cols(); ++c) next.block<2, 2>(2 * r, 2 * c) = full(r, c) * factor;
    full = std::move(next);
  }
  return full;
}

}  // namespace

std::array<double, 3> MeasurementDirection::unit_vector() const {
  return {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth),
          std::cos(polar)};
}

void GridSpec::validate() const {
  if (coarse_points < 8) throw DomainError("grid coarse_points must be >= 8");
  if (refine_rounds < 0) throw DomainError("grid refine_rounds must be >= 0");
  if (!(refine_shrink > 0.0 && refine_shrink < 1.0))
    throw DomainError("grid refine_shrink must be in (0, 1)");
}

SphereMinimum minimize_on_sphere(const std::function<double(const MeasurementDirection&)>& objective,
                                 const GridSpec& grid) {
  grid.validate();
  const int pts = grid.coarse_points;
  SphereMinimum best;
  bool have = false;

  for (int i = 0; i < pts; ++i) {
    const double polar = pi * i / (pts - 1);
    const bool pole = i == 0 || i == pts - 1;
    for (int j = 0; j < (pole ? 1 : pts); ++j) {
      const MeasurementDirection dir{polar, 2.0 * pi * j / pts};
      consider(best, have, objective(dir), dir);
    }
  }

  double polar_width = pi;
  double azimuth_width = 2.0 * pi;
  // A window whose best point lands on its edge is re-gridded at the same
  // width around that point before shrinking, so a shallow valley can be
  // followed further than the shrinking windows alone would reach.
  constexpr int kMaxRecentres = 32;
  for (int round = 0; round < grid.refine_rounds; ++round) {
    polar_width *= grid.refine_shrink;
    azimuth_width *= grid.refine_shrink;
    for (int pass = 0; pass < kMaxRecentres; ++pass) {
      const MeasurementDirection centre = best.at;
      bool on_edge = false;
      for (int i = 0; i < pts; ++i) {
        const double polar = centre.polar + polar_width * (static_cast<double>(i) / (pts - 1) - 0.5);
        for (int j = 0; j < pts; ++j) {
          const double azimuth =
              centre.azimuth + azimuth_width * (static_cast<double>(j) / (pts - 1) - 0.5);
          const auto dir = normalize(polar, azimuth);
          const MeasurementDirection before = best.at;
          consider(best, have, objective(dir), dir);
          if (best.at.polar != before.polar || best.at.azimuth != before.azimuth)
            on_edge = i == 0 || j == 0 || i == pts - 1 || j == pts - 1;
        }
      }
      if (!on_edge) break;
    }
  }
  return best;
}

DenseState to_dense(const TwoQubitXState& s) {
  DenseState m = DenseState::Zero();
  m(0, 0) = s.d1;
  m(1, 1) = s.d2;
  m(2, 2) = s.d3;
  m(3, 3) = s.d4;
  m(0, 3) = s.a;
  m(3, 0) = std::conj(s.a);
  m(1, 2) = s.b;
  m(2, 1) = std::conj(s.b);
  return m;
}

TwoQubitXState from_dense(const DenseState& rho, double off_x_tolerance) {
  Matrix4c m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = rho(r, c);
  return x_state_from_dense(m, off_x_tolerance);
}

Eigen::Vector4d dense_eigenvalues(const DenseState& rho) {
  Eigen::SelfAdjointEigenSolver<DenseState> solver(rho, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  double h = 0.0;
  for (double e : solver.eigenvalues()) h -= xlog2x(std::max(e, 0.0));
  return h;
}

Eigen::Matrix2cd partial_trace_b(const DenseState& rho) {
  Eigen::Matrix2cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out(i, j) = rho(2 * i, 2 * j) + rho(2 * i + 1, 2 * j + 1);
  return out;
}

Eigen::Matrix2cd partial_trace_a(const DenseState& rho) {
  Eigen::Matrix2cd out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out(i, j) = rho(i, j) + rho(2 + i, 2 + j);
  return out;
}

double pauli_expectation(const DenseState& rho, int i, int j) {
  return (rho * kron2(pauli(i), pauli(j))).trace().real();
}

double dense_mutual_information(const DenseState& rho) {
  return von_neumann_entropy(partial_trace_b(rho)) + von_neumann_entropy(partial_trace_a(rho)) -
         von_neumann_entropy(rho);
}

double conditional_entropy_after_b(const DenseState& rho, const MeasurementDirection& dir) {
  double total = 0.0;
  for (double sign : {1.0, -1.0}) {
    const DenseState lift = kron2(Eigen::Matrix2cd::Identity(), projector(dir, sign));
    const DenseState branch = lift * rho * lift;
    const double prob = branch.trace().real();
    if (prob <= 1e-15) continue;
    total += prob * entropy_2x2(partial_trace_b(branch) / prob);
  }
  return total;
}

double dephasing_distance_on_a(const DenseState& rho, const MeasurementDirection& dir) {
  DenseState dephased = DenseState::Zero();
  for (double sign : {1.0, -1.0}) {
    const DenseState lift = kron2(projector(dir, sign), Eigen::Matrix2cd::Identity());
    dephased += lift * rho * lift;
  }
  return (rho - dephased).squaredNorm();
}

double discord_bruteforce(const TwoQubitXState& state, const GridSpec& grid) {
  const DenseState rho = to_dense(state);
  const double mutual = dense_mutual_information(rho);
  const double s_a = von_neumann_entropy(partial_trace_b(rho));
  const auto best = minimize_on_sphere(
      [&](const MeasurementDirection& dir) { return conditional_entropy_after_b(rho, dir); }, grid);
  return mutual - (s_a - best.value);
}

double gmqd_bruteforce(const TwoQubitXState& state, const GridSpec& grid) {
  const DenseState rho = to_dense(state);
  return minimize_on_sphere(
             [&](const MeasurementDirection& dir) { return dephasing_distance_on_a(rho, dir); }, grid)
      .value;
}

TwoQubitXState exact_reduced_state(const TwistingParams& params) {
  check_register_size(params, kMaxExactParticles);
  const int n = params.n;

  // Dicke basis |N, k>, k = number of up spins; Sx couples k and k + 1.
  Eigen::MatrixXd sx = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int k = 0; k < n; ++k) {
    const double v = 0.5 * std::sqrt(static_cast<double>(n - k) * (k + 1));
    sx(k, k + 1) = v;
    sx(k + 1, k) = v;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sx);
  const auto& vecs = solver.eigenvectors();
  const auto& vals = solver.eigenvalues();

  // Start in k = 0 (all spins down).
  Eigen::VectorXcd coeff = Eigen::VectorXcd::Zero(n + 1);
  for (int m = 0; m <= n; ++m) {
    const complex phase = std::exp(-kI * (0.5 * params.theta * vals[m] * vals[m]));
    coeff += vecs.col(m).cast<complex>() * (phase * vecs(0, m));
  }

  // Split |N, k> into the first pair and the remaining N - 2 spins. A pair
  // configuration with j up spins next to |N - 2, m> carries amplitude
  // c_{j+m} sqrt(C(N-2, m) / C(N, j+m)).
  DenseState rho = DenseState::Zero();
  for (int m = 0; m <= n - 2; ++m) {
    Eigen::Vector4cd phi = Eigen::Vector4cd::Zero();
    const double rest = binomial(n - 2, m);
    auto amp = [&](int ups) { return coeff[ups + m] * std::sqrt(rest / binomial(n, ups + m)); };
    phi[0] = amp(2);  // |uu>
    phi[1] = amp(1);  // |ud>
    phi[2] = amp(1);  // |du>
    phi[3] = amp(0);  // |dd>
    rho += phi * phi.adjoint();
  }
  return from_dense(rho, 1e-10);
}

TwoQubitXState exact_reduced_state_full(const TwistingParams& params) {
  check_register_size(params, kMaxExactParticles);
  const Eigen::VectorXcd psi = twisted_register(params);
  const Eigen::Index rest = psi.size() / 4;
  DenseState rho = DenseState::Zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      // dot() conjugates its left operand: sum_r psi(a, r) psi(b, r)^*.
      rho(a, b) = psi.segment(b * rest, rest).dot(psi.segment(a * rest, rest));
  return from_dense(rho, 1e-10);
}

TwoQubitXState exact_channel_reduced(const TwistingParams& params, ChannelKind kind,
                                     NoiseStrength p) {
  return apply_two_qubit(kraus_set(kind, p), exact_reduced_state(params));
}

TwoQubitXState exact_channel_full_register(const TwistingParams& params, ChannelKind kind,
                                           NoiseStrength p) {
  check_register_size(params, kMaxFullRegisterChannelParticles);
  const int n = params.n;
  const Eigen::VectorXcd psi = twisted_register(params);
  Eigen::MatrixXcd rho = psi * psi.adjoint();

  const auto kraus = kraus_set(kind, p);
  for (int q = 0; q < n; ++q) {
    Eigen::MatrixXcd next = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
    for (const auto& e : kraus.ops) {
      const Eigen::MatrixXcd k = embed(e, q, n);
      next += k * rho * k.adjoint();
    }
    rho = std::move(next);
  }

  const Eigen::Index rest = rho.rows() / 4;
  DenseState reduced = DenseState::Zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (Eigen::Index r = 0; r < rest; ++r) reduced(a, b) += rho(a * rest + r, b * rest + r);
  return from_dense(reduced, 1e-10);
}

TwoQubitXState random_x_state(std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::array<double, 4> w{};
  double sum = 0.0;
  for (auto& v : w) sum += (v = expo(rng));
  for (auto& v : w) v /= sum;

  auto coherence = [&](double bound) {
    const double fraction = unit(rng) < 0.2 ? 1.0 : unit(rng);
    return std::polar(fraction * bound, 2.0 * pi * unit(rng));
  };
  TwoQubitXState s;
  s.d1 = w[0];
  s.d2 = w[1];
  s.d3 = w[2];
  s.d4 = 1.0 - (w[0] + w[1] + w[2]);
  s.a = coherence(std::sqrt(s.d1 * s.d4));
  s.b = coherence(std::sqrt(s.d2 * s.d3));
  return s;
}

}  // namespace qdx::oracle
