#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace qdx {

using complex = std::complex<double>;

// Fixed-size dense complex square matrix, row-major.
template <std::size_t N>
struct SmallMatrix {
  std::array<complex, N * N> data{};

  static constexpr std::size_t size() { return N; }

  complex& operator()(std::size_t r, std::size_t c) { return data[r * N + c]; }
  const complex& operator()(std::size_t r, std::size_t c) const { return data[r * N + c]; }

  static SmallMatrix identity() {
    SmallMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  SmallMatrix adjoint() const {
    SmallMatrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
  }

  SmallMatrix& operator+=(const SmallMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data[i] += o.data[i];
    return *this;
  }

  friend SmallMatrix operator+(SmallMatrix a, const SmallMatrix& b) { return a += b; }

  friend SmallMatrix operator-(SmallMatrix a, const SmallMatrix& b) {
    for (std::size_t i = 0; i < N * N; ++i) a.data[i] -= b.data[i];
    return a;
  }

  friend SmallMatrix operator*(complex s, SmallMatrix a) {
    for (auto& v : a.data) v *= s;
    return a;
  }

  friend SmallMatrix operator*(const SmallMatrix& a, const SmallMatrix& b) {
    SmallMatrix m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const complex ark = a(r, k);
        if (ark == complex{}) continue;
        for (std::size_t c = 0; c < N; ++c) m(r, c) += ark * b(k, c);
      }
    return m;
  }

  complex trace() const {
    complex t{};
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }
};

using Matrix2c = SmallMatrix<2>;
using Matrix4c = SmallMatrix<4>;

// Kronecker product A (x) B, A acting on the first (most significant) factor.
inline Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return m;
}

}  // namespace qdx
