#pragma once

#include <array>
#include <random>

#include "xxcorr/xxcorr.hpp"

// Deterministic random inputs for property tests. Every test owns its
// generator (fixed seed) so running tags in isolation gives identical data.
namespace testutil {

inline std::mt19937 make_rng(unsigned seed) { return std::mt19937(seed); }

inline xxcorr::ComplexMatrix random_hermitian(std::mt19937& g, int dim, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  xxcorr::ComplexMatrix m(dim);
  for (int r = 0; r < dim; ++r) {
    m(r, r) = u(g);
    for (int c = r + 1; c < dim; ++c) {
      m(r, c) = xxcorr::cplx(u(g), u(g));
      m(c, r) = std::conj(m(r, c));
    }
  }
  return m;
}

// Haar-ish unitary: eigenvector matrix of a random Hermitian draw.
inline xxcorr::ComplexMatrix random_unitary(std::mt19937& g, int dim) {
  return xxcorr::eig_hermitian(random_hermitian(g, dim)).eigenvectors;
}

// Random full-rank density matrix G G^dag / Tr(G G^dag).
inline xxcorr::ComplexMatrix random_state(std::mt19937& g, int dim = 4) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  xxcorr::ComplexMatrix a(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) a(r, c) = xxcorr::cplx(u(g), u(g));
  xxcorr::ComplexMatrix rho = a * a.adjoint();
  rho *= 1.0 / rho.trace().real();
  return rho;
}

// |psi><psi| from (unnormalized) amplitudes in the {|00>,|01>,|10>,|11>} basis.
inline xxcorr::ComplexMatrix projector4(const std::array<xxcorr::cplx, 4>& amp) {
  double n2 = 0.0;
  for (const auto& a : amp) n2 += std::norm(a);
  xxcorr::ComplexMatrix rho(4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) rho(r, c) = amp[r] * std::conj(amp[c]) / n2;
  return rho;
}

inline xxcorr::ComplexMatrix swap_matrix() {
  xxcorr::ComplexMatrix s(4);
  s(0, 0) = 1.0;
  s(1, 2) = 1.0;
  s(2, 1) = 1.0;
  s(3, 3) = 1.0;
  return s;
}

// Uniform draw from the Bell-diagonal simplex, returned as (c1, c2, c3).
inline std::array<double, 3> random_bell_triple(std::mt19937& g) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double q[4], sum = 0.0;
  for (double& x : q) {
    x = u(g);
    sum += x;
  }
  for (double& x : q) x *= 4.0 / sum;
  return {0.25 * (q[2] + q[3] - q[0] - q[1]), 0.25 * (q[1] + q[3] - q[0] - q[2]),
          0.25 * (q[1] + q[2] - q[0] - q[3])};
}

// Random triple (c, c, -c^2) in a random slot permutation; every such triple
// is a valid Bell-diagonal state for |c| <= 1.
inline std::array<double, 3> random_equal_pair_triple(std::mt19937& g) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double c = u(g);
  std::array<double, 3> t{};
  const int slot = static_cast<int>(g() % 3);
  for (int i = 0; i < 3; ++i) t[i] = i == slot ? -c * c : c;
  return t;
}

}  // namespace testutil
