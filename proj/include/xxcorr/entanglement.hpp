#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

#include "xxcorr/matrix.hpp"
#include "xxcorr/xxchain.hpp"

namespace xxcorr {

struct EntanglementResult {
  double concurrence = 0.0;
  double eof = 0.0;
  std::array<double, 4> spin_flip_roots{};  // descending
};

// EN = h((1 + sqrt(1 - C^2))/2); values within 1e-12 outside [0, 1] are clamped.
inline double eof_from_concurrence(double c) {
  if (c < -1e-12 || c > 1.0 + 1e-12)
    throw std::invalid_argument("eof_from_concurrence: concurrence outside [0, 1]");
  c = std::clamp(c, 0.0, 1.0);
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

// Wootters concurrence of an arbitrary two-qubit state. The roots lambda_i are
// the singular values of K = sqrt(rho) * (sy x sy) * conj(sqrt(rho)): K K^dag
// equals sqrt(rho) * rho_tilde * sqrt(rho), whose eigenvalue square roots are
// the classic definition, but singular values respond linearly to entry
// roundoff where the squared product would lose half the digits on near-zero
// roots.
inline EntanglementResult concurrence_general(const ComplexMatrix& rho) {
  if (rho.dim() != 4) throw std::invalid_argument("concurrence_general: input must be dim 4");
  require_state(rho);

  const auto eig = eig_hermitian(rho);
  ComplexMatrix sqrt_rho(4);
  for (int k = 0; k < 4; ++k) {
    const double s = std::sqrt(std::max(eig.eigenvalues[k], 0.0));
    if (s == 0.0) continue;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        sqrt_rho(r, c) += s * eig.eigenvectors(r, k) * std::conj(eig.eigenvectors(c, k));
  }

  const ComplexMatrix yy = kron(pauli_y(), pauli_y());
  const auto sig = singular_values(sqrt_rho * yy * sqrt_rho.conjugate());
  EntanglementResult out;
  for (int k = 0; k < 4; ++k) out.spin_flip_roots[k] = sig[k];
  const double c = out.spin_flip_roots[0] - out.spin_flip_roots[1] - out.spin_flip_roots[2] -
                   out.spin_flip_roots[3];
  out.concurrence = std::clamp(c, 0.0, 1.0);
  out.eof = eof_from_concurrence(out.concurrence);
  return out;
}

// X-state closed form C = (2/Z) * max{|v| - sqrt(u1 u2), 0}; exact zero in the
// separable phase.
inline double concurrence_x_state(const ThermalState& ts) {
  const double margin = std::abs(ts.v) - std::sqrt(ts.u1) * std::sqrt(ts.u2);
  return margin > 0.0 ? 2.0 * margin / ts.z : 0.0;
}

enum class FreeCoordinate { Temperature, FieldB1 };

// Bisection root of the disentanglement condition |v| = sqrt(u1 u2), which for
// every field configuration reduces to sinh(D/T) = D/|J| (evaluated in log
// form so no temperature underflows or overflows). In Temperature mode the
// fields are taken from p and T is swept; in FieldB1 mode b1 is swept with
// b2 = -field_ratio_a * b1 and T fixed at p.temperature. Returns none when the
// margin has no sign change on the bracket.
inline std::optional<double> disentanglement_boundary(
    const ModelParams& p, FreeCoordinate free, double field_ratio_a = 1.0,
    std::optional<std::pair<double, double>> bracket = std::nullopt) {
  double lo, hi;
  if (bracket) {
    lo = bracket->first;
    hi = bracket->second;
  } else if (free == FreeCoordinate::Temperature) {
    lo = 1e-3;
    hi = 50.0;
  } else {
    lo = 0.0;
    hi = 20.0;
  }
  if (!(lo < hi)) throw std::invalid_argument("disentanglement_boundary: invalid bracket");
  if (free == FreeCoordinate::Temperature && lo <= 0.0)
    throw std::invalid_argument("disentanglement_boundary: temperature bracket must be positive");

  const auto margin = [&](double x) {
    ModelParams q = p;
    if (free == FreeCoordinate::Temperature) {
      q.temperature = x;
    } else {
      q.b1 = x;
      q.b2 = -field_ratio_a * x;
    }
    validate(q);
    const double d = gap_parameter(q);
    const double y = d / q.temperature;
    // log sinh(y) - log(D/|J|)
    return y + std::log1p(-std::exp(-2.0 * y)) - std::log(2.0 * d / std::abs(q.j));
  };

  double flo = margin(lo), fhi = margin(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) return std::nullopt;
  for (int it = 0; it < 200 && hi - lo > 1e-8; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = margin(mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace xxcorr
