#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "xxcorr/matrix.hpp"

namespace xxcorr {

// Physical knobs of the two-qubit XX chain, k = 1 convention.
struct ModelParams {
  double j = 1.0;
  double b1 = 0.0;
  double b2 = 0.0;
  double temperature = 1.0;
};

inline void validate(const ModelParams& p) {
  if (!(p.temperature > 0.0)) throw std::invalid_argument("ModelParams: temperature must be > 0");
  if (p.j == 0.0) throw std::invalid_argument("ModelParams: j must be nonzero");
  if (!std::isfinite(p.j) || !std::isfinite(p.b1) || !std::isfinite(p.b2) ||
      !std::isfinite(p.temperature))
    throw std::invalid_argument("ModelParams: parameters must be finite");
}

// Gap parameter D = sqrt((B1-B2)^2 + J^2).
inline double gap_parameter(const ModelParams& p) { return std::hypot(p.b1 - p.b2, p.j); }

// H = [[-(B1+B2), 0, 0, 0], [0, -(B1-B2), J, 0], [0, J, B1-B2, 0], [0, 0, 0, B1+B2]]
// in the {|00>, |01>, |10>, |11>} basis.
inline ComplexMatrix hamiltonian(const ModelParams& p) {
  validate(p);
  ComplexMatrix h(4);
  h(0, 0) = -(p.b1 + p.b2);
  h(1, 1) = -(p.b1 - p.b2);
  h(2, 2) = p.b1 - p.b2;
  h(3, 3) = p.b1 + p.b2;
  h(1, 2) = p.j;
  h(2, 1) = p.j;
  return h;
}

// Closed-form spectrum: |00> at -(B1+B2), |11> at +(B1+B2), and
// |psi_pm> = (|01> + r_pm |10>)/N_pm at +-D with r_pm = ((B1-B2) +- D)/J.
inline SpectralDecomposition eigensystem(const ModelParams& p) {
  validate(p);
  const double b = p.b1 - p.b2;
  const double d = gap_parameter(p);
  const double e00 = -(p.b1 + p.b2);

  // Pick the cancellation-free form of each ratio (r_+ * r_- = -1).
  double rp, rm;
  if (b >= 0.0) {
    rp = (b + d) / p.j;
    rm = -p.j / (b + d);
  } else {
    rm = (b - d) / p.j;
    rp = p.j / (d - b);
  }
  const double np = std::sqrt(1.0 + rp * rp);
  const double nm = std::sqrt(1.0 + rm * rm);

  // Columns before sorting: |00>, |11>, |psi_->, |psi_+>.
  struct Level {
    double energy;
    cplx amp[4];
  };
  const Level levels[4] = {
      {e00, {1.0, 0.0, 0.0, 0.0}},
      {-e00, {0.0, 0.0, 0.0, 1.0}},
      {-d, {0.0, 1.0 / nm, rm / nm, 0.0}},
      {d, {0.0, 1.0 / np, rp / np, 0.0}},
  };

  int order[4] = {0, 1, 2, 3};
  std::stable_sort(order, order + 4,
                   [&](int i, int j) { return levels[i].energy < levels[j].energy; });

  SpectralDecomposition out{std::vector<double>(4), ComplexMatrix(4)};
  for (int col = 0; col < 4; ++col) {
    const Level& lv = levels[order[col]];
    out.eigenvalues[col] = lv.energy;
    for (int r = 0; r < 4; ++r) out.eigenvectors(r, col) = lv.amp[r];
  }
  return out;
}

// Thermal X-state data. The coefficients carry a common scale factor
// exp(E_min/T) so that every exponent evaluated is <= 0 (no overflow at any
// temperature); z is their sum and rho stores the normalized ratios, which
// are scale-independent.
struct ThermalState {
  ComplexMatrix rho{4};
  double u1 = 0.0, u2 = 0.0;  // |00>, |11> weights
  double w1 = 0.0, w2 = 0.0;  // |01>, |10> diagonal weights
  double v = 0.0;             // |01><10| coefficient
  double z = 0.0;             // partition sum of the stored weights
  double d = 0.0;             // gap parameter D
};

inline ThermalState thermal_state(const ModelParams& p) {
  validate(p);
  const double b = p.b1 - p.b2;
  const double d = gap_parameter(p);
  const double t = p.temperature;
  const double e00 = -(p.b1 + p.b2);
  const double emin = std::min({e00, -e00, -d});

  ThermalState ts;
  ts.d = d;
  ts.u1 = std::exp((emin - e00) / t);
  ts.u2 = std::exp((emin + e00) / t);
  const double gp = std::exp((emin + d) / t);  // weight of the -D level
  const double gm = std::exp((emin - d) / t);  // weight of the +D level
  const double ch = 0.5 * (gp + gm);           // scaled cosh(D/T)
  const double sh = 0.5 * (gp - gm);           // scaled sinh(D/T)
  ts.w1 = ch + (b / d) * sh;
  ts.w2 = ch - (b / d) * sh;
  ts.v = -(p.j / d) * sh;
  ts.z = ts.u1 + ts.u2 + ts.w1 + ts.w2;

  ts.rho(0, 0) = ts.u1 / ts.z;
  ts.rho(1, 1) = ts.w1 / ts.z;
  ts.rho(2, 2) = ts.w2 / ts.z;
  ts.rho(3, 3) = ts.u2 / ts.z;
  ts.rho(1, 2) = ts.v / ts.z;
  ts.rho(2, 1) = ts.v / ts.z;
  return ts;
}

// T -> 0 endpoint: equal mixture of all levels within 1e-9 of the ground
// energy (covers degeneracies at level crossings).
inline ComplexMatrix ground_state_limit(double j, double b1, double b2) {
  const ModelParams p{j, b1, b2, 1.0};
  const auto es = eigensystem(p);
  const double emin = es.eigenvalues.front();
  ComplexMatrix rho(4);
  int count = 0;
  for (int col = 0; col < 4; ++col) {
    if (es.eigenvalues[col] - emin > 1e-9) continue;
    ++count;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        rho(r, c) += es.eigenvectors(r, col) * std::conj(es.eigenvectors(c, col));
  }
  rho *= cplx(1.0 / count);
  return rho;
}

}  // namespace xxcorr
