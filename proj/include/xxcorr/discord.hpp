#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "xxcorr/matrix.hpp"

namespace xxcorr {

enum class Side { A, B };

// Rank-1 projective measurement on one qubit with Bloch axis
// n = (sin theta cos phi, sin theta sin phi, cos theta); the projector pair
// is (I +- n.sigma)/2. Canonical range: theta in [0, pi/2], phi in [0, 2pi).
struct Measurement {
  double theta = 0.0;
  double phi = 0.0;
  Side side = Side::B;
};

inline ComplexMatrix measurement_projector(const Measurement& m, int outcome) {
  if (outcome != 0 && outcome != 1)
    throw std::invalid_argument("measurement_projector: outcome must be 0 or 1");
  const double sg = outcome == 0 ? 1.0 : -1.0;
  const double st = std::sin(m.theta);
  const double nx = st * std::cos(m.phi);
  const double ny = st * std::sin(m.phi);
  const double nz = std::cos(m.theta);
  ComplexMatrix pi(2);
  pi(0, 0) = 0.5 * (1.0 + sg * nz);
  pi(0, 1) = cplx(0.5 * sg * nx, -0.5 * sg * ny);
  pi(1, 0) = cplx(0.5 * sg * nx, 0.5 * sg * ny);
  pi(1, 1) = 0.5 * (1.0 - sg * nz);
  return pi;
}

namespace detail {

// Entropy in bits of a 2x2 Hermitian PSD matrix given its unnormalized
// entries and normalization p, via the trace/determinant closed form.
inline double entropy2(double s00, double s11, double re01, double im01, double p) {
  const double half = 0.5 * (s00 + s11) / p;
  const double det = (s00 * s11 - (re01 * re01 + im01 * im01)) / (p * p);
  double disc = half * half - det;
  if (disc < 0.0) disc = 0.0;
  const double sq = std::sqrt(disc);
  const double l1 = half + sq;
  const double l2 = half - sq;
  return -xlog2x(l1) - xlog2x(std::max(l2, 0.0));
}

// S(rho | {Pi_pm}) for the measurement axis n on `side`. The conditional state
// of the unmeasured qubit is assembled from 2x2 block traces of the projected
// state: sigma[o][o'] = sum_{c,c'} rho(idx(o,c), idx(o',c')) * Pi(c',c).
inline double conditional_entropy_axis(const ComplexMatrix& rho, Side side, double nx, double ny,
                                       double nz) {
  double total = 0.0;
  for (double sg : {1.0, -1.0}) {
    const double p00 = 0.5 * (1.0 + sg * nz);
    const double p11 = 0.5 * (1.0 - sg * nz);
    const cplx p01(0.5 * sg * nx, -0.5 * sg * ny);  // Pi(0,1); Pi(1,0) = conj
    cplx sigma[2][2];
    for (int o = 0; o < 2; ++o)
      for (int op = 0; op < 2; ++op) {
        auto idx = [&](int outer, int inner) {
          return side == Side::B ? 2 * outer + inner : 2 * inner + outer;
        };
        sigma[o][op] = rho(idx(o, 0), idx(op, 0)) * p00 +
                       rho(idx(o, 0), idx(op, 1)) * std::conj(p01) +
                       rho(idx(o, 1), idx(op, 0)) * p01 +
                       rho(idx(o, 1), idx(op, 1)) * p11;
      }
    const double p = sigma[0][0].real() + sigma[1][1].real();
    if (p < 1e-14) continue;
    total += p * entropy2(sigma[0][0].real(), sigma[1][1].real(), sigma[0][1].real(),
                          sigma[0][1].imag(), p);
  }
  return total;
}

inline double conditional_entropy_angles(const ComplexMatrix& rho, Side side, double theta,
                                         double phi) {
  const double st = std::sin(theta);
  return conditional_entropy_axis(rho, side, st * std::cos(phi), st * std::sin(phi),
                                  std::cos(theta));
}

}  // namespace detail

// S(rho | {Pi_j}) = sum_j p_j S(rho_j): probabilities and renormalized
// post-measurement states of the projective measurement m. Outcomes with
// p_j < 1e-14 contribute zero.
inline double conditional_entropy(const ComplexMatrix& rho, const Measurement& m) {
  if (rho.dim() != 4) throw std::invalid_argument("conditional_entropy: input must be dim 4");
  require_state(rho);
  if (!std::isfinite(m.theta) || !std::isfinite(m.phi))
    throw std::invalid_argument("conditional_entropy: angles must be finite");
  return detail::conditional_entropy_angles(rho, m.side, m.theta, m.phi);
}

struct BlochDecomposition {
  std::array<double, 3> r{};                      // qubit A Bloch vector
  std::array<double, 3> s{};                      // qubit B Bloch vector
  std::array<std::array<double, 3>, 3> corr{};    // corr[i][j] = Tr(rho sigma_i x sigma_j)
};

inline BlochDecomposition bloch_decomposition(const ComplexMatrix& rho) {
  if (rho.dim() != 4) throw std::invalid_argument("bloch_decomposition: input must be dim 4");
  require_state(rho);
  const std::array<ComplexMatrix, 3> sig = {pauli_x(), pauli_y(), pauli_z()};
  const ComplexMatrix id = identity2();
  const auto re_tr_prod = [&](const ComplexMatrix& k) {
    cplx t{};
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) t += rho(r, c) * k(c, r);
    return t.real();
  };
  BlochDecomposition out;
  for (int i = 0; i < 3; ++i) {
    out.r[i] = re_tr_prod(kron(sig[i], id));
    out.s[i] = re_tr_prod(kron(id, sig[i]));
    for (int j = 0; j < 3; ++j) out.corr[i][j] = re_tr_prod(kron(sig[i], sig[j]));
  }
  return out;
}

// rho = (1/4)[I + r.sigma x I + I x s.sigma + sum_ij corr_ij sigma_i x sigma_j].
inline ComplexMatrix state_from_bloch(const BlochDecomposition& b) {
  const std::array<ComplexMatrix, 3> sig = {pauli_x(), pauli_y(), pauli_z()};
  const ComplexMatrix id = identity2();
  ComplexMatrix rho = ComplexMatrix::identity(4);
  for (int i = 0; i < 3; ++i) {
    rho += cplx(b.r[i]) * kron(sig[i], id);
    rho += cplx(b.s[i]) * kron(id, sig[i]);
    for (int j = 0; j < 3; ++j) rho += cplx(b.corr[i][j]) * kron(sig[i], sig[j]);
  }
  rho *= cplx(0.25);
  return rho;
}

inline void require_bell_diagonal_triple(double c1, double c2, double c3) {
  const double q[4] = {1.0 - c1 - c2 - c3, 1.0 - c1 + c2 + c3, 1.0 + c1 - c2 + c3,
                       1.0 + c1 + c2 - c3};
  for (double qi : q)
    if (qi < -1e-12)
      throw std::invalid_argument("bell-diagonal triple outside the state tetrahedron");
}

inline ComplexMatrix bell_diagonal_state(double c1, double c2, double c3) {
  require_bell_diagonal_triple(c1, c2, c3);
  BlochDecomposition b;
  b.corr[0][0] = c1;
  b.corr[1][1] = c2;
  b.corr[2][2] = c3;
  return state_from_bloch(b);
}

// S(rho_A) + S(rho_B) - S(rho_AB) in bits.
inline double mutual_information(const ComplexMatrix& rho) {
  if (rho.dim() != 4) throw std::invalid_argument("mutual_information: input must be dim 4");
  const auto lam = require_state(rho);
  double s_ab = 0.0;
  for (double l : lam) s_ab -= xlog2x(std::max(l, 0.0));
  const double s_a = von_neumann_entropy(partial_trace(rho, Qubit::A));
  const double s_b = von_neumann_entropy(partial_trace(rho, Qubit::B));
  return s_a + s_b - s_ab;
}

struct CorrelationSummary {
  double mutual_info = 0.0;
  double classical_corr = 0.0;
  double discord = 0.0;
  Measurement optimal_measurement{};
  double entropy_a = 0.0;
  double entropy_b = 0.0;
  double entropy_ab = 0.0;
};

namespace detail {

constexpr int kThetaCount = 64;
constexpr int kPhiCount = 128;
constexpr double kTieTol = 1e-12;

struct Candidate {
  double theta = 0.0;
  double phi = 0.0;
  double value = 0.0;
};

// Fold arbitrary angles onto the canonical half-sphere: theta in [0, pi/2],
// phi in [0, 2pi). Antipodal axes describe the same projector pair. Inputs
// already canonical pass through bitwise unchanged.
inline std::pair<double, double> canonical_angles(double theta, double phi) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (theta >= 0.0 && theta <= half_pi && phi >= 0.0 && phi < two_pi) return {theta, phi};
  const double st = std::sin(theta);
  double nx = st * std::cos(phi);
  double ny = st * std::sin(phi);
  double nz = std::cos(theta);
  if (nz < 0.0) {
    nx = -nx;
    ny = -ny;
    nz = -nz;
  }
  const double tc = std::acos(std::clamp(nz, -1.0, 1.0));
  double pc = 0.0;
  if (std::sin(tc) > 1e-12) {
    pc = std::atan2(ny, nx);
    if (pc < 0.0) pc += two_pi;
    if (pc >= two_pi) pc = 0.0;
  }
  return {tc, pc};
}

// Maximization objective J(theta, phi) = S_unmeasured - S(rho | measurement);
// every evaluation is recorded at its canonical angles so the reported
// optimum always reproduces the reported value bitwise.
struct Objective {
  const ComplexMatrix& rho;
  Side side;
  double s_unmeasured;
  std::vector<Candidate>* log = nullptr;

  double operator()(double theta_raw, double phi_raw) const {
    const auto [t, f] = canonical_angles(theta_raw, phi_raw);
    const double v = s_unmeasured - conditional_entropy_angles(rho, side, t, f);
    if (log) log->push_back({t, f, v});
    return v;
  }
};

// Largest value wins; candidates within kTieTol of the maximum count as tied
// and the smallest theta, then smallest phi, takes the tie.
inline const Candidate& select_best(const std::vector<Candidate>& cands) {
  double vmax = cands.front().value;
  for (const auto& c : cands) vmax = std::max(vmax, c.value);
  const Candidate* best = nullptr;
  for (const auto& c : cands) {
    if (c.value < vmax - kTieTol) continue;
    if (!best || c.theta < best->theta || (c.theta == best->theta && c.phi < best->phi)) best = &c;
  }
  return *best;
}

// Nelder-Mead on the (theta, phi) plane, maximizing. Vertices live in raw
// (unwrapped) coordinates; only evaluations are canonicalized. Terminates
// when the simplex value spread drops below 1e-10.
inline void nelder_mead(const Objective& obj, std::array<Candidate, 3> init) {
  struct Vertex {
    double t, f, val;
  };
  std::array<Vertex, 3> sx;
  for (int i = 0; i < 3; ++i) sx[i] = {init[i].theta, init[i].phi, init[i].value};

  for (int iter = 0; iter < 250; ++iter) {
    std::sort(sx.begin(), sx.end(), [](const Vertex& a, const Vertex& b) { return a.val > b.val; });
    if (sx[0].val - sx[2].val < 1e-10) break;
    const double ct = 0.5 * (sx[0].t + sx[1].t);
    const double cf = 0.5 * (sx[0].f + sx[1].f);
    const double rt = ct + (ct - sx[2].t);
    const double rf = cf + (cf - sx[2].f);
    const double fr = obj(rt, rf);
    if (fr > sx[0].val) {
      const double et = ct + 2.0 * (ct - sx[2].t);
      const double ef = cf + 2.0 * (cf - sx[2].f);
      const double fe = obj(et, ef);
      sx[2] = fe > fr ? Vertex{et, ef, fe} : Vertex{rt, rf, fr};
    } else if (fr > sx[1].val) {
      sx[2] = {rt, rf, fr};
    } else {
      const double kt = ct + 0.5 * (sx[2].t - ct);
      const double kf = cf + 0.5 * (sx[2].f - cf);
      const double fk = obj(kt, kf);
      if (fk > sx[2].val) {
        sx[2] = {kt, kf, fk};
      } else {
        for (int i = 1; i < 3; ++i) {
          sx[i].t = sx[0].t + 0.5 * (sx[i].t - sx[0].t);
          sx[i].f = sx[0].f + 0.5 * (sx[i].f - sx[0].f);
          sx[i].val = obj(sx[i].t, sx[i].f);
        }
      }
    }
  }
}

// Golden-section polish of theta at fixed phi; returns the bracket midpoint
// after convergence to ~1e-14, which is independent of small perturbations of
// the entry bracket (keeps optimizer output reproducible under symmetries).
inline double golden_section_theta(const Objective& obj, double t0, double phi, double halfwidth) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  double lo = std::max(0.0, t0 - halfwidth);
  double hi = std::min(half_pi, t0 + halfwidth);
  const double gr = 0.6180339887498949;
  double c = hi - gr * (hi - lo);
  double d = lo + gr * (hi - lo);
  double fc = obj(c, phi), fd = obj(d, phi);
  for (int i = 0; i < 90 && hi - lo > 1e-14; ++i) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = obj(c, phi);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = obj(d, phi);
    }
  }
  return 0.5 * (lo + hi);
}

inline Candidate optimize_classical_corr(const ComplexMatrix& rho, Side side, double s_unmeasured) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  constexpr double two_pi = 2.0 * std::numbers::pi;

  std::vector<Candidate> grid;
  grid.reserve(kThetaCount * kPhiCount);
  Objective scan{rho, side, s_unmeasured, &grid};
  for (int i = 0; i < kThetaCount; ++i) {
    const double t = half_pi * i / (kThetaCount - 1);
    for (int j = 0; j < kPhiCount; ++j) scan(t, two_pi * j / kPhiCount);
  }
  const Candidate grid_best = select_best(grid);

  // Refinement starts: the three best grid points (distinct positions).
  std::vector<Candidate> sorted = grid;
  std::sort(sorted.begin(), sorted.end(), [](const Candidate& a, const Candidate& b) {
    if (a.value != b.value) return a.value > b.value;
    if (a.theta != b.theta) return a.theta < b.theta;
    return a.phi < b.phi;
  });
  std::array<Candidate, 3> init = {sorted[0], sorted[1], sorted[2]};
  // De-degenerate a collinear simplex so Nelder-Mead spans both directions.
  const double area = (init[1].theta - init[0].theta) * (init[2].phi - init[0].phi) -
                      (init[2].theta - init[0].theta) * (init[1].phi - init[0].phi);
  if (std::abs(area) < 1e-9) {
    std::vector<Candidate> probe;
    Objective fix{rho, side, s_unmeasured, &probe};
    fix(init[0].theta + 0.5 * half_pi / (kThetaCount - 1),
        init[0].phi + 0.5 * two_pi / kPhiCount);
    init[2] = probe.front();
  }

  std::vector<Candidate> refined;
  Objective refine{rho, side, s_unmeasured, &refined};
  nelder_mead(refine, init);

  double nm_max = grid_best.value;
  Candidate nm_best = grid_best;
  for (const auto& c : refined)
    if (c.value > nm_max) {
      nm_max = c.value;
      nm_best = c;
    }

  if (nm_max <= grid_best.value + kTieTol) return grid_best;

  // Interior optimum: deterministic polish so the reported angles do not
  // inherit simplex noise. Evaluate the polished theta both at the found phi
  // and at phi = 0 (covers the axially symmetric states where phi is flat).
  std::vector<Candidate> polish;
  Objective pol{rho, side, s_unmeasured, &polish};
  const double tp = golden_section_theta(pol, nm_best.theta, nm_best.phi,
                                         half_pi / (kThetaCount - 1));
  polish.clear();
  pol(tp, nm_best.phi);
  pol(tp, 0.0);
  std::vector<Candidate> pool = grid;
  pool.insert(pool.end(), polish.begin(), polish.end());
  return select_best(pool);
}

}  // namespace detail

namespace detail {

inline CorrelationSummary summarize(const ComplexMatrix& rho, Side side) {
  if (rho.dim() != 4) throw std::invalid_argument("correlation summary: input must be dim 4");
  const auto lam = require_state(rho);
  CorrelationSummary out;
  out.entropy_ab = 0.0;
  for (double l : lam) out.entropy_ab -= xlog2x(std::max(l, 0.0));
  out.entropy_a = von_neumann_entropy(partial_trace(rho, Qubit::A));
  out.entropy_b = von_neumann_entropy(partial_trace(rho, Qubit::B));
  out.mutual_info = out.entropy_a + out.entropy_b - out.entropy_ab;

  const double s_unmeasured = side == Side::B ? out.entropy_a : out.entropy_b;
  Candidate best = optimize_classical_corr(rho, side, s_unmeasured);
  if (best.value < 0.0 && best.value > -kTieTol) best.value = 0.0;
  out.classical_corr = best.value;
  out.optimal_measurement = Measurement{best.theta, best.phi, side};

  double qd = out.mutual_info - out.classical_corr;
  if (qd < 0.0 && qd >= -1e-7) qd = 0.0;
  out.discord = qd;
  return out;
}

}  // namespace detail

// sup over projective measurements of J = S(unmeasured marginal) - S(rho|{Pi}),
// coarse 64x128 angle grid plus simplex refinement; deterministic.
inline std::pair<double, Measurement> classical_correlation(const ComplexMatrix& rho,
                                                            Side side = Side::B) {
  const CorrelationSummary s = detail::summarize(rho, side);
  return {s.classical_corr, s.optimal_measurement};
}

// Total, classical and quantum correlations of rho with the measurement on
// `side`; discord = mutual information - classical correlation, floored at 0
// within the optimizer tolerance.
inline CorrelationSummary quantum_discord(const ComplexMatrix& rho, Side side = Side::B) {
  return detail::summarize(rho, side);
}

// Closed forms for Bell-diagonal states (correlation triple c1, c2, c3).
inline double luo_mutual_information(double c1, double c2, double c3) {
  require_bell_diagonal_triple(c1, c2, c3);
  const double q[4] = {1.0 - c1 - c2 - c3, 1.0 - c1 + c2 + c3, 1.0 + c1 - c2 + c3,
                       1.0 + c1 + c2 - c3};
  double s = 0.0;
  for (double qi : q) s += xlog2x(std::max(qi, 0.0));
  return 0.25 * s;
}

inline double luo_classical_correlation(double c1, double c2, double c3) {
  require_bell_diagonal_triple(c1, c2, c3);
  const double c = std::min(1.0, std::max({std::abs(c1), std::abs(c2), std::abs(c3)}));
  return 0.5 * (xlog2x(1.0 - c) + xlog2x(1.0 + c));
}

// True when some ordering (i, j, k) of the triple has c_i == c_j and
// c_k == -c_i * c_j within tolerance; such states have equal classical and
// quantum correlations for either sign of the repeated coefficient. Pure
// predicate on the numbers: it never throws, so it can also answer "no" for
// triples outside the physical simplex.
inline bool qd_equals_cc_condition(double c1, double c2, double c3, double tol = 1e-9) {
  const double c[3] = {c1, c2, c3};
  for (int k = 0; k < 3; ++k) {
    const int i = (k + 1) % 3;
    const int j = (k + 2) % 3;
    if (std::abs(c[i] - c[j]) <= tol && std::abs(c[k] + c[i] * c[j]) <= tol) return true;
  }
  return false;
}

}  // namespace xxcorr
