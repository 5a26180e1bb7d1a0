#pragma once

#include <cmath>
#include <utility>

#include "xxcorr/discord.hpp"
#include "xxcorr/entanglement.hpp"
#include "xxcorr/xxchain.hpp"

namespace xxcorr {

// System-environment correlation bookkeeping under the assumption that the
// two qubits plus environment form a pure state. The AE-side quantities are
// *defined* through the trade-off identities below; no environment state is
// ever constructed:
//   cc_ae = s_a - en_ab        qd_ae = en_ab + en_ae - qd_ab
//   en_ae = s_a - cc_ab        eq17_lhs = i_ab / 2,  eq17_rhs = en_ae + en_ab - qd_ae
struct MonogamyReport {
  double s_a = 0.0;
  double i_ab = 0.0;
  double en_ab = 0.0;
  double qd_ab = 0.0;
  double cc_ab = 0.0;
  double cc_ae = 0.0;
  double en_ae = 0.0;
  double qd_ae = 0.0;
  double eq17_lhs = 0.0;
  double eq17_rhs = 0.0;
};

inline MonogamyReport assemble_monogamy_report(double s_a, double i_ab, double en_ab, double qd_ab,
                                               double cc_ab) {
  MonogamyReport r;
  r.s_a = s_a;
  r.i_ab = i_ab;
  r.en_ab = en_ab;
  r.qd_ab = qd_ab;
  r.cc_ab = cc_ab;
  r.cc_ae = s_a - en_ab;
  r.en_ae = s_a - cc_ab;
  r.qd_ae = en_ab + r.en_ae - qd_ab;
  r.eq17_lhs = 0.5 * i_ab;
  r.eq17_rhs = r.en_ae + en_ab - r.qd_ae;
  return r;
}

// Full pipeline for one thermal point: entanglement from the X-state closed
// form, correlations from the measurement optimizer on `side`.
inline MonogamyReport monogamy_report(const ModelParams& p, Side side = Side::B) {
  const ThermalState ts = thermal_state(p);
  const CorrelationSummary corr = quantum_discord(ts.rho, side);
  const double en_ab = eof_from_concurrence(concurrence_x_state(ts));
  const double s_a = side == Side::B ? corr.entropy_a : corr.entropy_b;
  return assemble_monogamy_report(s_a, corr.mutual_info, en_ab, corr.discord, corr.classical_corr);
}

// (qd_ab == cc_ab within tol, eq17 lhs == rhs within tol). The two booleans
// agreeing on every state is the executable form of the equality condition.
inline std::pair<bool, bool> equality_condition_check(const MonogamyReport& r, double tol = 1e-6) {
  return {std::abs(r.qd_ab - r.cc_ab) <= tol, std::abs(r.eq17_lhs - r.eq17_rhs) <= tol};
}

}  // namespace xxcorr
