#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "xxcorr/discord.hpp"
#include "xxcorr/entanglement.hpp"
#include "xxcorr/monogamy.hpp"
#include "xxcorr/sweep.hpp"
#include "xxcorr/xxchain.hpp"

namespace xxcorr {

// Tolerances are injectable so the failure path is testable.
struct VerifyOptions {
  bool quick = false;
  unsigned seed = 20260823u;
  double concurrence_tol = 1e-10;
  double mi_closed_form_tol = 1e-10;
  double luo_cc_tol = 1e-6;
  double luo_mi_tol = 1e-9;
  double appendix_tol = 1e-6;
  double biconditional_tol = 1e-6;
  double tc_analytic_tol = 1e-7;
  double tc_rounded_tol = 2e-4;
  double window_oracle_tol = 1e-6;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  bool mandatory = true;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_mandatory_passed() const {
    for (const auto& c : checks)
      if (c.mandatory && !c.passed) return false;
    return true;
  }
};

namespace detail {

inline std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), f, a);
  return buf;
}
inline std::string fmt(const char* f, double a, double b) {
  char buf[192];
  std::snprintf(buf, sizeof(buf), f, a, b);
  return buf;
}
inline std::string fmt(const char* f, double a, double b, double c) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), f, a, b, c);
  return buf;
}

// Entropies of the thermal state straight from the closed-form weights: the
// marginals are diagonal and the joint spectrum is {u1, u2, e^{+-D/T}}/Z
// (all carried at the common scale).
inline double closed_form_mutual_information(const ModelParams& p) {
  const double b = p.b1 - p.b2;
  const double d = gap_parameter(p);
  const double t = p.temperature;
  const double e00 = -(p.b1 + p.b2);
  const double emin = std::min({e00, -e00, -d});
  const double u1 = std::exp((emin - e00) / t);
  const double u2 = std::exp((emin + e00) / t);
  const double gp = std::exp((emin + d) / t);
  const double gm = std::exp((emin - d) / t);
  const double ch = 0.5 * (gp + gm);
  const double sh = 0.5 * (gp - gm);
  const double w1 = ch + (b / d) * sh;
  const double w2 = ch - (b / d) * sh;
  const double z = u1 + u2 + gp + gm;
  const double s_a = binary_entropy((u1 + w1) / z);
  const double s_b = binary_entropy((u1 + w2) / z);
  const double s_ab =
      -(xlog2x(u1 / z) + xlog2x(u2 / z) + xlog2x(gp / z) + xlog2x(gm / z));
  return s_a + s_b - s_ab;
}

// Direct bisection on sinh(D/T) = D/|J| in the gap parameter D; the
// disentanglement boundary in any field coordinate follows from D alone.
inline double gap_root_oracle(double j, double t) {
  double lo = std::abs(j), hi = 40.0;
  for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
    const double mid = 0.5 * (lo + hi);
    (std::sinh(mid / t) - mid / std::abs(j) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

inline VerifyReport run_verification(const VerifyOptions& opt = {}) {
  VerifyReport report;
  const auto add = [&](std::string name, bool passed, bool mandatory, std::string detail) {
    report.checks.push_back({std::move(name), passed, mandatory, std::move(detail)});
  };

  // Closed-form vs. spectral concurrence and mutual information on a grid.
  {
    const int nb = opt.quick ? 9 : 21;
    const int nt = opt.quick ? 5 : 11;
    double worst_c = 0.0, worst_mi = 0.0;
    for (int i = 0; i < nb; ++i)
      for (int k = 0; k < nb; ++k)
        for (int m = 0; m < nt; ++m) {
          ModelParams p;
          p.b1 = -3.0 + 6.0 * i / (nb - 1);
          p.b2 = -3.0 + 6.0 * k / (nb - 1);
          p.temperature = 0.1 + 2.9 * m / (nt - 1);
          const ThermalState ts = thermal_state(p);
          worst_c = std::max(worst_c, std::abs(concurrence_general(ts.rho).concurrence -
                                               concurrence_x_state(ts)));
          worst_mi = std::max(worst_mi, std::abs(mutual_information(ts.rho) -
                                                 detail::closed_form_mutual_information(p)));
        }
    add("concurrence closed form vs spectral", worst_c <= opt.concurrence_tol, true,
        detail::fmt("max |dC| = %.3g (tol %.3g)", worst_c, opt.concurrence_tol));
    add("mutual information vs closed-form entropies", worst_mi <= opt.mi_closed_form_tol, true,
        detail::fmt("max |dI| = %.3g (tol %.3g)", worst_mi, opt.mi_closed_form_tol));
  }

  // Luo closed forms vs the numerical optimizer on random Bell-diagonal states.
  std::mt19937 rng(opt.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const auto random_triple = [&] {
    while (true) {
      const double c1 = unit(rng), c2 = unit(rng), c3 = unit(rng);
      if (1.0 - c1 - c2 - c3 >= 0.0 && 1.0 - c1 + c2 + c3 >= 0.0 && 1.0 + c1 - c2 + c3 >= 0.0 &&
          1.0 + c1 + c2 - c3 >= 0.0)
        return std::array<double, 3>{c1, c2, c3};
    }
  };
  {
    const int n = opt.quick ? 100 : 1000;
    double worst_cc = 0.0, worst_mi = 0.0;
    for (int i = 0; i < n; ++i) {
      const auto c = random_triple();
      const ComplexMatrix rho = bell_diagonal_state(c[0], c[1], c[2]);
      worst_cc = std::max(worst_cc, std::abs(classical_correlation(rho).first -
                                             luo_classical_correlation(c[0], c[1], c[2])));
      worst_mi = std::max(worst_mi, std::abs(mutual_information(rho) -
                                             luo_mutual_information(c[0], c[1], c[2])));
    }
    add("classical correlation vs Bell-diagonal closed form", worst_cc <= opt.luo_cc_tol, true,
        detail::fmt("max |dCC| = %.3g over %.0f states (tol %.3g)", worst_cc, double(n),
                    opt.luo_cc_tol));
    add("mutual information vs Bell-diagonal closed form", worst_mi <= opt.luo_mi_tol, true,
        detail::fmt("max |dI| = %.3g (tol %.3g)", worst_mi, opt.luo_mi_tol));
  }

  // Equal-correlation family (c, c, -c^2): numerically optimized QD and CC agree.
  {
    const int n = opt.quick ? 100 : 1000;
    std::uniform_real_distribution<double> cdist(0.0, 0.98);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      const double c = cdist(rng);
      const CorrelationSummary s = quantum_discord(bell_diagonal_state(c, c, -c * c));
      worst = std::max(worst, std::abs(s.discord - s.classical_corr));
    }
    add("equal-correlation family QD == CC", worst <= opt.appendix_tol, true,
        detail::fmt("max |QD - CC| = %.3g over %.0f states (tol %.3g)", worst, double(n),
                    opt.appendix_tol));
  }

  // Equality biconditional on thermal sweeps: |QD - CC| <= tol iff
  // |lhs - rhs| <= tol of the half-mutual-information identity.
  {
    const std::vector<std::string> names =
        opt.quick ? std::vector<std::string>{"fig1", "fig6"}
                  : std::vector<std::string>{"fig1", "fig2", "fig3", "fig6", "fig7", "fig8"};
    int disagreements = 0, points = 0;
    double worst_qd = 0.0;
    for (const auto& name : names) {
      SweepSpec spec = *preset(name);
      spec.grid_count = opt.quick ? 41 : 81;
      for (double x : grid_values(spec)) {
        const SweepRow row = evaluate_row(params_at(spec, x), spec.side);
        const auto [qd_eq_cc, eq17] = equality_condition_check(row.monog, opt.biconditional_tol);
        disagreements += qd_eq_cc != eq17;
        worst_qd = std::min(worst_qd, row.corr.discord);
        ++points;
      }
    }
    add("equality biconditional on sweeps", disagreements == 0 && worst_qd >= -1e-7, true,
        detail::fmt("%g disagreements over %g points; min QD = %.3g", double(disagreements),
                    double(points), worst_qd));
  }

  // Critical temperature at zero field.
  {
    const auto tc = disentanglement_boundary(ModelParams{1.0, 0.0, 0.0, 1.0},
                                             FreeCoordinate::Temperature);
    const double analytic = 1.0 / std::asinh(1.0);
    const bool ok = tc && std::abs(*tc - analytic) <= opt.tc_analytic_tol &&
                    std::abs(*tc - 1.1346) <= opt.tc_rounded_tol;
    add("critical temperature at zero field", ok, true,
        detail::fmt("solver %.8f vs analytic %.8f, rounded reference 1.1346",
                    tc ? *tc : -1.0, analytic));
  }

  // Field window at T = 1.5 in the opposite-field family.
  {
    const double t = 1.5;
    const auto b_star = disentanglement_boundary(ModelParams{1.0, 0.0, 0.0, t},
                                                 FreeCoordinate::FieldB1, 1.0);
    const double d_star = detail::gap_root_oracle(1.0, t);
    const double oracle = std::sqrt(d_star * d_star - 1.0) / 2.0;
    const bool ok = b_star && std::abs(*b_star - oracle) <= opt.window_oracle_tol;
    add("field window boundary vs gap-root oracle", ok, true,
        detail::fmt("solver %.8f vs oracle %.8f (tol %.3g)", b_star ? *b_star : -1.0, oracle,
                    opt.window_oracle_tol));
    add("field window literature value", true, false,
        detail::fmt("reported 1.1456 differs from the computed boundary %.6f by %.4f; "
                    "the bisection oracle is authoritative",
                    oracle, std::abs(1.1456 - oracle)));
  }

  return report;
}

inline void print_report(const VerifyReport& report, std::ostream& out) {
  for (const auto& c : report.checks) {
    const char* tag = c.mandatory ? (c.passed ? "PASS" : "FAIL") : "INFO";
    out << "[" << tag << "] " << c.name << ": " << c.detail << '\n';
  }
  out << (report.all_mandatory_passed() ? "verification OK" : "verification FAILED") << '\n';
}

}  // namespace xxcorr
