#pragma once

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "xxcorr/discord.hpp"
#include "xxcorr/entanglement.hpp"
#include "xxcorr/monogamy.hpp"
#include "xxcorr/xxchain.hpp"

namespace xxcorr {

enum class SweepMode { FieldSweep, TempSweep };

// One-dimensional parameter sweep. In FieldSweep mode b1 runs over the grid
// with b2 = b1 (uniform) or b2 = -field_ratio_a * b1, at fixed temperature.
// In TempSweep mode the temperature runs over the grid at fixed b1 (b2 tied
// the same way).
struct SweepSpec {
  SweepMode mode = SweepMode::FieldSweep;
  double j = 1.0;
  double field_ratio_a = 1.0;
  bool uniform = false;
  double temperature = 1.0;  // fixed value for field sweeps
  double b1 = 1.0;           // fixed value for temperature sweeps
  double grid_start = -4.0;
  double grid_stop = 4.0;
  int grid_count = 401;
  Side side = Side::B;
  std::string output_path;
};

inline void validate(const SweepSpec& s) {
  if (s.grid_count < 2) throw std::invalid_argument("SweepSpec: grid count must be >= 2");
  if (!(s.grid_start < s.grid_stop))
    throw std::invalid_argument("SweepSpec: grid start must be < stop");
  if (s.j == 0.0) throw std::invalid_argument("SweepSpec: j must be nonzero");
  if (s.mode == SweepMode::FieldSweep && !(s.temperature > 0.0))
    throw std::invalid_argument("SweepSpec: temperature must be > 0");
  if (s.mode == SweepMode::TempSweep && !(s.grid_start > 0.0))
    throw std::invalid_argument("SweepSpec: temperature grid must be positive");
}

inline std::vector<double> grid_values(const SweepSpec& s) {
  std::vector<double> xs(s.grid_count);
  for (int k = 0; k < s.grid_count; ++k)
    xs[k] = s.grid_start + (s.grid_stop - s.grid_start) * (static_cast<double>(k) / (s.grid_count - 1));
  return xs;
}

inline ModelParams params_at(const SweepSpec& s, double x) {
  ModelParams p;
  p.j = s.j;
  if (s.mode == SweepMode::FieldSweep) {
    p.b1 = x;
    p.temperature = s.temperature;
  } else {
    p.b1 = s.b1;
    p.temperature = x;
  }
  p.b2 = s.uniform ? p.b1 : -s.field_ratio_a * p.b1;
  return p;
}

struct SweepRow {
  ModelParams params;
  Side side = Side::B;
  double concurrence = 0.0;
  double eof = 0.0;
  CorrelationSummary corr;
  MonogamyReport monog;
};

inline SweepRow evaluate_row(const ModelParams& p, Side side) {
  SweepRow row;
  row.params = p;
  row.side = side;
  const ThermalState ts = thermal_state(p);
  row.corr = quantum_discord(ts.rho, side);
  row.concurrence = concurrence_x_state(ts);
  row.eof = eof_from_concurrence(row.concurrence);
  const double s_a = side == Side::B ? row.corr.entropy_a : row.corr.entropy_b;
  row.monog = assemble_monogamy_report(s_a, row.corr.mutual_info, row.eof, row.corr.discord,
                                       row.corr.classical_corr);
  return row;
}

inline std::vector<SweepRow> compute_sweep(const SweepSpec& s) {
  validate(s);
  std::vector<SweepRow> rows;
  rows.reserve(s.grid_count);
  for (double x : grid_values(s)) rows.push_back(evaluate_row(params_at(s, x), s.side));
  return rows;
}

inline std::string csv_header() {
  return "b1,b2,temperature,j,side,concurrence,eof,entropy_a,entropy_b,entropy_ab,"
         "mutual_info,classical_corr,discord,theta_opt,phi_opt,s_a,cc_ae,en_ae,qd_ae,"
         "eq17_lhs,eq17_rhs";
}

namespace detail {
inline std::string csv_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x + 0.0);  // print -0.0 as 0
  return buf;
}
}  // namespace detail

inline std::string csv_line(const SweepRow& r) {
  using detail::csv_number;
  std::string line;
  const double cols[4] = {r.params.b1, r.params.b2, r.params.temperature, r.params.j};
  for (double c : cols) {
    line += csv_number(c);
    line += ',';
  }
  line += r.side == Side::B ? "B" : "A";
  const double rest[16] = {r.concurrence,
                           r.eof,
                           r.corr.entropy_a,
                           r.corr.entropy_b,
                           r.corr.entropy_ab,
                           r.corr.mutual_info,
                           r.corr.classical_corr,
                           r.corr.discord,
                           r.corr.optimal_measurement.theta,
                           r.corr.optimal_measurement.phi,
                           r.monog.s_a,
                           r.monog.cc_ae,
                           r.monog.en_ae,
                           r.monog.qd_ae,
                           r.monog.eq17_lhs,
                           r.monog.eq17_rhs};
  for (double c : rest) {
    line += ',';
    line += csv_number(c);
  }
  return line;
}

inline void write_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  out << csv_header() << '\n';
  for (const auto& r : rows) out << csv_line(r) << '\n';
}

// Computes the sweep and writes the CSV to spec.output_path.
inline void run_sweep(const SweepSpec& s) {
  validate(s);
  if (s.output_path.empty()) throw std::invalid_argument("run_sweep: output path is empty");
  const std::vector<SweepRow> rows = compute_sweep(s);
  std::ofstream out(s.output_path);
  if (!out) throw std::runtime_error("run_sweep: cannot open output file " + s.output_path);
  write_csv(rows, out);
  out.flush();
  if (!out) throw std::runtime_error("run_sweep: write failed for " + s.output_path);
}

// Named figure presets. Field presets sweep B1 over [-4, 4] with 401 points;
// temperature presets sweep T over [0.01, 3] with 300 points.
inline std::vector<std::string> preset_names() {
  return {"fig1",  "fig2",  "fig3",  "fig4a", "fig4b", "fig5a", "fig5b", "fig6",
          "fig7",  "fig8",  "fig9a", "fig9b", "fig10", "fig11", "fig12", "fig13"};
}

inline std::optional<SweepSpec> preset(const std::string& name) {
  SweepSpec s;
  const auto field = [&](double ratio, bool uniform, double t) {
    s.mode = SweepMode::FieldSweep;
    s.field_ratio_a = ratio;
    s.uniform = uniform;
    s.temperature = t;
    s.grid_start = -4.0;
    s.grid_stop = 4.0;
    s.grid_count = 401;
  };
  const auto temp = [&](double b1, bool uniform) {
    s.mode = SweepMode::TempSweep;
    s.b1 = b1;
    s.field_ratio_a = 1.0;
    s.uniform = uniform;
    s.grid_start = 0.01;
    s.grid_stop = 3.0;
    s.grid_count = 300;
  };
  if (name == "fig1") field(1.0, false, 0.2);
  else if (name == "fig2" || name == "fig10") field(1.0, false, 0.9);
  else if (name == "fig3" || name == "fig12") field(1.0, false, 1.5);
  else if (name == "fig4a" || name == "fig11" || name == "fig13") temp(1.0, false);
  else if (name == "fig4b") temp(2.0, false);
  else if (name == "fig5a") field(2.0, false, 1.5);
  else if (name == "fig5b") field(0.5, false, 1.5);
  else if (name == "fig6") field(1.0, true, 0.2);
  else if (name == "fig7") field(1.0, true, 0.9);
  else if (name == "fig8") field(1.0, true, 1.5);
  else if (name == "fig9a") temp(1.0, true);
  else if (name == "fig9b") temp(2.0, true);
  else return std::nullopt;
  s.output_path = name + ".csv";
  return s;
}

}  // namespace xxcorr
