#pragma once

// Scenario description, grid evaluation and the derived scans used to map
// entanglement transfer over interaction time, photon number, detuning and
// preparation.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cvq/cv_states.hpp"
#include "cvq/ent_measures.hpp"
#include "cvq/jc_core.hpp"

namespace cvq {

// How the CV state of a scenario is pinned down.
struct StateParam {
  enum class Kind { x, p00, mean_n };
  Kind kind = Kind::mean_n;
  double value = 0.0;
};

// Builds the state for one family from a parameter. TSS accepts p00 or
// mean_n; TWB/TMC accept x (real, >= 0) or mean_n.
CVStateSpec make_state(Family f, const StateParam& param, const Truncation& t = {});

// Fully resolved inputs of one evaluation.
struct PointInputs {
  Family family = Family::tss;
  StateParam state{};
  QubitPrep prep_a = QubitPrep::ground();
  QubitPrep prep_b = QubitPrep::ground();
  ArmParams arm_a{};
  ArmParams arm_b{};
  Truncation truncation{};
};

struct SweepRecord {
  Family family = Family::tss;
  double state_parameter = 0.0;  // P00 for TSS, |x| otherwise
  double mean_n = 0.0;
  ArmParams arm_a{};
  ArmParams arm_b{};
  QubitPrep prep_a{};
  QubitPrep prep_b{};
  EntanglementReport ent{};
  std::size_t n_max = 0;
  double trace_err = 0.0;
  std::string error;  // empty on success

  bool ok() const { return error.empty(); }
};

// coefficients -> evolve_joint -> reduce_to_qubits -> report. Failures are
// captured in SweepRecord::error instead of thrown.
SweepRecord run_point(const PointInputs& in);

// Quantities a scenario axis can sweep.
enum class AxisKind {
  g_tau,          // both arms
  g_tau_a,
  g_tau_b,
  delta_tau,      // both arms
  delta_tau_a,
  delta_tau_b,
  mean_n,
  p00,
  x,
  b1_sq,          // |B1|^2 of qubit B, amplitudes sqrt(b1_sq), sqrt(1-b1_sq) e^{i phase}
};

struct AxisSpec {
  AxisKind kind = AxisKind::g_tau;
  std::vector<double> values;

  // `steps` evenly spaced points from lo to hi inclusive (steps == 1 gives lo).
  static AxisSpec linear(AxisKind kind, double lo, double hi, std::size_t steps);
  static AxisSpec list(AxisKind kind, std::vector<double> values);

  std::size_t size() const { return values.size(); }
};

struct Scenario {
  PointInputs base{};
  double b_phase = 0.0;  // relative phase used by the b1_sq axis
  std::vector<AxisSpec> axes;  // up to two; the first is the slow index

  std::size_t point_count() const;
  // Inputs at row-major grid position `flat`.
  PointInputs resolve(std::size_t flat) const;
  // Throws DomainError on empty/duplicate axes or values outside the
  // physical domain (negative g_tau or mean_n, P00 or |B1|^2 outside [0,1], ...).
  void validate() const;
};

struct SweepTable {
  Scenario scenario;
  std::vector<SweepRecord> records;  // row-major over scenario.axes

  const SweepRecord& at(std::size_t i, std::size_t j) const;
};

enum class Execution { serial, parallel };

// Evaluates every grid point. Parallel execution uses OpenMP; results are
// bit-identical to the serial path and ordered by grid index either way.
SweepTable sweep(const Scenario& scenario, Execution exec = Execution::parallel);

// Grid-evaluation kernels behind sweep(): the serial reference and the
// OpenMP version.
std::vector<SweepRecord> evaluate_grid_serial(const Scenario& scenario);
std::vector<SweepRecord> evaluate_grid_parallel(const Scenario& scenario);

// Default axes: g_tau in [0, 12] (600 points) and <N> in [0.02, 4]
// (200 points), or P00 in [0, 1] for TSS.
AxisSpec default_g_tau_axis();
AxisSpec default_mean_n_axis();

struct PeakRow {
  double g_tau = 0.0;
  double state_value = 0.0;  // <N> (or P00 for a TSS map) at the peak
  double eof = 0.0;
  double p00 = 0.0;
  double p11 = 0.0;
  double coarse_eof = 0.0;   // grid value the refinement started from
};

// Grid-local maxima of eof over a 2-D (g_tau, mean_n | p00) table, the top_k
// largest refined by coordinate-descent golden-section search (3 rounds,
// 1e-3 resolution in both coordinates). Rows are returned in ascending g_tau.
std::vector<PeakRow> refine_peaks(const SweepTable& table, std::size_t top_k);

// Maximizes f on [lo, hi] by golden-section search to width tol.
// Returns the abscissa of the best point evaluated.
template <class F>
double golden_section_max(F&& f, double lo, double hi, double tol);

enum class DetuningMode { b_only, both_equal };

// eof(<N>) curves, one per detuning value, both qubits ground, equal g_tau.
SweepTable detuning_scan(Family f, double g_tau, DetuningMode mode,
                         const std::vector<double>& delta_values, const AxisSpec& n_axis,
                         Execution exec = Execution::parallel);

// eof(<N>) curves, one per g_tau_B, at resonance with both qubits ground.
SweepTable mismatch_scan(Family f, double g_tau_a, const std::vector<double>& g_tau_b_values,
                         const AxisSpec& n_axis, Execution exec = Execution::parallel);

// eof(<N>) curves, one per |B1|^2, qubit A ground and B in a superposition.
SweepTable delayed_injection_scan(Family f, double g_tau, const std::vector<double>& b1_sq_values,
                                  const AxisSpec& n_axis, double b_phase = 0.0,
                                  Execution exec = Execution::parallel);

// Largest eof over the records of row `row` (first axis index) of a 2-D table.
double row_peak_eof(const SweepTable& table, std::size_t row);
// Second-axis value where row `row` peaks.
double row_peak_position(const SweepTable& table, std::size_t row);

// CSV with header
// family,P00_or_x,mean_N,g_tau_A,g_tau_B,delta_tau_A,delta_tau_B,A1,A2,B1,B2,
// eof,concurrence,lambda4_pt,x_form,n_max,trace_err,error
void write_csv(const std::vector<SweepRecord>& records, std::ostream& out);
inline void write_csv(const SweepTable& table, std::ostream& out) { write_csv(table.records, out); }
// Peak table: family,g_tau_max,state_max,eof_max,P00,P11
void write_peaks_csv(Family f, const std::vector<PeakRow>& rows, std::ostream& out);

extern const char* const kCsvHeader;
extern const char* const kPeaksCsvHeader;

// %.17g text for a double (round-trips exactly); zero prints as "0".
std::string format_number(double v);

// ---------------------------------------------------------------------------

template <class F>
double golden_section_max(F&& f, double lo, double hi, double tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  double best_x = fc >= fd ? c : d;
  double best_f = fc >= fd ? fc : fd;
  while (b - a > tol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      if (fc > best_f) best_f = fc, best_x = c;
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      if (fd > best_f) best_f = fd, best_x = d;
    }
  }
  return best_x;
}

}  // namespace cvq
