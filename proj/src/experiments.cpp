#include "cvq/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cvq/reduced_state.hpp"

namespace cvq {

CVStateSpec make_state(Family f, const StateParam& param, const Truncation& t) {
  using K = StateParam::Kind;
  switch (param.kind) {
    case K::mean_n:
      return CVStateSpec::from_mean(f, param.value, t);
    case K::p00:
      if (f != Family::tss) throw DomainError("P00 parametrization is only available for TSS");
      return CVStateSpec::tss_from_p00(param.value, t);
    case K::x:
      if (!(param.value >= 0.0)) throw DomainError("x must be real and >= 0");
      if (f == Family::twb) return CVStateSpec::twb(param.value, t);
      if (f == Family::tmc) return CVStateSpec::tmc(param.value, t);
      throw DomainError("TSS is parametrized by P00, not x");
  }
  throw DomainError("unknown state parameter kind");
}

SweepRecord run_point(const PointInputs& in) {
  SweepRecord r;
  r.family = in.family;
  r.arm_a = in.arm_a;
  r.arm_b = in.arm_b;
  r.prep_a = in.prep_a;
  r.prep_b = in.prep_b;
  try {
    const CVStateSpec spec = make_state(in.family, in.state, in.truncation);
    r.state_parameter = spec.state_parameter();
    r.mean_n = mean_photons(spec);
    const FockCoefficients coeffs = coefficients(spec);
    r.n_max = coeffs.n_max();
    const TwoQubitDensity rho =
        reduce_to_qubits(evolve_joint(coeffs, in.prep_a, in.prep_b, in.arm_a, in.arm_b));
    r.trace_err = std::abs(rho.trace() - 1.0);
    r.ent = report(rho, 2.0 * in.truncation.tail_eps + 1e-14);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

AxisSpec AxisSpec::linear(AxisKind kind, double lo, double hi, std::size_t steps) {
  if (steps == 0) throw DomainError("axis needs at least one step");
  AxisSpec a;
  a.kind = kind;
  a.values.reserve(steps);
  if (steps == 1) {
    a.values.push_back(lo);
    return a;
  }
  const double h = (hi - lo) / static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) a.values.push_back(lo + h * static_cast<double>(i));
  a.values.back() = hi;
  return a;
}

AxisSpec AxisSpec::list(AxisKind kind, std::vector<double> values) {
  AxisSpec a;
  a.kind = kind;
  a.values = std::move(values);
  return a;
}

AxisSpec default_g_tau_axis() { return AxisSpec::linear(AxisKind::g_tau, 0.0, 12.0, 600); }
AxisSpec default_mean_n_axis() { return AxisSpec::linear(AxisKind::mean_n, 0.02, 4.0, 200); }

std::size_t Scenario::point_count() const {
  std::size_t n = 1;
  for (const auto& a : axes) n *= a.size();
  return n;
}

namespace {

void apply_axis(PointInputs& p, AxisKind kind, double v, double b_phase) {
  switch (kind) {
    case AxisKind::g_tau:
      p.arm_a.g_tau = v;
      p.arm_b.g_tau = v;
      break;
    case AxisKind::g_tau_a:
      p.arm_a.g_tau = v;
      break;
    case AxisKind::g_tau_b:
      p.arm_b.g_tau = v;
      break;
    case AxisKind::delta_tau:
      p.arm_a.delta_tau = v;
      p.arm_b.delta_tau = v;
      break;
    case AxisKind::delta_tau_a:
      p.arm_a.delta_tau = v;
      break;
    case AxisKind::delta_tau_b:
      p.arm_b.delta_tau = v;
      break;
    case AxisKind::mean_n:
      p.state = {StateParam::Kind::mean_n, v};
      break;
    case AxisKind::p00:
      p.state = {StateParam::Kind::p00, v};
      break;
    case AxisKind::x:
      p.state = {StateParam::Kind::x, v};
      break;
    case AxisKind::b1_sq:
      p.prep_b = QubitPrep::superposition(v, b_phase);
      break;
  }
}

bool is_state_axis(AxisKind k) {
  return k == AxisKind::mean_n || k == AxisKind::p00 || k == AxisKind::x;
}

// Axes that write the same field conflict.
int axis_group(AxisKind k) {
  switch (k) {
    case AxisKind::g_tau:
      return 0b0011;
    case AxisKind::g_tau_a:
      return 0b0001;
    case AxisKind::g_tau_b:
      return 0b0010;
    case AxisKind::delta_tau:
      return 0b1100;
    case AxisKind::delta_tau_a:
      return 0b0100;
    case AxisKind::delta_tau_b:
      return 0b1000;
    case AxisKind::mean_n:
    case AxisKind::p00:
    case AxisKind::x:
      return 0b10000;
    case AxisKind::b1_sq:
      return 0b100000;
  }
  return 0;
}

void check_value(Family f, AxisKind kind, double v, const Truncation& t) {
  if (!std::isfinite(v)) throw DomainError("axis values must be finite");
  switch (kind) {
    case AxisKind::g_tau:
    case AxisKind::g_tau_a:
    case AxisKind::g_tau_b:
      if (v < 0.0) throw DomainError("g_tau must be >= 0");
      break;
    case AxisKind::delta_tau:
    case AxisKind::delta_tau_a:
    case AxisKind::delta_tau_b:
      break;
    case AxisKind::b1_sq:
      if (v < 0.0 || v > 1.0) throw DomainError("|B1|^2 must lie in [0, 1]");
      break;
    case AxisKind::mean_n:
      make_state(f, {StateParam::Kind::mean_n, v}, t);
      break;
    case AxisKind::p00:
      make_state(f, {StateParam::Kind::p00, v}, t);
      break;
    case AxisKind::x:
      make_state(f, {StateParam::Kind::x, v}, t);
      break;
  }
}

}  // namespace

PointInputs Scenario::resolve(std::size_t flat) const {
  PointInputs p = base;
  std::size_t rem = flat;
  for (std::size_t ax = axes.size(); ax-- > 0;) {
    const std::size_t n = axes[ax].size();
    apply_axis(p, axes[ax].kind, axes[ax].values[rem % n], b_phase);
    rem /= n;
  }
  return p;
}

void Scenario::validate() const {
  if (axes.size() > 2) throw DomainError("a scenario sweeps at most two axes");
  base.prep_a.validate();
  base.prep_b.validate();
  base.arm_a.validate();
  base.arm_b.validate();
  int used = 0;
  bool state_swept = false;
  for (const auto& a : axes) {
    if (a.values.empty()) throw DomainError("axis has no values");
    const int g = axis_group(a.kind);
    if (used & g) throw DomainError("two axes sweep the same quantity");
    used |= g;
    state_swept = state_swept || is_state_axis(a.kind);
    for (double v : a.values) check_value(base.family, a.kind, v, base.truncation);
  }
  if (!state_swept) make_state(base.family, base.state, base.truncation);
}

const SweepRecord& SweepTable::at(std::size_t i, std::size_t j) const {
  const std::size_t cols = scenario.axes.size() > 1 ? scenario.axes[1].size() : 1;
  return records.at(i * cols + j);
}

SweepTable sweep(const Scenario& scenario, Execution exec) {
  scenario.validate();
  SweepTable t;
  t.scenario = scenario;
  t.records = exec == Execution::serial ? evaluate_grid_serial(scenario)
                                        : evaluate_grid_parallel(scenario);
  return t;
}

// ---------------------------------------------------------------------------
// Peak refinement

std::vector<PeakRow> refine_peaks(const SweepTable& table, std::size_t top_k) {
  const Scenario& sc = table.scenario;
  if (sc.axes.size() != 2) throw ContractViolation("refine_peaks needs a 2-D sweep");
  std::size_t g_ax = 2, s_ax = 2;
  for (std::size_t k = 0; k < 2; ++k) {
    if (sc.axes[k].kind == AxisKind::g_tau) g_ax = k;
    if (is_state_axis(sc.axes[k].kind)) s_ax = k;
  }
  if (g_ax == 2 || s_ax == 2) {
    throw ContractViolation("refine_peaks needs a (g_tau, state) sweep");
  }

  const std::size_t rows = sc.axes[0].size();
  const std::size_t cols = sc.axes[1].size();
  auto value = [&](std::size_t i, std::size_t j) {
    const SweepRecord& r = table.records[i * cols + j];
    return r.ok() ? r.ent.eof : -std::numeric_limits<double>::infinity();
  };

  struct Cell {
    std::size_t i, j;
    double eof;
  };
  std::vector<Cell> maxima;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double v = value(i, j);
      if (!(v > 0.0)) continue;
      bool is_max = true;
      for (int di = -1; di <= 1 && is_max; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const long ni = static_cast<long>(i) + di;
          const long nj = static_cast<long>(j) + dj;
          if (ni < 0 || nj < 0 || ni >= static_cast<long>(rows) || nj >= static_cast<long>(cols))
            continue;
          const double nv = value(static_cast<std::size_t>(ni), static_cast<std::size_t>(nj));
          // Plateaus keep only their first cell in row-major order.
          const bool earlier = di < 0 || (di == 0 && dj < 0);
          if (earlier ? !(v > nv) : !(v >= nv)) {
            is_max = false;
            break;
          }
        }
      }
      if (is_max) maxima.push_back({i, j, v});
    }
  }
  std::stable_sort(maxima.begin(), maxima.end(),
                   [](const Cell& a, const Cell& b) { return a.eof > b.eof; });
  if (maxima.size() > top_k) maxima.resize(top_k);

  const AxisSpec& g_axis = sc.axes[g_ax];
  const AxisSpec& s_axis = sc.axes[s_ax];
  auto spacing = [](const AxisSpec& a) {
    if (a.size() < 2) return 0.0;
    return (a.values.back() - a.values.front()) / static_cast<double>(a.size() - 1);
  };
  const double hg = std::abs(spacing(g_axis));
  const double hs = std::abs(spacing(s_axis));
  const auto [g_lo, g_hi] = std::minmax_element(g_axis.values.begin(), g_axis.values.end());
  const auto [s_lo, s_hi] = std::minmax_element(s_axis.values.begin(), s_axis.values.end());

  constexpr int kRounds = 3;
  constexpr double kTol = 1e-3;

  std::vector<PeakRow> out;
  for (const Cell& cell : maxima) {
    const std::size_t gi = g_ax == 0 ? cell.i : cell.j;
    const std::size_t si = s_ax == 0 ? cell.i : cell.j;
    PointInputs p = sc.resolve(cell.i * cols + cell.j);
    double g = g_axis.values[gi];
    double s = s_axis.values[si];

    auto eval = [&](double gv, double sv) {
      PointInputs q = p;
      apply_axis(q, AxisKind::g_tau, gv, sc.b_phase);
      apply_axis(q, s_axis.kind, sv, sc.b_phase);
      const SweepRecord r = run_point(q);
      return r.ok() ? r.ent.eof : -1.0;
    };

    double best = cell.eof;
    for (int round = 0; round < kRounds; ++round) {
      if (hg > 0.0) {
        const double lo = std::max(*g_lo, g - hg), hi = std::min(*g_hi, g + hg);
        const double cand = golden_section_max([&](double x) { return eval(x, s); }, lo, hi, kTol);
        const double fv = eval(cand, s);
        if (fv > best) best = fv, g = cand;
      }
      if (hs > 0.0) {
        const double lo = std::max(*s_lo, s - hs), hi = std::min(*s_hi, s + hs);
        const double cand = golden_section_max([&](double x) { return eval(g, x); }, lo, hi, kTol);
        const double fv = eval(g, cand);
        if (fv > best) best = fv, s = cand;
      }
    }

    apply_axis(p, AxisKind::g_tau, g, sc.b_phase);
    apply_axis(p, s_axis.kind, s, sc.b_phase);
    const CVStateSpec spec = make_state(p.family, p.state, p.truncation);
    const auto dist = photon_distribution(coefficients(spec));

    PeakRow row;
    row.g_tau = g;
    row.state_value = s;
    row.eof = best;
    row.p00 = dist.empty() ? 0.0 : dist[0];
    row.p11 = dist.size() > 1 ? dist[1] : 0.0;
    row.coarse_eof = cell.eof;
    out.push_back(row);
  }
  std::sort(out.begin(), out.end(), [](const PeakRow& a, const PeakRow& b) { return a.g_tau < b.g_tau; });
  return out;
}

// ---------------------------------------------------------------------------
// Scans

namespace {

Scenario scan_base(Family f, const AxisSpec& n_axis) {
  Scenario sc;
  sc.base.family = f;
  sc.base.prep_a = QubitPrep::ground();
  sc.base.prep_b = QubitPrep::ground();
  if (!is_state_axis(n_axis.kind)) throw DomainError("scan abscissa must be a state axis");
  return sc;
}

}  // namespace

SweepTable detuning_scan(Family f, double g_tau, DetuningMode mode,
                         const std::vector<double>& delta_values, const AxisSpec& n_axis,
                         Execution exec) {
  Scenario sc = scan_base(f, n_axis);
  sc.base.arm_a = {g_tau, 0.0};
  sc.base.arm_b = {g_tau, 0.0};
  const AxisKind k = mode == DetuningMode::b_only ? AxisKind::delta_tau_b : AxisKind::delta_tau;
  sc.axes = {AxisSpec::list(k, delta_values), n_axis};
  return sweep(sc, exec);
}

SweepTable mismatch_scan(Family f, double g_tau_a, const std::vector<double>& g_tau_b_values,
                         const AxisSpec& n_axis, Execution exec) {
  Scenario sc = scan_base(f, n_axis);
  sc.base.arm_a = {g_tau_a, 0.0};
  sc.base.arm_b = {g_tau_a, 0.0};
  sc.axes = {AxisSpec::list(AxisKind::g_tau_b, g_tau_b_values), n_axis};
  return sweep(sc, exec);
}

SweepTable delayed_injection_scan(Family f, double g_tau, const std::vector<double>& b1_sq_values,
                                  const AxisSpec& n_axis, double b_phase, Execution exec) {
  Scenario sc = scan_base(f, n_axis);
  sc.base.arm_a = {g_tau, 0.0};
  sc.base.arm_b = {g_tau, 0.0};
  sc.b_phase = b_phase;
  sc.axes = {AxisSpec::list(AxisKind::b1_sq, b1_sq_values), n_axis};
  return sweep(sc, exec);
}

double row_peak_eof(const SweepTable& table, std::size_t row) {
  const std::size_t cols = table.scenario.axes.size() > 1 ? table.scenario.axes[1].size() : 1;
  double best = 0.0;
  for (std::size_t j = 0; j < cols; ++j) {
    const SweepRecord& r = table.at(row, j);
    if (r.ok()) best = std::max(best, r.ent.eof);
  }
  return best;
}

double row_peak_position(const SweepTable& table, std::size_t row) {
  const std::size_t cols = table.scenario.axes.size() > 1 ? table.scenario.axes[1].size() : 1;
  double best = -1.0;
  double pos = 0.0;
  for (std::size_t j = 0; j < cols; ++j) {
    const SweepRecord& r = table.at(row, j);
    if (r.ok() && r.ent.eof > best) {
      best = r.ent.eof;
      pos = table.scenario.axes.size() > 1 ? table.scenario.axes[1].values[j] : 0.0;
    }
  }
  return pos;
}

}  // namespace cvq
