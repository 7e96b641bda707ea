#include "cvq/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "cvq/experiments.hpp"

namespace cvq::cli {

namespace {

struct StateFlags {
  std::optional<double> x, p00, mean_n;
};

struct GridFlags {
  double g_min = 0.0, g_max = 12.0;
  std::size_t g_steps = 600;
  std::optional<double> s_min, s_max;
  std::size_t s_steps = 200;
  std::string axis;  // mean-n | p00 | x; empty picks the family default
};

struct NAxisFlags {
  double lo = 0.02, hi = 4.0;
  std::size_t steps = 200;
};

struct Options {
  std::string family = "tss";
  StateFlags state;
  std::string prep_a = "ground", prep_b = "ground";
  double phase_b = 0.0;
  std::optional<double> g_tau, g_tau_a, g_tau_b;
  std::optional<double> delta_tau;
  double delta_tau_a = 0.0, delta_tau_b = 0.0;
  double tail_eps = kDefaultTailEps;
  std::size_t max_n = kDefaultMaxN;
  std::string out_path;
  bool serial = false;
  GridFlags grid;
  NAxisFlags n_axis;
  std::size_t top_k = 4;
  std::string mode = "b-only";
  std::vector<double> deltas{0, 1, 2, 3, 4, 5};
  std::vector<double> g_tau_b_values;
  std::vector<double> b1_sq_values{1.0, 0.75, 0.5, 0.25, 0.0};
};

// Bad input detected after parsing; reported with exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

QubitPrep parse_prep(const std::string& s, double phase) {
  if (s == "ground") return QubitPrep::ground();
  if (s == "excited") return QubitPrep::excited();
  const std::string tag = "super:";
  if (s.rfind(tag, 0) == 0) {
    std::size_t used = 0;
    double b1_sq = 0.0;
    try {
      b1_sq = std::stod(s.substr(tag.size()), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() - tag.size()) throw UsageError("bad prep selector: " + s);
    if (!(b1_sq >= 0.0 && b1_sq <= 1.0)) throw DomainError("|B1|^2 must lie in [0, 1]");
    return QubitPrep::superposition(b1_sq, phase);
  }
  throw UsageError("prep must be ground, excited or super:<b1_sq>, got " + s);
}

Truncation truncation(const Options& o) {
  if (!(o.tail_eps >= 1e-15 && o.tail_eps < 1.0)) {
    throw DomainError("--tail-eps must lie in [1e-15, 1)");
  }
  return {o.tail_eps, o.max_n};
}

StateParam state_param(const StateFlags& s, bool required) {
  if (s.x) return {StateParam::Kind::x, *s.x};
  if (s.p00) return {StateParam::Kind::p00, *s.p00};
  if (s.mean_n) return {StateParam::Kind::mean_n, *s.mean_n};
  if (required) throw UsageError("one of --x, --p00, --mean-n is required");
  return {};
}

// Per-arm value: the arm flag wins over the shared flag, which wins over fallback.
double arm_value(const std::optional<double>& arm, const std::optional<double>& shared,
                 double fallback) {
  return arm ? *arm : shared ? *shared : fallback;
}

PointInputs base_inputs(const Options& o, bool need_state) {
  PointInputs p;
  p.family = parse_family(o.family);
  p.state = state_param(o.state, need_state);
  p.prep_a = parse_prep(o.prep_a, 0.0);
  p.prep_b = parse_prep(o.prep_b, o.phase_b);
  p.arm_a = {arm_value(o.g_tau_a, o.g_tau, 0.0),
             o.delta_tau ? *o.delta_tau : o.delta_tau_a};
  p.arm_b = {arm_value(o.g_tau_b, o.g_tau, 0.0),
             o.delta_tau ? *o.delta_tau : o.delta_tau_b};
  p.truncation = truncation(o);
  return p;
}

Execution execution(const Options& o) { return o.serial ? Execution::serial : Execution::parallel; }

AxisSpec n_axis(const NAxisFlags& f) {
  if (f.steps == 0) throw UsageError("--n-steps must be positive");
  return AxisSpec::linear(AxisKind::mean_n, f.lo, f.hi, f.steps);
}

Scenario map_scenario(const Options& o) {
  Scenario sc;
  sc.base = base_inputs(o, false);
  sc.b_phase = o.phase_b;
  const GridFlags& g = o.grid;
  if (g.g_steps == 0 || g.s_steps == 0) throw UsageError("grid steps must be positive");
  std::string axis = g.axis;
  if (axis.empty()) axis = sc.base.family == Family::tss ? "p00" : "mean-n";
  AxisKind kind;
  double lo, hi;
  if (axis == "mean-n") {
    kind = AxisKind::mean_n;
    lo = 0.02, hi = 4.0;
  } else if (axis == "p00") {
    kind = AxisKind::p00;
    lo = 0.0, hi = 1.0;
  } else if (axis == "x") {
    kind = AxisKind::x;
    lo = 0.0, hi = sc.base.family == Family::twb ? 0.9 : 2.0;
  } else {
    throw UsageError("--state-axis must be mean-n, p00 or x");
  }
  sc.axes.push_back(AxisSpec::linear(AxisKind::g_tau, g.g_min, g.g_max, g.g_steps));
  sc.axes.push_back(AxisSpec::linear(kind, g.s_min.value_or(lo), g.s_max.value_or(hi), g.s_steps));
  return sc;
}

void print_state(const Options& o, std::ostream& out) {
  const Family f = parse_family(o.family);
  const CVStateSpec spec = make_state(f, state_param(o.state, true), truncation(o));
  const FockCoefficients c = coefficients(spec);
  const std::vector<double> p = photon_distribution(c);
  out << "family=" << to_string(f) << '\n'
      << "P00_or_x=" << format_number(spec.state_parameter()) << '\n'
      << "mean_N=" << format_number(mean_photons(spec)) << '\n'
      << "S_vn=" << format_number(von_neumann_entropy(c)) << '\n'
      << "n_max=" << c.n_max() << '\n'
      << "tail=" << format_number(c.tail_bound) << '\n';
  for (std::size_t n = 0; n < p.size(); ++n) out << "P_" << n << n << '=' << format_number(p[n]) << '\n';
}

void add_state_flags(CLI::App* cmd, Options& o) {
  auto* x = cmd->add_option("--x", o.state.x, "Family parameter |x| (TWB, TMC)");
  auto* p = cmd->add_option("--p00", o.state.p00, "Vacuum weight P00 (TSS)");
  auto* n = cmd->add_option("--mean-n", o.state.mean_n, "Total mean photon number <N>");
  x->excludes(p)->excludes(n);
  p->excludes(n);
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "State family: tss, twb or tmc")
      ->check(CLI::IsMember({"tss", "twb", "tmc"}))
      ->capture_default_str();
  cmd->add_option("--tail-eps", o.tail_eps, "Fock truncation tail bound")->capture_default_str();
  cmd->add_option("--max-n", o.max_n, "Largest admissible Fock cutoff")->capture_default_str();
  cmd->add_option("--out", o.out_path, "Output file (default: standard output)");
}

void add_preps(CLI::App* cmd, Options& o) {
  cmd->add_option("--prep-a", o.prep_a, "Qubit A: ground, excited or super:<b1_sq>")
      ->capture_default_str();
  cmd->add_option("--prep-b", o.prep_b, "Qubit B: ground, excited or super:<b1_sq>")
      ->capture_default_str();
  cmd->add_option("--phase-b", o.phase_b, "Relative phase of a super: prep on qubit B")
      ->capture_default_str();
}

void add_arms(CLI::App* cmd, Options& o) {
  cmd->add_option("--gtau", o.g_tau, "g*tau for both arms");
  cmd->add_option("--gtau-a", o.g_tau_a, "g*tau of arm A");
  cmd->add_option("--gtau-b", o.g_tau_b, "g*tau of arm B");
  auto* d = cmd->add_option("--delta-tau", o.delta_tau, "Delta*tau for both arms");
  cmd->add_option("--delta-tau-a", o.delta_tau_a, "Delta*tau of arm A")->excludes(d);
  cmd->add_option("--delta-tau-b", o.delta_tau_b, "Delta*tau of arm B")->excludes(d);
}

void add_detuning(CLI::App* cmd, Options& o) {
  auto* d = cmd->add_option("--delta-tau", o.delta_tau, "Delta*tau for both arms");
  cmd->add_option("--delta-tau-a", o.delta_tau_a, "Delta*tau of arm A")->excludes(d);
  cmd->add_option("--delta-tau-b", o.delta_tau_b, "Delta*tau of arm B")->excludes(d);
}

void add_grid(CLI::App* cmd, Options& o) {
  cmd->add_option("--gtau-min", o.grid.g_min, "Smallest g*tau")->capture_default_str();
  cmd->add_option("--gtau-max", o.grid.g_max, "Largest g*tau")->capture_default_str();
  cmd->add_option("--gtau-steps", o.grid.g_steps, "Number of g*tau points")->capture_default_str();
  cmd->add_option("--state-axis", o.grid.axis,
                  "Second axis: mean-n, p00 or x (default p00 for tss, mean-n otherwise)");
  cmd->add_option("--state-min", o.grid.s_min, "Start of the state axis");
  cmd->add_option("--state-max", o.grid.s_max, "End of the state axis");
  cmd->add_option("--state-steps", o.grid.s_steps, "Number of state-axis points")
      ->capture_default_str();
}

void add_n_axis(CLI::App* cmd, Options& o) {
  cmd->add_option("--n-min", o.n_axis.lo, "Smallest <N>")->capture_default_str();
  cmd->add_option("--n-max", o.n_axis.hi, "Largest <N>")->capture_default_str();
  cmd->add_option("--n-steps", o.n_axis.steps, "Number of <N> points")->capture_default_str();
}

void add_serial(CLI::App* cmd, Options& o) {
  cmd->add_flag("--serial", o.serial, "Evaluate the grid on one thread");
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement transfer from two-mode fields to two qubits", "cvq"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");
  Options o;
  std::function<void(std::ostream&)> run;

  auto* state = app.add_subcommand("state", "Photon statistics and entropy of a state");
  add_common(state, o);
  add_state_flags(state, o);
  state->callback([&] { run = [&](std::ostream& s) { print_state(o, s); }; });

  auto* point = app.add_subcommand("point", "Entanglement at a single parameter point");
  add_common(point, o);
  add_state_flags(point, o);
  add_preps(point, o);
  add_arms(point, o);
  point->callback([&] {
    run = [&](std::ostream& s) {
      const PointInputs in = base_inputs(o, true);
      Scenario sc;
      sc.base = in;
      sc.validate();
      const SweepRecord r = run_point(in);
      write_csv(std::vector<SweepRecord>{r}, s);
    };
  });

  auto* sweep_cmd = app.add_subcommand("sweep", "Entanglement map over g*tau and the state axis");
  add_common(sweep_cmd, o);
  add_preps(sweep_cmd, o);
  add_detuning(sweep_cmd, o);
  add_grid(sweep_cmd, o);
  add_serial(sweep_cmd, o);
  sweep_cmd->callback([&] {
    run = [&](std::ostream& s) { write_csv(sweep(map_scenario(o), execution(o)), s); };
  });

  auto* peaks = app.add_subcommand("peaks", "Refined maxima of the entanglement map");
  add_common(peaks, o);
  add_preps(peaks, o);
  add_detuning(peaks, o);
  add_grid(peaks, o);
  add_serial(peaks, o);
  peaks->add_option("--top-k", o.top_k, "Number of maxima to refine")->capture_default_str();
  peaks->callback([&] {
    run = [&](std::ostream& s) {
      const Scenario sc = map_scenario(o);
      write_peaks_csv(sc.base.family, refine_peaks(sweep(sc, execution(o)), o.top_k), s);
    };
  });

  auto* det = app.add_subcommand("scan-detuning", "eof(<N>) for several detunings");
  add_common(det, o);
  det->add_option("--gtau", o.g_tau, "g*tau for both arms")->required();
  det->add_option("--mode", o.mode, "b-only or both-equal")
      ->check(CLI::IsMember({"b-only", "both-equal"}))
      ->capture_default_str();
  det->add_option("--delta-values", o.deltas, "Comma-separated Delta*tau values")
      ->delimiter(',')
      ->capture_default_str();
  add_n_axis(det, o);
  add_serial(det, o);
  det->callback([&] {
    run = [&](std::ostream& s) {
      const DetuningMode m = o.mode == "b-only" ? DetuningMode::b_only : DetuningMode::both_equal;
      write_csv(detuning_scan(parse_family(o.family), *o.g_tau, m, o.deltas, n_axis(o.n_axis),
                              execution(o)),
                s);
    };
  });

  auto* times = app.add_subcommand("scan-times", "eof(<N>) for several g*tau of arm B");
  add_common(times, o);
  times->add_option("--gtau-a", o.g_tau_a, "g*tau of arm A")->required();
  times->add_option("--gtau-b-values", o.g_tau_b_values, "Comma-separated g*tau values of arm B")
      ->delimiter(',')
      ->required();
  add_n_axis(times, o);
  add_serial(times, o);
  times->callback([&] {
    run = [&](std::ostream& s) {
      write_csv(mismatch_scan(parse_family(o.family), *o.g_tau_a, o.g_tau_b_values,
                              n_axis(o.n_axis), execution(o)),
                s);
    };
  });

  auto* delayed = app.add_subcommand("scan-delayed", "eof(<N>) with qubit B in a superposition");
  add_common(delayed, o);
  delayed->add_option("--gtau", o.g_tau, "g*tau for both arms")->required();
  delayed->add_option("--b1-sq-values", o.b1_sq_values, "Comma-separated |B1|^2 values")
      ->delimiter(',')
      ->capture_default_str();
  delayed->add_option("--phase-b", o.phase_b, "Relative phase of qubit B")->capture_default_str();
  add_n_axis(delayed, o);
  add_serial(delayed, o);
  delayed->callback([&] {
    run = [&](std::ostream& s) {
      write_csv(delayed_injection_scan(parse_family(o.family), *o.g_tau, o.b1_sq_values,
                                       n_axis(o.n_axis), o.phase_b, execution(o)),
                s);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return 2;
  }

  std::ostringstream buffer;
  try {
    run(buffer);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const BracketError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  if (o.out_path.empty()) {
    out << buffer.str();
    out.flush();
    return out ? 0 : 1;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  file << buffer.str();
  file.close();
  if (!file) {
    err << "error: cannot write " << o.out_path << '\n';
    return 1;
  }
  return 0;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"cvq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cvq::cli
