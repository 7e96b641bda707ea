// Acceptance checks. Prints one PASS/FAIL line per criterion followed by
// indented detail lines; exits non-zero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cvq/experiments.hpp"
#include "cvq/reduced_state.hpp"

using namespace cvq;
using std::numbers::pi;

namespace {

int failures = 0;

struct Criterion {
  int id;
  std::string name;
  bool ok = true;
  std::vector<std::string> details;

  void check(bool cond, const std::string& what) {
    ok = ok && cond;
    details.push_back(std::string(cond ? "ok   " : "MISS ") + what);
  }
  ~Criterion() {
    std::printf("%s [%d] %s\n", ok ? "PASS" : "FAIL", id, name.c_str());
    for (const auto& d : details) std::printf("       %s\n", d.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

struct TableRow {
  double g, n, eof, p00, p11;
};

void table_criterion(int id, const char* name, Family f, const std::vector<TableRow>& ref) {
  Criterion c{id, name};
  Scenario sc;
  sc.base.family = f;
  sc.axes = {default_g_tau_axis(), default_mean_n_axis()};
  const auto rows = refine_peaks(sweep(sc), 4);
  c.check(rows.size() == ref.size(), fmt("%.0f peak rows", static_cast<double>(rows.size())));
  for (std::size_t k = 0; k < std::min(rows.size(), ref.size()); ++k) {
    const PeakRow& r = rows[k];
    const TableRow& t = ref[k];
    c.check(std::abs(r.g_tau - t.g) <= 0.02, fmt("row %.0f g_tau %.4f vs %.2f (+-0.02)", k + 1.0, r.g_tau, t.g));
    c.check(std::abs(r.state_value - t.n) <= 0.03,
            fmt("row %.0f <N> %.4f vs %.2f (+-0.03)", k + 1.0, r.state_value, t.n));
    c.check(std::abs(r.eof - t.eof) <= 0.01, fmt("row %.0f eof %.4f vs %.2f (+-0.01)", k + 1.0, r.eof, t.eof));
    c.check(std::abs(r.p00 - t.p00) <= 0.01, fmt("row %.0f P00 %.4f vs %.2f (+-0.01)", k + 1.0, r.p00, t.p00));
    c.check(std::abs(r.p11 - t.p11) <= 0.01, fmt("row %.0f P11 %.4f vs %.2f (+-0.01)", k + 1.0, r.p11, t.p11));
  }
}

TwoQubitDensity pipeline(const FockCoefficients& c, const QubitPrep& a, const QubitPrep& b, ArmParams aa,
                         ArmParams ab) {
  return reduce_to_qubits(evolve_joint(c, a, b, aa, ab));
}

const QubitPrep kBasis[2] = {QubitPrep::ground(), QubitPrep::excited()};

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();

  table_criterion(1, "TWB peak table (both ground)", Family::twb,
                  {{1.56, 0.87, 0.64, 0.69, 0.21},
                   {4.61, 1.82, 0.81, 0.52, 0.25},
                   {7.85, 1.07, 0.68, 0.65, 0.23},
                   {11.03, 1.07, 0.68, 0.65, 0.23}});
  table_criterion(2, "TMC peak table (both ground)", Family::tmc,
                  {{1.56, 0.89, 0.84, 0.61, 0.34},
                   {4.66, 1.09, 0.90, 0.54, 0.39},
                   {7.85, 0.99, 0.87, 0.57, 0.37},
                   {11.01, 0.99, 0.88, 0.57, 0.37}});

  {
    Criterion c{3, "Bell full transfer at g tau = pi/2 (2k+1)"};
    const auto coeffs = coefficients(CVStateSpec::tss_from_p00(0.5));
    for (int k = 0; k <= 2; ++k) {
      const double g = pi / 2 * (2 * k + 1);
      const auto r = report(pipeline(coeffs, kBasis[0], kBasis[0], {g, 0}, {g, 0}));
      c.check(std::abs(r.eof - 1.0) <= 1e-9, fmt("k=%.0f eof-1 = %.2e", k, r.eof - 1.0));
      c.check(std::abs(r.lambda4 + 0.5) <= 1e-9, fmt("k=%.0f lambda4+1/2 = %.2e", k, r.lambda4 + 0.5));
    }
  }

  {
    Criterion c{4, "Excited-excited near-complete transfer at g tau = 26.68"};
    const double l4 = lambda4_tss(0.5, 26.68, TssPrepCase::excited_excited);
    const auto rho = pipeline(coefficients(CVStateSpec::tss_from_p00(0.5)), kBasis[1], kBasis[1], {26.68, 0},
                              {26.68, 0});
    const auto r = report(rho);
    const double numeric_min = ppt_eigenvalues_general(rho)[0];
    c.check(l4 <= -0.49, fmt("lambda4_tss = %.6f (<= -0.49)", l4));
    c.check(r.eof >= 0.97, fmt("pipeline eof = %.6f (>= 0.97)", r.eof));
    c.check(std::abs(l4 - numeric_min) <= 1e-10, fmt("|lambda4_tss - numeric min| = %.2e", std::abs(l4 - numeric_min)));
  }

  {
    Criterion c{5, "Entropy-section identity at g tau = pi/2"};
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double p00 = i / 100.0;
      const auto coeffs = coefficients(CVStateSpec::tss_from_p00(p00));
      const auto r = report(pipeline(coeffs, kBasis[0], kBasis[0], {pi / 2, 0}, {pi / 2, 0}));
      worst = std::max(worst, std::abs(r.eof - von_neumann_entropy(coeffs)));
    }
    c.check(worst <= 1e-9, fmt("max |eof - S_vn| = %.2e over 101 P00 values", worst));
  }

  {
    Criterion c{6, "Analytic vs numeric lambda4 (200 draws per prep case)"};
    std::mt19937_64 rng(606);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (auto pc : {TssPrepCase::ground_ground, TssPrepCase::excited_excited}) {
      const QubitPrep q = kBasis[pc == TssPrepCase::ground_ground ? 0 : 1];
      double worst_root = 0.0, worst_min = 0.0;
      int negative = 0;
      for (int t = 0; t < 200; ++t) {
        const double p00 = u(rng), g = 30.0 * u(rng);
        const auto rho = pipeline(coefficients(CVStateSpec::tss_from_p00(p00)), q, q, {g, 0}, {g, 0});
        const double l4 = lambda4_tss(p00, g, pc);
        const auto spec = ppt_eigenvalues_general(rho);
        double nearest = 1e300;
        for (double v : spec) nearest = std::min(nearest, std::abs(v - l4));
        worst_root = std::max(worst_root, nearest);
        if (l4 < 0.0 || spec[0] < 0.0) {
          ++negative;
          worst_min = std::max(worst_min, std::abs(l4 - spec[0]));
        }
      }
      const char* label = pc == TssPrepCase::ground_ground ? "ground_ground" : "excited_excited";
      c.check(worst_root <= 1e-10, std::string(label) + fmt(": max distance to numeric PT spectrum %.2e", worst_root));
      c.check(worst_min <= 1e-10,
              std::string(label) + fmt(": max |lambda4 - PT minimum| %.2e on %.0f entangled draws", worst_min, negative));
    }
  }

  {
    Criterion c{7, "Closed-form elements vs partial trace (4 basis combos x 50 draws)"};
    std::mt19937_64 rng(707);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst[2][2] = {};
    for (int t = 0; t < 50; ++t) {
      const int fam = t % 3;
      const cplx phase = std::polar(1.0, 2 * pi * u(rng));
      const double p00 = u(rng);
      const CVStateSpec spec = fam == 0   ? CVStateSpec::tss(std::sqrt(p00) * phase, std::sqrt(1 - p00))
                               : fam == 1 ? CVStateSpec::twb(0.9 * u(rng) * phase)
                                          : CVStateSpec::tmc(2.5 * u(rng) * phase);
      const FockCoefficients coeffs = coefficients(spec);
      const ArmParams a{12 * u(rng), 10 * u(rng) - 5}, b{12 * u(rng), 10 * u(rng) - 5};
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          worst[i][j] = std::max(worst[i][j], appendix_deviation(coeffs, kBasis[i], kBasis[j], a, b));
    }
    const char* names[2] = {"ground", "excited"};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        c.check(worst[i][j] <= 1e-10,
                std::string(names[i]) + "/" + names[j] + fmt(": max elementwise deviation %.2e", worst[i][j]));
  }

  {
    Criterion c{8, "Detuning robustness (TMC, g tau = 4.66)"};
    const SweepTable t =
        detuning_scan(Family::tmc, 4.66, DetuningMode::b_only, {0.0, 1.0, 5.0}, default_mean_n_axis());
    const double p0 = row_peak_eof(t, 0), p1 = row_peak_eof(t, 1), p5 = row_peak_eof(t, 2);
    c.check(p1 >= 0.9 * p0, fmt("peak(Delta_B=1) = %.4f >= 0.9 * peak(0) = %.4f", p1, 0.9 * p0));
    c.check(p5 < p1, fmt("peak(Delta_B=5) = %.4f < peak(Delta_B=1) = %.4f", p5, p1));
  }

  {
    Criterion c{9, "Time-mismatch revival (TMC, g tau_A = 11.01, g tau_B = 7.85)"};
    const SweepTable t = mismatch_scan(Family::tmc, 11.01, {11.01, 7.85}, default_mean_n_axis());
    const double eq = row_peak_eof(t, 0), mis = row_peak_eof(t, 1);
    c.check(std::abs(mis - eq) <= 0.05, fmt("mismatch peak %.4f vs equal-times peak %.4f", mis, eq));
  }

  {
    Criterion c{10, "Property suites"};
    std::mt19937_64 rng(1010);
    std::uniform_real_distribution<double> u(0.0, 1.0);

    double unit = 0.0;
    for (int t = 0; t < 200; ++t) {
      const ArmParams arm{15 * u(rng), 20 * u(rng) - 10};
      for (std::size_t k = 0; k <= 200; ++k) {
        const Matrix2 m = jc_unitary(k, arm);
        unit = std::max(unit, (m.adjoint() * m).max_abs_diff(Matrix2::identity()));
      }
    }
    c.check(unit <= 1e-12, fmt("propagator unitarity, k <= 200: %.2e", unit));

    bool dens_ok = true, x_ok = true;
    double lu = 0.0;
    for (int t = 0; t < 200; ++t) {
      const Family f = t % 3 == 0 ? Family::tss : t % 3 == 1 ? Family::twb : Family::tmc;
      const auto coeffs = coefficients(CVStateSpec::from_mean(f, (f == Family::tss ? 2.0 : 4.0) * u(rng)));
      const ArmParams a{12 * u(rng), 6 * u(rng) - 3}, b{12 * u(rng), 6 * u(rng) - 3};
      const QubitPrep pa = kBasis[t % 2], pb = kBasis[t / 2 % 2];
      const auto rho = pipeline(coeffs, pa, pb, a, b);
      dens_ok = dens_ok && check_density(rho, 1.0, 2 * kDefaultTailEps).ok;
      x_ok = x_ok && has_x_form(rho);
      const auto sup = pipeline(coeffs, QubitPrep::superposition(u(rng)),
                                QubitPrep::superposition(u(rng), 2 * pi * u(rng)), a, b);
      dens_ok = dens_ok && check_density(sup, 1.0, 2 * kDefaultTailEps).ok;
      std::normal_distribution<double> nd;
      auto random_u2 = [&] {
        const cplx a0(nd(rng), nd(rng)), b0(nd(rng), nd(rng));
        const double nrm = std::sqrt(std::norm(a0) + std::norm(b0));
        Matrix2 m;
        m(0, 0) = a0 / nrm;
        m(0, 1) = -std::conj(b0) / nrm;
        m(1, 0) = b0 / nrm;
        m(1, 1) = std::conj(a0) / nrm;
        return m;
      };
      const Matrix4 lu_op = kron(random_u2(), random_u2());
      Matrix4 rot = lu_op * sup * lu_op.adjoint();
      rot = (rot + rot.adjoint()) * cplx(0.5);
      const auto r0 = report(sup), r1 = report(rot);
      lu = std::max({lu, std::abs(r0.concurrence - r1.concurrence), std::abs(r0.eof - r1.eof)});
    }
    c.check(dens_ok, "density trace/Hermiticity/PSD on 400 pipeline states");
    c.check(x_ok, "X-form detected for all basis-prep states");
    c.check(lu <= 1e-10, fmt("local-unitary invariance of C and eof: %.2e", lu));

    bool dominance = true;
    for (double n : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      dominance = dominance && von_neumann_entropy(coefficients(CVStateSpec::from_mean(Family::twb, n))) >
                                   von_neumann_entropy(coefficients(CVStateSpec::from_mean(Family::tmc, n)));
    }
    c.check(dominance, "TWB entropy > TMC entropy at 5 equal energies");

    double sym = 0.0;
    for (int t = 0; t < 50; ++t) {
      PointInputs p;
      p.family = t % 2 ? Family::twb : Family::tmc;
      p.state = {StateParam::Kind::mean_n, 3 * u(rng)};
      p.prep_a = QubitPrep::superposition(u(rng));
      p.prep_b = QubitPrep::superposition(u(rng));
      p.arm_a = {10 * u(rng), 8 * u(rng) - 4};
      p.arm_b = {10 * u(rng), 8 * u(rng) - 4};
      PointInputs q = p;
      q.arm_a.delta_tau = -q.arm_a.delta_tau;
      q.arm_b.delta_tau = -q.arm_b.delta_tau;
      sym = std::max(sym, std::abs(run_point(p).ent.eof - run_point(q).ent.eof));
    }
    c.check(sym <= 1e-10, fmt("detuning sign-flip symmetry on 50 points: %.2e", sym));

    Scenario sc;
    sc.base.family = Family::tmc;
    sc.axes = {AxisSpec::linear(AxisKind::g_tau, 0.0, 12.0, 120), AxisSpec::linear(AxisKind::mean_n, 0.02, 4.0, 40)};
    std::ostringstream a, b, s;
    write_csv(sweep(sc), a);
    write_csv(sweep(sc), b);
    write_csv(sweep(sc, Execution::serial), s);
    c.check(a.str() == b.str() && a.str() == s.str(), "CSV byte-identical across reruns and kernels");
  }

  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%d criteria failed; total %.1f s\n", failures, secs);
  return failures == 0 ? 0 : 1;
}
