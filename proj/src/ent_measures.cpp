#include "cvq/ent_measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cvq/cv_states.hpp"

namespace cvq {

namespace {

constexpr double kEofClamp = 1e-12;

// sigma_y (x) sigma_y in the |e>,|g> ordering.
const Matrix4& spin_flip() {
  static const Matrix4 y = [] {
    Matrix4 m;
    m(0, 3) = -1.0;
    m(1, 2) = 1.0;
    m(2, 1) = 1.0;
    m(3, 0) = -1.0;
    return m;
  }();
  return y;
}

std::array<double, 4> sorted(std::array<double, 4> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Eigenvalues of an X-form density matrix (ascending).
std::array<double, 4> x_form_eigenvalues(const TwoQubitDensity& rho) {
  const double r11 = rho(0, 0).real(), r44 = rho(3, 3).real();
  const double disc = std::hypot(r11 - r44, 2.0 * std::abs(rho(0, 3)));
  return sorted({rho(1, 1).real(), rho(2, 2).real(), 0.5 * (r11 + r44 + disc),
                 0.5 * (r11 + r44 - disc)});
}

}  // namespace

bool has_x_form(const TwoQubitDensity& rho, double tol) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const bool allowed = i == j || (i == 0 && j == 3) || (i == 3 && j == 0);
      if (!allowed && std::abs(rho(i, j)) > tol) return false;
    }
  return true;
}

TwoQubitDensity partial_transpose_b(const TwoQubitDensity& rho) {
  TwoQubitDensity pt;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t ap = 0; ap < 2; ++ap)
        for (std::size_t bp = 0; bp < 2; ++bp) pt(2 * a + b, 2 * ap + bp) = rho(2 * a + bp, 2 * ap + b);
  return pt;
}

double ppt_lambda4_x(const TwoQubitDensity& rho) {
  const double r22 = rho(1, 1).real(), r33 = rho(2, 2).real();
  return 0.5 * (r22 + r33 - std::hypot(r22 - r33, 2.0 * std::abs(rho(0, 3))));
}

std::array<double, 4> ppt_eigenvalues_general(const TwoQubitDensity& rho) {
  return eigvals_hermitian4(partial_transpose_b(rho));
}

std::array<double, 4> ppt_eigenvalues(const TwoQubitDensity& rho) {
  if (!rho.is_hermitian(kHermitianTolerance)) {
    throw ContractViolation("ppt_eigenvalues: density matrix is not Hermitian");
  }
  if (!has_x_form(rho)) return ppt_eigenvalues_general(rho);
  const double r22 = rho(1, 1).real(), r33 = rho(2, 2).real();
  const double disc = std::hypot(r22 - r33, 2.0 * std::abs(rho(0, 3)));
  return sorted({rho(3, 3).real(), rho(0, 0).real(), 0.5 * (r22 + r33 + disc),
                 0.5 * (r22 + r33 - disc)});
}

double lambda4_tss(double p00, double g_tau, TssPrepCase prep_case) {
  if (!(p00 >= 0.0 && p00 <= 1.0)) throw DomainError("lambda4_tss: P00 must lie in [0, 1]");
  const double p11 = 1.0 - p00;
  const double root = std::sqrt(p11 * p00);
  const double s1 = std::sin(g_tau), c1 = std::cos(g_tau);
  if (prep_case == TssPrepCase::ground_ground) {
    return s1 * s1 * (p11 * c1 * c1 - root);
  }
  const double s2 = std::sin(std::sqrt(2.0) * g_tau), c2 = std::cos(std::sqrt(2.0) * g_tau);
  return p11 * s2 * s2 * c2 * c2 + s1 * s1 * (p00 * c1 * c1 - root * c2 * c2);
}

std::array<double, 4> wootters_lambdas(const TwoQubitDensity& rho) {
  const Matrix4 s = sqrt_psd4(rho);
  return singular_values4(s * spin_flip() * s.conjugate());
}

double concurrence(const TwoQubitDensity& rho) {
  const auto l = wootters_lambdas(rho);
  const double c = l[0] - l[1] - l[2] - l[3];
  return c > 0.0 ? c : 0.0;
}

double concurrence_x(const TwoQubitDensity& rho) {
  const double a = std::abs(rho(0, 3)) - std::sqrt(std::max(0.0, rho(1, 1).real() * rho(2, 2).real()));
  const double b = std::abs(rho(1, 2)) - std::sqrt(std::max(0.0, rho(0, 0).real() * rho(3, 3).real()));
  return 2.0 * std::max({0.0, a, b});
}

double entanglement_of_formation(double c) {
  if (!(c >= -kEofClamp && c <= 1.0 + kEofClamp)) {
    throw DomainError("entanglement_of_formation: concurrence " + std::to_string(c) +
                      " outside [0, 1]");
  }
  c = std::clamp(c, 0.0, 1.0);
  if (c == 0.0) return 0.0;
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

EntanglementReport report(const TwoQubitDensity& rho, double trace_tol) {
  const double herm = rho.hermiticity_error();
  if (!(herm <= 1e-12)) {
    throw ContractViolation("report: density matrix not Hermitian (" + std::to_string(herm) + ")");
  }
  const double trace_err = std::abs(rho.trace() - 1.0);
  if (!(trace_err <= trace_tol)) {
    throw ContractViolation("report: trace deviates from 1 by " + std::to_string(trace_err));
  }

  EntanglementReport r;
  r.x_form = has_x_form(rho);
  const auto spectrum = r.x_form ? x_form_eigenvalues(rho) : eigvals_hermitian4(rho);
  if (spectrum[0] < -kPsdClampTolerance) {
    throw NotPositiveSemidefinite("report: density matrix eigenvalue " +
                                  std::to_string(spectrum[0]));
  }

  r.ppt_eigs = ppt_eigenvalues(rho);
  r.lambda4 = r.ppt_eigs[0];
  r.concurrence = std::clamp(r.x_form ? concurrence_x(rho) : concurrence(rho), 0.0, 1.0);
  r.eof = entanglement_of_formation(r.concurrence);
  return r;
}

}  // namespace cvq
