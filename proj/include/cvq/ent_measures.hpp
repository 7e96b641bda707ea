#pragma once

// Entanglement of a two-qubit density matrix: partial-transpose spectrum,
// Wootters concurrence and entanglement of formation.

#include <array>

#include "cvq/reduced_state.hpp"

namespace cvq {

// True when only the diagonal and the (0,3)/(3,0) corner are nonzero
// (within tol): the shape produced by basis-state qubit preparations.
bool has_x_form(const TwoQubitDensity& rho, double tol = 1e-12);

// Partial transpose with respect to qubit B.
TwoQubitDensity partial_transpose_b(const TwoQubitDensity& rho);

// Ascending eigenvalues of the partial transpose. For X-form input the
// closed forms rho44, rho11, (rho22 + rho33 +- sqrt((rho22-rho33)^2 + 4|rho14|^2))/2
// are used.
std::array<double, 4> ppt_eigenvalues(const TwoQubitDensity& rho);
// Same, always through the Hermitian eigensolver.
std::array<double, 4> ppt_eigenvalues_general(const TwoQubitDensity& rho);
// The "minus" root (rho22 + rho33 - sqrt(...))/2 of an X-form matrix, the only
// partial-transpose eigenvalue that can become negative.
double ppt_lambda4_x(const TwoQubitDensity& rho);

enum class TssPrepCase { ground_ground, excited_excited };

// Analytic lambda4 of the partial transpose for the two-term superposition at
// resonance with equal arms.
double lambda4_tss(double p00, double g_tau, TssPrepCase prep_case);

// Wootters concurrence. Lambda_i are the singular values of
// sqrt(rho) (sy (x) sy) conj(sqrt(rho)), i.e. the square roots of the
// eigenvalues of sqrt(rho) rho_tilde sqrt(rho).
double concurrence(const TwoQubitDensity& rho);
// 2 max{0, |rho14| - sqrt(rho22 rho33), |rho23| - sqrt(rho11 rho44)}.
double concurrence_x(const TwoQubitDensity& rho);
// The four Lambda_i, descending.
std::array<double, 4> wootters_lambdas(const TwoQubitDensity& rho);

// h((1 + sqrt(1 - C^2)) / 2) in bits. C within 1e-12 outside [0, 1] is clamped;
// further out throws DomainError.
double entanglement_of_formation(double c);

struct EntanglementReport {
  std::array<double, 4> ppt_eigs{};
  double lambda4 = 0.0;  // smallest partial-transpose eigenvalue
  double concurrence = 0.0;
  double eof = 0.0;
  bool x_form = false;
};

// Validates rho (Hermitian 1e-12, unit trace within trace_tol, PSD to -1e-10)
// and evaluates all measures, using the X-form closed forms when they apply.
EntanglementReport report(const TwoQubitDensity& rho, double trace_tol = 2e-12);

}  // namespace cvq
