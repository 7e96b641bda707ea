#pragma once

// Joint field(x)qubits state after both arms evolve, and its reduction to the
// 4x4 density matrix of the two qubits.
//
// Two-qubit basis order (A first):
//   0: |e>_A|e>_B   1: |e>_A|g>_B   2: |g>_A|e>_B   3: |g>_A|g>_B

#include <cstddef>
#include <vector>

#include "cvq/cv_states.hpp"
#include "cvq/jc_core.hpp"
#include "cvq/numerics.hpp"

namespace cvq {

// Index of |level_a>|level_b> in the two-qubit basis.
constexpr std::size_t qubit_index(Level a, Level b) {
  return (a == Level::excited ? 0u : 2u) + (b == Level::excited ? 0u : 1u);
}

// Amplitudes psi(level_A, k_A, level_B, k_B). The Schmidt form keeps
// |k_A - k_B| <= 2, so storage is banded in k_B - k_A and linear in n_max.
class JointAmplitudeMap {
 public:
  explicit JointAmplitudeMap(std::size_t n_max = 0);

  // Largest photon number that can be stored (n_max + 1).
  std::size_t k_limit() const { return k_limit_; }

  void add(Level a, std::size_t ka, Level b, std::size_t kb, cplx amp);
  cplx at(Level a, std::size_t ka, Level b, std::size_t kb) const;
  double norm_squared() const;

  // Visits every stored nonzero amplitude as f(level_a, ka, level_b, kb, amp).
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t ka = 0; ka <= k_limit_; ++ka)
      for (int d = -kBand; d <= kBand; ++d) {
        const long kb = static_cast<long>(ka) + d;
        if (kb < 0 || kb > static_cast<long>(k_limit_)) continue;
        for (std::size_t q = 0; q < 4; ++q) {
          const cplx v = amps_[slot(ka, d) * 4 + q];
          if (v == cplx{}) continue;
          f(q < 2 ? Level::excited : Level::ground, ka, q % 2 == 0 ? Level::excited : Level::ground,
            static_cast<std::size_t>(kb), v);
        }
      }
  }

  // Raw access for the reduction kernel: the four qubit amplitudes stored for
  // one (k_A, k_B = k_A + d) pair, in qubit_index order.
  static constexpr int kBand = 2;
  const cplx* block(std::size_t ka, int d) const { return &amps_[slot(ka, d) * 4]; }

 private:
  std::size_t slot(std::size_t ka, int d) const {
    return ka * (2 * kBand + 1) + static_cast<std::size_t>(d + kBand);
  }

  std::size_t k_limit_;
  std::vector<cplx> amps_;
};

using TwoQubitDensity = Matrix4;

// psi = sum_n c_n (U_A |prepA, n>) (x) (U_B |prepB, n>).
JointAmplitudeMap evolve_joint(const FockCoefficients& coeffs, const QubitPrep& prep_a,
                               const QubitPrep& prep_b, const ArmParams& arm_a,
                               const ArmParams& arm_b);

// rho[(a,b),(a',b')] = sum_{kA,kB} psi(a,kA,b,kB) conj(psi(a',kA,b',kB)).
TwoQubitDensity reduce_to_qubits(const JointAmplitudeMap& joint);

// Closed-form matrix elements summed directly over the Fock coefficients,
// independent of the joint-state route above.
TwoQubitDensity appendix_closed_form(const FockCoefficients& coeffs, const QubitPrep& prep_a,
                                     const QubitPrep& prep_b, const ArmParams& arm_a,
                                     const ArmParams& arm_b);

struct DensityCheck {
  double hermiticity_error = 0.0;
  double trace_error = 0.0;  // |tr rho - expected_trace|
  double min_eigenvalue = 0.0;
  bool ok = false;
};

// Hermitian within 1e-12, trace within trace_tol of expected_trace,
// eigenvalues >= -1e-10.
DensityCheck check_density(const TwoQubitDensity& rho, double expected_trace = 1.0,
                           double trace_tol = 2e-12);

// Elementwise maximum deviation of the closed form from the partial trace.
double appendix_deviation(const FockCoefficients& coeffs, const QubitPrep& prep_a,
                          const QubitPrep& prep_b, const ArmParams& arm_a, const ArmParams& arm_b);

}  // namespace cvq
