#pragma once

// Off-resonance Jaynes-Cummings dynamics of one qubit coupled to one field
// mode. Everything is expressed through the dimensionless products g*tau and
// Delta*tau. Within excitation variety k the pair
//   { |excited>|k>, |ground>|k+1> }
// evolves under a 2x2 unitary; |ground>|0> is stationary.

#include <array>
#include <cstddef>

#include "cvq/numerics.hpp"

namespace cvq {

enum class Level { ground, excited };

struct QubitPrep {
  cplx ground_amp{1.0};
  cplx excited_amp{};

  static QubitPrep ground() { return {1.0, 0.0}; }
  static QubitPrep excited() { return {0.0, 1.0}; }
  // Real nonnegative amplitudes sqrt(ground_prob), sqrt(1 - ground_prob).
  static QubitPrep superposition(double ground_prob, double relative_phase = 0.0);

  // Throws DomainError unless |ground|^2 + |excited|^2 = 1 within 1e-12.
  void validate() const;
  bool is_basis_state() const { return ground_amp == cplx{} || excited_amp == cplx{}; }
};

struct ArmParams {
  double g_tau = 0.0;
  double delta_tau = 0.0;

  // Throws DomainError on non-finite values or g_tau < 0.
  void validate() const;
};

// Generalized Rabi angle R_k * tau = sqrt(4 (g tau)^2 (k + 1) + (Delta tau)^2).
double rabi(std::size_t k, const ArmParams& arm);

// Propagator for variety k on the ordered pair (|e,k>, |g,k+1>).
Matrix2 jc_unitary(std::size_t k, const ArmParams& arm);

// Amplitudes of one arm after evolving prep (x) |n>. Only the four basis
// states |e,n-1>, |g,n>, |e,n>, |g,n+1> can be populated.
struct ArmBranch {
  std::size_t n = 0;
  cplx excited_below{};   // |e, n-1>
  cplx ground_same{};     // |g, n>
  cplx excited_same{};    // |e, n>
  cplx ground_above{};    // |g, n+1>

  double norm_squared() const;
  // Amplitude on |level, k>; zero for states outside the branch support.
  cplx amplitude(Level level, std::size_t k) const;
};

ArmBranch evolve_arm_branch(const QubitPrep& prep, std::size_t n, const ArmParams& arm);

}  // namespace cvq
