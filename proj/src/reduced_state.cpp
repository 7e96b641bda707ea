#include "cvq/reduced_state.hpp"

#include <array>
#include <cmath>
#include <string>

namespace cvq {

JointAmplitudeMap::JointAmplitudeMap(std::size_t n_max)
    : k_limit_(n_max + 1), amps_((k_limit_ + 1) * (2 * kBand + 1) * 4) {}

void JointAmplitudeMap::add(Level a, std::size_t ka, Level b, std::size_t kb, cplx amp) {
  const long d = static_cast<long>(kb) - static_cast<long>(ka);
  if (ka > k_limit_ || kb > k_limit_ || d < -kBand || d > kBand) {
    throw ContractViolation("JointAmplitudeMap::add: key (" + std::to_string(ka) + ", " +
                            std::to_string(kb) + ") outside the Schmidt support");
  }
  amps_[slot(ka, static_cast<int>(d)) * 4 + qubit_index(a, b)] += amp;
}

cplx JointAmplitudeMap::at(Level a, std::size_t ka, Level b, std::size_t kb) const {
  const long d = static_cast<long>(kb) - static_cast<long>(ka);
  if (ka > k_limit_ || kb > k_limit_ || d < -kBand || d > kBand) return {};
  return amps_[slot(ka, static_cast<int>(d)) * 4 + qubit_index(a, b)];
}

double JointAmplitudeMap::norm_squared() const {
  double s = 0.0;
  for (const auto& v : amps_) s += std::norm(v);
  return s;
}

namespace {

struct Entry {
  Level level;
  std::size_t k;
  cplx amp;
};

// Nonzero components of one evolved arm branch.
std::size_t branch_entries(const ArmBranch& br, std::array<Entry, 4>& out) {
  std::size_t m = 0;
  if (br.n >= 1 && br.excited_below != cplx{}) out[m++] = {Level::excited, br.n - 1, br.excited_below};
  if (br.ground_same != cplx{}) out[m++] = {Level::ground, br.n, br.ground_same};
  if (br.excited_same != cplx{}) out[m++] = {Level::excited, br.n, br.excited_same};
  if (br.ground_above != cplx{}) out[m++] = {Level::ground, br.n + 1, br.ground_above};
  return m;
}

}  // namespace

JointAmplitudeMap evolve_joint(const FockCoefficients& coeffs, const QubitPrep& prep_a,
                               const QubitPrep& prep_b, const ArmParams& arm_a,
                               const ArmParams& arm_b) {
  prep_a.validate();
  prep_b.validate();
  arm_a.validate();
  arm_b.validate();

  JointAmplitudeMap joint(coeffs.n_max());
  std::array<Entry, 4> ea{};
  std::array<Entry, 4> eb{};
  for (std::size_t n = 0; n < coeffs.c.size(); ++n) {
    const cplx cn = coeffs.c[n];
    if (cn == cplx{}) continue;
    const std::size_t ma = branch_entries(evolve_arm_branch(prep_a, n, arm_a), ea);
    const std::size_t mb = branch_entries(evolve_arm_branch(prep_b, n, arm_b), eb);
    for (std::size_t i = 0; i < ma; ++i)
      for (std::size_t j = 0; j < mb; ++j)
        joint.add(ea[i].level, ea[i].k, eb[j].level, eb[j].k, cn * ea[i].amp * eb[j].amp);
  }
  return joint;
}

TwoQubitDensity reduce_to_qubits(const JointAmplitudeMap& joint) {
  TwoQubitDensity rho;
  const long limit = static_cast<long>(joint.k_limit());
  for (long ka = 0; ka <= limit; ++ka) {
    for (int d = -JointAmplitudeMap::kBand; d <= JointAmplitudeMap::kBand; ++d) {
      const long kb = ka + d;
      if (kb < 0 || kb > limit) continue;
      const cplx* v = joint.block(static_cast<std::size_t>(ka), d);
      if (v[0] == cplx{} && v[1] == cplx{} && v[2] == cplx{} && v[3] == cplx{}) continue;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) rho(i, j) += v[i] * std::conj(v[j]);
    }
  }
  return rho;
}

DensityCheck check_density(const TwoQubitDensity& rho, double expected_trace, double trace_tol) {
  DensityCheck c;
  c.hermiticity_error = rho.hermiticity_error();
  c.trace_error = std::abs(rho.trace() - expected_trace);
  if (c.hermiticity_error <= kHermitianTolerance) {
    c.min_eigenvalue = eigvals_hermitian4(rho)[0];
  } else {
    c.min_eigenvalue = -1.0;
  }
  c.ok = c.hermiticity_error <= 1e-12 && c.trace_error <= trace_tol &&
         c.min_eigenvalue >= -kPsdClampTolerance;
  return c;
}

double appendix_deviation(const FockCoefficients& coeffs, const QubitPrep& prep_a,
                          const QubitPrep& prep_b, const ArmParams& arm_a, const ArmParams& arm_b) {
  const auto closed = appendix_closed_form(coeffs, prep_a, prep_b, arm_a, arm_b);
  const auto traced = reduce_to_qubits(evolve_joint(coeffs, prep_a, prep_b, arm_a, arm_b));
  return closed.max_abs_diff(traced);
}

}  // namespace cvq
