#include "cvq/jc_core.hpp"

#include <cmath>

namespace cvq {

namespace {
constexpr double kPrepNormTol = 1e-12;
constexpr double kSmallRabi = 1e-8;
}  // namespace

QubitPrep QubitPrep::superposition(double ground_prob, double relative_phase) {
  if (!(ground_prob >= 0.0 && ground_prob <= 1.0)) {
    throw DomainError("ground-state probability must lie in [0, 1]");
  }
  return {std::sqrt(ground_prob), std::polar(std::sqrt(1.0 - ground_prob), relative_phase)};
}

void QubitPrep::validate() const {
  const double norm = std::norm(ground_amp) + std::norm(excited_amp);
  if (!(std::abs(norm - 1.0) <= kPrepNormTol)) {
    throw DomainError("qubit preparation is not normalized");
  }
}

void ArmParams::validate() const {
  if (!std::isfinite(g_tau) || !std::isfinite(delta_tau)) {
    throw DomainError("arm parameters must be finite");
  }
  if (g_tau < 0.0) throw DomainError("g_tau must be >= 0");
}

double rabi(std::size_t k, const ArmParams& arm) {
  const double kk = static_cast<double>(k) + 1.0;
  return std::sqrt(4.0 * arm.g_tau * arm.g_tau * kk + arm.delta_tau * arm.delta_tau);
}

Matrix2 jc_unitary(std::size_t k, const ArmParams& arm) {
  const double r = rabi(k, arm);
  const double half = 0.5 * r;
  const double c = std::cos(half);
  // sin(R/2) / R, with the series limit 1/2 - R^2/48 near R = 0.
  const double sinc = r < kSmallRabi ? 0.5 - r * r / 48.0 : std::sin(half) / r;
  const double coupling = 2.0 * arm.g_tau * std::sqrt(static_cast<double>(k) + 1.0);

  Matrix2 u;
  u(0, 0) = cplx(c, -arm.delta_tau * sinc);
  u(0, 1) = cplx(0.0, -coupling * sinc);
  u(1, 0) = u(0, 1);
  u(1, 1) = cplx(c, arm.delta_tau * sinc);
  return u;
}

double ArmBranch::norm_squared() const {
  return std::norm(excited_below) + std::norm(ground_same) + std::norm(excited_same) +
         std::norm(ground_above);
}

cplx ArmBranch::amplitude(Level level, std::size_t k) const {
  if (level == Level::excited) {
    if (k == n) return excited_same;
    if (n >= 1 && k == n - 1) return excited_below;
    return {};
  }
  if (k == n) return ground_same;
  if (k == n + 1) return ground_above;
  return {};
}

ArmBranch evolve_arm_branch(const QubitPrep& prep, std::size_t n, const ArmParams& arm) {
  ArmBranch b;
  b.n = n;
  if (prep.excited_amp != cplx{}) {
    const Matrix2 u = jc_unitary(n, arm);
    b.excited_same = u(0, 0) * prep.excited_amp;
    b.ground_above = u(1, 0) * prep.excited_amp;
  }
  if (prep.ground_amp != cplx{}) {
    if (n == 0) {
      b.ground_same = prep.ground_amp;
    } else {
      const Matrix2 u = jc_unitary(n - 1, arm);
      b.excited_below = u(0, 1) * prep.ground_amp;
      b.ground_same = u(1, 1) * prep.ground_amp;
    }
  }
  return b;
}

}  // namespace cvq
