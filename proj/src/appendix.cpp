// Closed-form elements of the reduced two-qubit density matrix, written as
// explicit sums over the Fock coefficients and the per-variety propagators.
//
// Notation below: cc(j, k) = c_j conj(c_k), p(j) = |c_j|^2, and a11(k) ...
// b22(k) are the entries of the arm-A / arm-B propagators for variety k.
// Terms carrying "+ extra" are the n = 0 contributions where the ground state
// with zero photons is stationary.
//
// Easy-to-get-wrong terms (each checked against the branch amplitudes):
//   rho44  |A1|^2|B1|^2 : sum_j p(j) |a22(j-1)|^2 |b22(j-1)|^2 + p(0)   (product, not sum)
//   rho14  |A2|^2|B1|^2 : coefficient pair is cc(j+1, j), not cc(j, j-1)
//   rho23               : the sum starts at j = 1; j = 0 is the extra term
//   rho24  A2A1*|B1|^2  : the last propagator factor is conj(a22(j-1)), not conj(a12(j-1))
//   rho34  |B1|^2 term  : prep monomial is A1 A2*, not A1* A2

#include <vector>

#include "cvq/reduced_state.hpp"

namespace cvq {

namespace {

class ArmTable {
 public:
  ArmTable(const ArmParams& arm, std::size_t k_count) {
    u_.reserve(k_count);
    for (std::size_t k = 0; k < k_count; ++k) u_.push_back(jc_unitary(k, arm));
  }
  cplx u11(std::size_t k) const { return u_[k](0, 0); }
  cplx u12(std::size_t k) const { return u_[k](0, 1); }
  cplx u21(std::size_t k) const { return u_[k](1, 0); }
  cplx u22(std::size_t k) const { return u_[k](1, 1); }

 private:
  std::vector<Matrix2> u_;
};

double sq(cplx z) { return std::norm(z); }

}  // namespace

TwoQubitDensity appendix_closed_form(const FockCoefficients& coeffs, const QubitPrep& prep_a,
                                     const QubitPrep& prep_b, const ArmParams& arm_a,
                                     const ArmParams& arm_b) {
  prep_a.validate();
  prep_b.validate();
  arm_a.validate();
  arm_b.validate();

  const std::vector<cplx>& c = coeffs.c;
  const std::size_t n_terms = c.size();
  const ArmTable a(arm_a, n_terms + 1);
  const ArmTable b(arm_b, n_terms + 1);

  auto cn = [&](std::size_t j) { return j < n_terms ? c[j] : cplx{}; };
  auto cc = [&](std::size_t j, std::size_t k) { return cn(j) * std::conj(cn(k)); };
  auto p = [&](std::size_t j) { return std::norm(cn(j)); };

  const cplx A1 = prep_a.ground_amp, A2 = prep_a.excited_amp;
  const cplx B1 = prep_b.ground_amp, B2 = prep_b.excited_amp;
  const double A1s = sq(A1), A2s = sq(A2), B1s = sq(B1), B2s = sq(B2);
  // Prep monomials.
  const cplx m_a2a1 = A2 * std::conj(A1);  // A1* A2
  const cplx m_b2b1 = B2 * std::conj(B1);  // B1* B2

  // Sums run over j = 0 .. n_terms - 1; all c_j beyond vanish.
  const std::size_t J = n_terms;

  cplx r11{}, r22{}, r33{}, r44{}, r12{}, r13{}, r14{}, r23{}, r24{}, r34{};

  // rho11
  {
    double t1 = 0, t3 = 0, t4 = 0, t5 = 0;
    cplx t2{};
    for (std::size_t j = 0; j < J; ++j) {
      t1 += p(j) * sq(a.u11(j)) * sq(b.u11(j));
      t2 += cc(j, j + 1) * a.u11(j) * b.u11(j) * std::conj(a.u12(j) * b.u12(j));
      t3 += p(j + 1) * sq(a.u11(j + 1)) * sq(b.u12(j));
      t4 += p(j + 1) * sq(a.u12(j)) * sq(b.u11(j + 1));
      t5 += p(j + 1) * sq(a.u12(j)) * sq(b.u12(j));
    }
    const cplx cross = m_a2a1 * m_b2b1 * t2;
    r11 = A2s * B2s * t1 + cross + A2s * B1s * t3 + A1s * B2s * t4 + A1s * B1s * t5 +
          std::conj(cross);
  }

  // rho22
  {
    double t1 = 0, t3 = p(0) * sq(a.u11(0)), t4 = 0, t5 = 0;
    cplx t2{};
    for (std::size_t j = 1; j <= J; ++j) {
      t1 += p(j - 1) * sq(a.u11(j - 1)) * sq(b.u21(j - 1));
      t2 += cc(j - 1, j) * a.u11(j - 1) * b.u21(j - 1) * std::conj(a.u12(j - 1) * b.u22(j - 1));
      t3 += p(j) * sq(a.u11(j)) * sq(b.u22(j - 1));
      t4 += p(j) * sq(a.u12(j - 1)) * sq(b.u21(j));
      t5 += p(j) * sq(a.u12(j - 1)) * sq(b.u22(j - 1));
    }
    const cplx cross = m_a2a1 * m_b2b1 * t2;
    r22 = A2s * B2s * t1 + cross + A2s * B1s * t3 + A1s * B2s * t4 + A1s * B1s * t5 +
          std::conj(cross);
  }

  // rho33
  {
    double t1 = 0, t3 = p(0) * sq(b.u11(0)), t4 = 0, t5 = 0;
    cplx t2{};
    for (std::size_t j = 0; j < J; ++j) {
      t1 += p(j) * sq(a.u21(j)) * sq(b.u11(j));
      t2 += cc(j, j + 1) * a.u21(j) * b.u11(j) * std::conj(a.u22(j) * b.u12(j));
      t4 += p(j + 1) * sq(a.u21(j + 1)) * sq(b.u12(j));
      t5 += p(j + 1) * sq(a.u22(j)) * sq(b.u12(j));
    }
    for (std::size_t j = 1; j < J; ++j) t3 += p(j) * sq(a.u22(j - 1)) * sq(b.u11(j));
    const cplx cross = m_a2a1 * m_b2b1 * t2;
    r33 = A2s * B2s * t1 + cross + A1s * B2s * t3 + A2s * B1s * t4 + A1s * B1s * t5 +
          std::conj(cross);
  }

  // rho44
  {
    double t1 = 0, t3 = p(0) * sq(a.u21(0)), t4 = p(0) * sq(b.u21(0)), t5 = p(0);
    cplx t2{};
    for (std::size_t j = 1; j <= J; ++j) {
      t1 += p(j - 1) * sq(a.u21(j - 1)) * sq(b.u21(j - 1));
      t2 += cc(j - 1, j) * a.u21(j - 1) * b.u21(j - 1) * std::conj(a.u22(j - 1) * b.u22(j - 1));
      t3 += p(j) * sq(a.u21(j)) * sq(b.u22(j - 1));
      t4 += p(j) * sq(a.u22(j - 1)) * sq(b.u21(j));
      t5 += p(j) * sq(a.u22(j - 1)) * sq(b.u22(j - 1));
    }
    const cplx cross = m_a2a1 * m_b2b1 * t2;
    r44 = A2s * B2s * t1 + cross + A2s * B1s * t3 + A1s * B2s * t4 + A1s * B1s * t5 +
          std::conj(cross);
  }

  // rho12
  {
    cplx t1 = p(0) * sq(a.u11(0)) * b.u11(0);
    cplx t2{}, t3{};
    cplx t4 = cc(1, 0) * a.u12(0) * b.u12(0) * std::conj(a.u11(0));
    for (std::size_t j = 1; j <= J; ++j) {
      t1 += p(j) * sq(a.u11(j)) * b.u11(j) * std::conj(b.u22(j - 1));
      t2 += p(j) * sq(a.u12(j - 1)) * b.u11(j) * std::conj(b.u22(j - 1));
      t3 += cc(j, j - 1) * a.u12(j - 1) * b.u11(j) * std::conj(a.u11(j - 1) * b.u21(j - 1));
      if (j < J)
        t4 += cc(j + 1, j) * a.u12(j) * b.u12(j) * std::conj(a.u11(j) * b.u22(j - 1));
    }
    r12 = A2s * m_b2b1 * t1 + A1s * m_b2b1 * t2 + std::conj(m_a2a1) * B2s * t3 +
          std::conj(m_a2a1) * B1s * t4;
  }

  // rho13
  {
    cplx t1{}, t4{};
    cplx t2 = cc(1, 0) * a.u12(0) * b.u12(0) * std::conj(b.u11(0));
    cplx t3 = a.u11(0) * sq(b.u11(0)) * p(0);
    for (std::size_t j = 0; j < J; ++j) {
      t1 += cc(j + 1, j) * a.u11(j + 1) * b.u12(j) * std::conj(a.u21(j) * b.u11(j));
      t4 += p(j + 1) * a.u11(j + 1) * sq(b.u12(j)) * std::conj(a.u22(j));
    }
    for (std::size_t j = 1; j < J; ++j) {
      t2 += cc(j + 1, j) * a.u12(j) * b.u12(j) * std::conj(a.u22(j - 1) * b.u11(j));
      t3 += p(j) * a.u11(j) * sq(b.u11(j)) * std::conj(a.u22(j - 1));
    }
    r13 = A2s * std::conj(m_b2b1) * t1 + A1s * std::conj(m_b2b1) * t2 + m_a2a1 * B2s * t3 +
          m_a2a1 * B1s * t4;
  }

  // rho14
  {
    cplx t1{}, t6{};
    cplx t2 = p(0) * a.u11(0) * b.u11(0);
    cplx t3 = cc(1, 0) * a.u11(1) * b.u12(0) * std::conj(a.u21(0));
    cplx t4 = cc(1, 0) * a.u12(0) * b.u11(1) * std::conj(b.u12(0));
    cplx t5 = cc(1, 0) * a.u12(0) * b.u12(0);
    for (std::size_t j = 1; j < J; ++j) {
      t1 += cc(j, j - 1) * a.u11(j) * b.u11(j) * std::conj(a.u21(j - 1) * b.u21(j - 1));
      t2 += p(j) * a.u11(j) * b.u11(j) * std::conj(a.u22(j - 1) * b.u22(j - 1));
      t3 += cc(j + 1, j) * a.u11(j + 1) * b.u12(j) * std::conj(a.u21(j) * b.u22(j - 1));
      t4 += cc(j + 1, j) * a.u12(j) * b.u11(j + 1) * std::conj(a.u22(j - 1) * b.u21(j));
      t5 += cc(j + 1, j) * a.u12(j) * b.u12(j) * std::conj(a.u22(j - 1) * b.u22(j - 1));
      t6 += cc(j + 1, j - 1) * a.u12(j) * b.u12(j) * std::conj(a.u21(j - 1) * b.u21(j - 1));
    }
    r14 = A2s * B2s * t1 + m_a2a1 * m_b2b1 * t2 + A2s * B1s * t3 + A1s * B2s * t4 +
          A1s * B1s * t5 + std::conj(m_a2a1 * m_b2b1) * t6;
  }

  // rho23
  {
    cplx t = p(0) * a.u11(0) * std::conj(b.u11(0));
    for (std::size_t j = 1; j < J; ++j)
      t += p(j) * a.u11(j) * b.u22(j - 1) * std::conj(a.u22(j - 1) * b.u11(j));
    r23 = m_a2a1 * std::conj(m_b2b1) * t;
  }

  // rho24
  {
    cplx t1{};
    cplx t2 = cc(1, 0) * a.u12(0) * b.u22(0) * std::conj(b.u21(0));
    cplx t3 = p(0) * a.u11(0) * sq(b.u21(0));
    cplx t4 = p(0) * a.u11(0);
    for (std::size_t j = 1; j < J; ++j) {
      t1 += cc(j, j - 1) * a.u11(j) * b.u22(j - 1) * std::conj(a.u21(j - 1) * b.u21(j - 1));
      t2 += cc(j + 1, j) * a.u12(j) * b.u22(j) * std::conj(a.u22(j - 1) * b.u21(j));
      t3 += p(j) * a.u11(j) * sq(b.u21(j)) * std::conj(a.u22(j - 1));
      t4 += p(j) * a.u11(j) * sq(b.u22(j - 1)) * std::conj(a.u22(j - 1));
    }
    r24 = A2s * std::conj(m_b2b1) * t1 + A1s * std::conj(m_b2b1) * t2 + m_a2a1 * B2s * t3 +
          m_a2a1 * B1s * t4;
  }

  // rho34
  {
    cplx t1 = p(0) * sq(a.u21(0)) * b.u11(0);
    cplx t2 = p(0) * b.u11(0);
    cplx t3{};
    cplx t4 = cc(1, 0) * a.u22(0) * b.u12(0) * std::conj(a.u21(0));
    for (std::size_t j = 1; j < J; ++j) {
      t1 += p(j) * sq(a.u21(j)) * b.u11(j) * std::conj(b.u22(j - 1));
      t2 += p(j) * sq(a.u22(j - 1)) * b.u11(j) * std::conj(b.u22(j - 1));
      t3 += cc(j, j - 1) * a.u22(j - 1) * b.u11(j) * std::conj(a.u21(j - 1) * b.u21(j - 1));
      t4 += cc(j + 1, j) * a.u22(j) * b.u12(j) * std::conj(a.u21(j) * b.u22(j - 1));
    }
    r34 = A2s * m_b2b1 * t1 + A1s * m_b2b1 * t2 + std::conj(m_a2a1) * B2s * t3 +
          std::conj(m_a2a1) * B1s * t4;
  }

  TwoQubitDensity rho;
  rho(0, 0) = r11;
  rho(1, 1) = r22;
  rho(2, 2) = r33;
  rho(3, 3) = r44;
  rho(0, 1) = r12;
  rho(0, 2) = r13;
  rho(0, 3) = r14;
  rho(1, 2) = r23;
  rho(1, 3) = r24;
  rho(2, 3) = r34;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < i; ++j) rho(i, j) = std::conj(rho(j, i));
  return rho;
}

}  // namespace cvq
