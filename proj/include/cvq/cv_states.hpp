#pragma once

// Two-mode states with perfect photon-number correlation,
//   |x> = sum_n c_n |n>|n>,
// for three families: a two-term superposition (TSS), the twin beam (TWB) and
// the pair-coherent state (TMC).

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "cvq/numerics.hpp"

namespace cvq {

enum class Family { tss, twb, tmc };

std::string_view to_string(Family f);
// Accepts "tss", "twb", "tmc" (case-sensitive). Throws DomainError otherwise.
Family parse_family(std::string_view name);

inline constexpr double kDefaultTailEps = 1e-12;
inline constexpr std::size_t kDefaultMaxN = 512;

struct Truncation {
  double tail_eps = kDefaultTailEps;
  std::size_t max_n = kDefaultMaxN;
};

// One member of a state family.
//   TSS: amplitudes c0, c1 with |c0|^2 + |c1|^2 = 1.
//   TWB: complex x with |x| < 1.
//   TMC: complex x, |x| <= 30 (the Bessel range).
class CVStateSpec {
 public:
  static CVStateSpec tss(cplx c0, cplx c1, Truncation t = {});
  // Real nonnegative c0 = sqrt(P00), c1 = sqrt(1 - P00).
  static CVStateSpec tss_from_p00(double p00, Truncation t = {});
  static CVStateSpec twb(cplx x, Truncation t = {});
  static CVStateSpec tmc(cplx x, Truncation t = {});
  // Real x >= 0 chosen so that the total mean photon number equals mean_n.
  // For TSS this fixes P00 = 1 - mean_n / 2 (mean_n in [0, 2]).
  static CVStateSpec from_mean(Family f, double mean_n, Truncation t = {});

  Family family() const { return family_; }
  cplx x() const { return x_; }
  cplx c0() const { return c0_; }
  cplx c1() const { return c1_; }
  const Truncation& truncation() const { return trunc_; }

  // P00 for TSS, |x| otherwise. This is the value written to the
  // `P00_or_x` CSV column.
  double state_parameter() const;

 private:
  CVStateSpec() = default;
  Family family_ = Family::tss;
  cplx x_{};
  cplx c0_{1.0};
  cplx c1_{};
  Truncation trunc_{};
};

// Truncated Schmidt coefficients c_0..c_{n_max}.
struct FockCoefficients {
  std::vector<cplx> c;
  // 1 - sum |c_n|^2 over the retained terms.
  double tail_bound = 0.0;

  std::size_t n_max() const { return c.empty() ? 0 : c.size() - 1; }
  double norm_squared() const;
};

// n_max is the smallest n with cumulative probability >= 1 - tail_eps.
// Throws TruncationOverflow when that n exceeds the family cap.
FockCoefficients coefficients(const CVStateSpec& spec);

// P_nn = |c_n|^2.
std::vector<double> photon_distribution(const FockCoefficients& coeffs);

// Total mean photon number <a^dagger a + b^dagger b>.
double mean_photons(const CVStateSpec& spec);

// |x| giving a target total mean photon number. TWB is analytic; TMC inverts
// 2|x| I1(2|x|) / I0(2|x|) by bisection. TSS is not parametrized by x and is
// rejected here (use CVStateSpec::from_mean).
double param_from_mean(Family f, double target_n);

// Entanglement entropy in bits, -sum P_nn log2 P_nn over the retained terms.
double von_neumann_entropy(const FockCoefficients& coeffs);
// Closed-form TWB entropy in bits for |x| < 1.
double twb_entropy_closed_form(double abs_x);
// Binary entropy h(p) in bits, h(0) = h(1) = 0.
double binary_entropy(double p);

}  // namespace cvq
