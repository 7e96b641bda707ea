#include "cvq/cv_states.hpp"

#include <cmath>
#include <string>

namespace cvq {

namespace {

constexpr double kTssNormTol = 1e-12;
constexpr double kTmcMaxAbsX = 0.5 * kBesselMaxArgument;

void validate(const Truncation& t) {
  if (!(t.tail_eps >= 1e-15 && t.tail_eps < 1.0)) {
    throw DomainError("tail_eps must lie in [1e-15, 1)");
  }
  if (t.max_n == 0) throw DomainError("max_n must be positive");
}

double tmc_mean(double abs_x) {
  if (abs_x == 0.0) return 0.0;
  const double y = 2.0 * abs_x;
  return y * bessel_i(1, y) / bessel_i(0, y);
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::tss:
      return "tss";
    case Family::twb:
      return "twb";
    case Family::tmc:
      return "tmc";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "tss") return Family::tss;
  if (name == "twb") return Family::twb;
  if (name == "tmc") return Family::tmc;
  throw DomainError("unknown state family '" + std::string(name) + "'");
}

CVStateSpec CVStateSpec::tss(cplx c0, cplx c1, Truncation t) {
  validate(t);
  const double norm = std::norm(c0) + std::norm(c1);
  if (!(std::abs(norm - 1.0) <= kTssNormTol)) {
    throw DomainError("TSS amplitudes must satisfy |c0|^2 + |c1|^2 = 1");
  }
  CVStateSpec s;
  s.family_ = Family::tss;
  s.c0_ = c0;
  s.c1_ = c1;
  s.trunc_ = t;
  return s;
}

CVStateSpec CVStateSpec::tss_from_p00(double p00, Truncation t) {
  if (!(p00 >= 0.0 && p00 <= 1.0)) throw DomainError("P00 must lie in [0, 1]");
  return tss(std::sqrt(p00), std::sqrt(1.0 - p00), t);
}

CVStateSpec CVStateSpec::twb(cplx x, Truncation t) {
  validate(t);
  if (!(std::abs(x) < 1.0)) throw DomainError("TWB requires |x| < 1");
  CVStateSpec s;
  s.family_ = Family::twb;
  s.x_ = x;
  s.trunc_ = t;
  return s;
}

CVStateSpec CVStateSpec::tmc(cplx x, Truncation t) {
  validate(t);
  const double ax = std::abs(x);
  if (!(ax <= kTmcMaxAbsX)) throw DomainError("TMC requires finite |x| <= 30");
  CVStateSpec s;
  s.family_ = Family::tmc;
  s.x_ = x;
  s.trunc_ = t;
  return s;
}

CVStateSpec CVStateSpec::from_mean(Family f, double mean_n, Truncation t) {
  if (!(mean_n >= 0.0) || !std::isfinite(mean_n)) {
    throw DomainError("mean photon number must be finite and >= 0");
  }
  switch (f) {
    case Family::tss:
      if (mean_n > 2.0) throw DomainError("TSS mean photon number must lie in [0, 2]");
      return tss_from_p00(1.0 - 0.5 * mean_n, t);
    case Family::twb:
      return twb(param_from_mean(f, mean_n), t);
    case Family::tmc:
      return tmc(param_from_mean(f, mean_n), t);
  }
  throw DomainError("unknown family");
}

double CVStateSpec::state_parameter() const {
  return family_ == Family::tss ? std::norm(c0_) : std::abs(x_);
}

double FockCoefficients::norm_squared() const {
  double s = 0.0;
  for (const auto& v : c) s += std::norm(v);
  return s;
}

FockCoefficients coefficients(const CVStateSpec& spec) {
  FockCoefficients out;
  const Truncation& t = spec.truncation();
  const double target = 1.0 - t.tail_eps;

  switch (spec.family()) {
    case Family::tss: {
      out.c = {spec.c0(), spec.c1()};
      break;
    }
    case Family::twb: {
      const cplx x = spec.x();
      const double ax2 = std::norm(x);
      if (ax2 > 0.0) {
        // Tail after n_max is |x|^(2(n_max+1)).
        const double need = std::ceil(std::log(t.tail_eps) / std::log(ax2)) - 1.0;
        if (need > static_cast<double>(t.max_n)) {
          throw TruncationOverflow(static_cast<std::size_t>(need), t.max_n);
        }
      }
      cplx term = std::sqrt(1.0 - ax2);
      double cumulative = 0.0;
      for (std::size_t n = 0;; ++n) {
        out.c.push_back(term);
        cumulative += std::norm(term);
        const double analytic_tail = std::pow(ax2, static_cast<double>(n + 1));
        if (analytic_tail <= t.tail_eps || cumulative >= target) break;
        if (n + 1 > t.max_n) throw TruncationOverflow(n + 1, t.max_n);
        term *= x;
      }
      break;
    }
    case Family::tmc: {
      const cplx x = spec.x();
      cplx term = 1.0 / std::sqrt(bessel_i(0, 2.0 * std::abs(x)));
      double cumulative = 0.0;
      for (std::size_t n = 0;; ++n) {
        out.c.push_back(term);
        cumulative += std::norm(term);
        if (cumulative >= target || x == cplx{}) break;
        if (n + 1 > t.max_n) throw TruncationOverflow(n + 1, t.max_n);
        term *= x / static_cast<double>(n + 1);
      }
      break;
    }
  }
  out.tail_bound = 1.0 - out.norm_squared();
  return out;
}

std::vector<double> photon_distribution(const FockCoefficients& coeffs) {
  std::vector<double> p;
  p.reserve(coeffs.c.size());
  for (const auto& v : coeffs.c) p.push_back(std::norm(v));
  return p;
}

double mean_photons(const CVStateSpec& spec) {
  switch (spec.family()) {
    case Family::tss:
      return 2.0 * std::norm(spec.c1());
    case Family::twb: {
      const double ax2 = std::norm(spec.x());
      return 2.0 * ax2 / (1.0 - ax2);
    }
    case Family::tmc:
      return tmc_mean(std::abs(spec.x()));
  }
  return 0.0;
}

double param_from_mean(Family f, double target_n) {
  if (!(target_n >= 0.0) || !std::isfinite(target_n)) {
    throw DomainError("target mean photon number must be finite and >= 0");
  }
  switch (f) {
    case Family::twb:
      return std::sqrt(target_n / (target_n + 2.0));
    case Family::tmc: {
      if (target_n == 0.0) return 0.0;
      double hi = 1.0;
      while (tmc_mean(hi) < target_n) {
        if (hi >= kTmcMaxAbsX) {
          throw DomainError("TMC mean photon number " + std::to_string(target_n) +
                            " beyond supported range");
        }
        hi = std::min(2.0 * hi, kTmcMaxAbsX);
      }
      return bisect_increasing(tmc_mean, target_n, 0.0, hi, 1e-12);
    }
    case Family::tss:
      break;
  }
  throw DomainError("param_from_mean: TSS has no x parameter");
}

double von_neumann_entropy(const FockCoefficients& coeffs) {
  double s = 0.0;
  for (const auto& v : coeffs.c) {
    const double p = std::norm(v);
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

double twb_entropy_closed_form(double abs_x) {
  if (!(abs_x >= 0.0 && abs_x < 1.0)) throw DomainError("TWB entropy needs |x| in [0, 1)");
  if (abs_x == 0.0) return 0.0;
  const double ax2 = abs_x * abs_x;
  return -std::log2(1.0 - ax2) - 2.0 * ax2 / (1.0 - ax2) * std::log2(abs_x);
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

}  // namespace cvq
