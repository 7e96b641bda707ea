#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cvq/cv_states.hpp"
#include "oracles.hpp"

using namespace cvq;

TEST_CASE("TSS Bell coefficients") {
  const auto c = coefficients(CVStateSpec::tss_from_p00(0.5));
  REQUIRE(c.c.size() == 2);
  CHECK(std::abs(c.c[0] - std::sqrt(0.5)) <= 1e-15);
  CHECK(std::abs(c.c[1] - std::sqrt(0.5)) <= 1e-15);
  const auto p = photon_distribution(c);
  CHECK(p[0] == doctest::Approx(0.5));
  CHECK(p[1] == doctest::Approx(0.5));
  CHECK(von_neumann_entropy(c) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(mean_photons(CVStateSpec::tss_from_p00(0.5)) == doctest::Approx(1.0));
}

TEST_CASE("TSS amplitude validation") {
  CHECK_NOTHROW(CVStateSpec::tss(cplx(0.6), cplx(0, 0.8)));
  CHECK_THROWS_AS(CVStateSpec::tss(0.6, 0.7), DomainError);
  CHECK_THROWS_AS(CVStateSpec::tss_from_p00(1.2), DomainError);
}

TEST_CASE("vacuum twin beam") {
  const auto c = coefficients(CVStateSpec::twb(0.0));
  REQUIRE(c.c.size() == 1);
  CHECK(c.c[0] == cplx(1.0));
  CHECK(von_neumann_entropy(c) == 0.0);
  CHECK(mean_photons(CVStateSpec::tmc(0.0)) == 0.0);
}

TEST_CASE("TMC |x| = 1 normalization") {
  const auto c = coefficients(CVStateSpec::tmc(1.0));
  const double c0 = 1.0 / std::sqrt(oracle::bessel_series(0, 2.0));
  CHECK(c.c[0].real() == doctest::Approx(c0).epsilon(1e-14));
  double fact = 1.0, sum = 0.0;
  for (std::size_t n = 0; n < c.c.size(); ++n) {
    if (n > 0) fact *= static_cast<double>(n);
    CHECK(std::abs(c.c[n] - c0 / fact) <= 1e-15);
    sum += std::norm(c.c[n]);
  }
  CHECK(sum >= 1.0 - 1e-12);
  CHECK(sum <= 1.0 + 1e-14);
}

TEST_CASE("truncation keeps the tail below tail_eps") {
  for (Family f : {Family::twb, Family::tmc}) {
    for (double n : {0.1, 1.0, 4.0, 10.0}) {
      const auto spec = CVStateSpec::from_mean(f, n);
      const auto c = coefficients(spec);
      const double s = c.norm_squared();
      CHECK(s >= 1.0 - 1e-12);
      CHECK(s <= 1.0 + 1e-14);
      // minimality: dropping the last term breaks the bound
      CHECK(s - std::norm(c.c.back()) < 1.0 - 1e-12);
    }
  }
  // TWB tail after n_max is |x|^(2 (n_max + 1)); at <N> = 4, |x|^2 = 2/3.
  const std::size_t expect = static_cast<std::size_t>(std::ceil(std::log(1e-12) / std::log(2.0 / 3.0))) - 1;
  CHECK(coefficients(CVStateSpec::from_mean(Family::twb, 4.0)).n_max() == expect);
}

TEST_CASE("truncation overflow") {
  Truncation t;
  t.max_n = 10;
  CHECK_THROWS_AS(coefficients(CVStateSpec::twb(0.9, t)), TruncationOverflow);
  CHECK_THROWS_AS(coefficients(CVStateSpec::tmc(5.0, t)), TruncationOverflow);
  CHECK_THROWS_AS(CVStateSpec::twb(1.0), DomainError);
}

TEST_CASE("mean photon numbers") {
  CHECK(mean_photons(CVStateSpec::twb(std::sqrt(1.0 / 3.0))) == doctest::Approx(1.0).epsilon(1e-14));
  const double x = 1.3;
  const double ref = 2 * x * oracle::bessel_series(1, 2 * x) / oracle::bessel_series(0, 2 * x);
  CHECK(mean_photons(CVStateSpec::tmc(x)) == doctest::Approx(ref).epsilon(1e-13));
}

TEST_CASE("param_from_mean") {
  CHECK(param_from_mean(Family::twb, 0.0) == 0.0);
  CHECK(param_from_mean(Family::twb, 2.0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  const double x = param_from_mean(Family::tmc, 1.09);
  CHECK(std::abs(mean_photons(CVStateSpec::tmc(x)) - 1.09) <= 1e-9);
  for (double n : {0.0, 0.02, 0.5, 3.0, 20.0}) {
    for (Family f : {Family::twb, Family::tmc}) {
      CHECK(std::abs(mean_photons(CVStateSpec::from_mean(f, n)) - n) <= 1e-9);
    }
  }
  CHECK_THROWS_AS(param_from_mean(Family::tss, 1.0), DomainError);
  CHECK_THROWS_AS(param_from_mean(Family::twb, -1.0), DomainError);
}

TEST_CASE("photon distributions at the tabulated energies") {
  const auto twb = photon_distribution(coefficients(CVStateSpec::from_mean(Family::twb, 1.82)));
  CHECK(std::abs(twb[0] - 0.52) <= 0.01);
  CHECK(std::abs(twb[1] - 0.25) <= 0.01);
  const auto tmc = photon_distribution(coefficients(CVStateSpec::from_mean(Family::tmc, 1.09)));
  CHECK(std::abs(tmc[0] - 0.54) <= 0.01);
  CHECK(std::abs(tmc[1] - 0.39) <= 0.01);
}

TEST_CASE("TWB entropy closed form") {
  const double x = std::sqrt(1.0 / 3.0);
  const auto c = coefficients(CVStateSpec::twb(x));
  CHECK(std::abs(von_neumann_entropy(c) - twb_entropy_closed_form(x)) <= 1e-8);
  for (double ax : {0.1, 0.5, 0.8, 0.95}) {
    CHECK(std::abs(von_neumann_entropy(coefficients(CVStateSpec::twb(ax))) -
                   twb_entropy_closed_form(ax)) <= 1e-8);
  }
}

TEST_CASE("TWB entropy dominates TMC at equal mean photon number") {
  for (double n : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    const double s_twb = von_neumann_entropy(coefficients(CVStateSpec::from_mean(Family::twb, n)));
    const double s_tmc = von_neumann_entropy(coefficients(CVStateSpec::from_mean(Family::tmc, n)));
    CHECK(s_twb > s_tmc);
  }
}

TEST_CASE("family names") {
  CHECK(parse_family("tmc") == Family::tmc);
  CHECK(to_string(Family::twb) == "twb");
  CHECK_THROWS_AS(parse_family("TMC"), DomainError);
}

TEST_CASE("binary entropy") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0));
  CHECK(binary_entropy(0.2) == doctest::Approx(oracle::binary_entropy(0.2)).epsilon(1e-14));
}
