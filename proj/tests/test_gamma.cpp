#include <gtest/gtest.h>

#include <cmath>

#include "hyperfpp/gamma.hpp"
#include "test_support.hpp"

using namespace hyperfpp;
using namespace hyperfpp::testing;

TEST(GammaLowerCdf, ExponentialCase) {
  for (double x : {0.01, 0.1, 1.0, 3.0, 20.0}) EXPECT_LT(relative_error(gamma_lower_cdf(1, x).cdf, -std::expm1(-x)), 1e-14);
}

TEST(GammaLowerCdf, ClosedFormSpotValues) {
  EXPECT_NEAR(gamma_lower_cdf(2, 1.0).cdf, 1.0 - 2.0 / std::exp(1.0), 1e-15);
  EXPECT_NEAR(gamma_lower_cdf(2, 1.0).cdf, 0.264241, 5e-7);
  const GammaTail g = gamma_lower_cdf(1, 1.0);
  EXPECT_NEAR(g.correction, std::exp(1.0) - 2.0, 1e-15);
  EXPECT_LE(g.correction, std::exp(1.0) / 2.0);
}

TEST(GammaLowerCdf, GridAgainstHighPrecisionSum) {
  for (int n = 1; n <= 50; ++n)
    for (double x : {0.1, 0.5, 1.0, 1.5, 2.0, 3.0}) {
      const GammaTail g = gamma_lower_cdf(n, x);
      EXPECT_LT(relative_error(g.cdf, gamma_cdf_complement_sum(n, x)), 1e-12) << n << " " << x;
      EXPECT_GE(g.correction, 0.0);
      EXPECT_LE(g.correction, std::exp(x) * x / (n + 1.0));
      const double prefactor = std::exp(-x + n * std::log(x) - std::lgamma(n + 1.0));
      EXPECT_LT(relative_error(g.cdf, (1.0 + g.correction) * prefactor), 1e-12);
    }
}

TEST(GammaLowerCdf, EdgeCasesAndErrors) {
  EXPECT_EQ(gamma_lower_cdf(0, 2.0).cdf, 1.0);
  EXPECT_EQ(gamma_lower_cdf(3, 0.0).cdf, 0.0);
  EXPECT_THROW(gamma_lower_cdf(3, 701.0), DomainError);
  EXPECT_THROW(gamma_lower_cdf(3, -1.0), DomainError);
  EXPECT_LT(relative_error(gamma_lower_cdf(400, 300.0).cdf, gamma_cdf_complement_sum(400, 300.0)), 1e-10);
}

TEST(LogGammaTail, AgreesWithLinearSpace) {
  for (int n : {1, 2, 5, 20, 50, 150})
    for (double x : {0.1, 1.0, 2.5, 10.0}) {
      const double lin = gamma_lower_cdf(n, x).cdf;
      EXPECT_NEAR(log_gamma_tail(n, x), std::log(lin), 1e-12 * std::max(1.0, std::abs(std::log(lin))));
    }
}

TEST(LogGammaTail, FiniteFarOutside) {
  EXPECT_TRUE(std::isfinite(log_gamma_tail(1e16, 1.1)));
  EXPECT_LT(log_gamma_tail(1e16, 1.1), 0.0);
  EXPECT_NEAR(log_gamma_tail(5, 800.0), 0.0, 1e-12);
  const double mid = log_gamma_tail(1000, 1000.0);
  EXPECT_NEAR(std::exp(mid), 0.5, 0.01);  // median of Gamma(n) is close to n
  EXPECT_TRUE(std::isfinite(log_gamma_tail(3000, 900.0)));
  EXPECT_NEAR(log_gamma_tail(800, 1000.0), 0.0, 1e-6);
}

TEST(MarkovUpper, SeriesValues) {
  EXPECT_LT(relative_error(markov_upper(10, 0.5), factorial_times_cdf(10, 0.5)), 1e-12);
  EXPECT_LT(relative_error(markov_upper(14, 0.7), factorial_times_cdf(14, 0.7)), 1e-12);
  EXPECT_NEAR(markov_upper(10, 0.5), 6.2040506025013e-4, 1e-15);
  EXPECT_NEAR(markov_upper(14, 0.7), 3.5322982061678724e-3, 1e-14);
  const double at50 = markov_upper(50, 1.0);
  EXPECT_GT(at50, 0.36);
  EXPECT_LT(at50, 0.38);
  EXPECT_EQ(markov_upper(3, 5.0), 1.0);
  EXPECT_EQ(markov_upper(5, 5.0), 1.0);
  EXPECT_EQ(markov_upper(5, 900.0), 1.0);
}

TEST(JointTail, IndependentSums) {
  const auto s = derive_replica(Seed{61}, 0);
  const auto est = joint_tail_check(6, 0, 4.0, 200000, s);
  const double p = gamma_lower_cdf(6, 4.0).cdf;
  EXPECT_NEAR(est.estimate, p * p, 3.0 * std::sqrt(p * p * (1 - p * p) / 200000));
  EXPECT_NEAR(est.bound, p * p, 1e-15);
}

TEST(JointTail, IdenticalSums) {
  const auto s = derive_replica(Seed{62}, 0);
  const auto est = joint_tail_check(5, 5, 3.0, 200000, s);
  const double p = gamma_lower_cdf(5, 3.0).cdf;
  EXPECT_NEAR(est.estimate, p, 3.0 * std::sqrt(p * (1 - p) / 200000));
  EXPECT_EQ(est.bound, p);
}

TEST(JointTail, ProductBoundDominates) {
  const auto est = joint_tail_check(6, 3, 1.5, 1000000, derive_replica(Seed{63}, 0));
  EXPECT_LE(est.estimate, est.bound + 3.0 * est.sigma);
  EXPECT_THROW(joint_tail_check(6, 7, 1.5, 10, derive_replica(Seed{63}, 0)), DomainError);
}
