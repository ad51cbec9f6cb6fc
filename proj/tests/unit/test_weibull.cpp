#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "../oracles.hpp"
#include "sentinet/rng.hpp"
#include "sentinet/weibull.hpp"

using namespace sentinet;

namespace {

std::vector<double> draw(const WeibullParams& p, std::size_t n, std::uint64_t key) {
  const CounterRng rng(2024, Stream::Aux, key);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = sample_sleep_time(p, rng.uniform(i));
  return out;
}

}  // namespace

TEST(WeibullParams, RejectsNonPositive) {
  EXPECT_THROW(WeibullParams(0.0, 2.0), std::invalid_argument);
  EXPECT_THROW(WeibullParams(0.05, -1.0), std::invalid_argument);
  EXPECT_THROW(WeibullParams(std::numeric_limits<double>::infinity(), 2.0), std::invalid_argument);
  EXPECT_THROW(WeibullParams(std::nan(""), 2.0), std::invalid_argument);
}

TEST(SampleSleepTime, KnownValues) {
  // u = e^-1 puts ln(1/u) at 1, so t = 1/scale for any shape.
  EXPECT_NEAR(sample_sleep_time(WeibullParams(0.05, 2.0), std::exp(-1.0)), 20.0, 1e-12);
  EXPECT_NEAR(sample_sleep_time(WeibullParams(0.05, 1.0), 0.5), std::log(2.0) / 0.05, 1e-12);
  EXPECT_THROW(sample_sleep_time(WeibullParams(1.0, 1.0), 0.0), std::invalid_argument);
  EXPECT_THROW(sample_sleep_time(WeibullParams(1.0, 1.0), 1.0), std::invalid_argument);
}

TEST(SampleSleepTime, AlwaysFinitePositive) {
  for (double shape : {0.5, 1.0, 2.0, 3.0}) {
    for (double t : draw(WeibullParams(0.05, shape), 20000, 1)) {
      ASSERT_TRUE(std::isfinite(t));
      ASSERT_GT(t, 0.0);
    }
  }
}

TEST(SampleSleepTime, KolmogorovSmirnovRejectionRate) {
  // A correct sampler is rejected at alpha = 0.01 about 1% of the time; over
  // 20 independent replicates per pair, 3 or more rejections has p < 0.002.
  struct Case {
    double lambda, beta;
  };
  for (const Case c : {Case{0.05, 1.0}, Case{0.05, 2.0}, Case{0.1, 3.0}}) {
    int rejected = 0;
    for (std::uint64_t rep = 0; rep < 20; ++rep) {
      const auto xs = draw(WeibullParams(c.lambda, c.beta), 100000, 1000 * static_cast<std::uint64_t>(c.beta) + rep);
      const double d = oracle::ks_statistic(xs, [&](double t) { return oracle::weibull_cdf(c.lambda, c.beta, t); });
      rejected += oracle::kolmogorov_pvalue(d, xs.size()) < 0.01 ? 1 : 0;
    }
    EXPECT_LT(rejected, 3) << "lambda=" << c.lambda << " beta=" << c.beta;
  }
}

TEST(SampleSleepTime, MeanMatchesGamma) {
  for (double beta : {1.0, 2.0, 3.0}) {
    const auto xs = draw(WeibullParams(0.05, beta), 100000, 77);
    double sum = 0.0;
    for (double x : xs) sum += x;
    const double expect = std::tgamma(1.0 + 1.0 / beta) / 0.05;
    EXPECT_NEAR(sum / xs.size(), expect, 0.01 * expect) << beta;
  }
}

TEST(SampleSleepTime, ShapeTwoIsRayleigh) {
  // Rayleigh with sigma: F = 1 - exp(-t^2 / (2 sigma^2)); matched sigma = 1/(lambda sqrt 2).
  const double lambda = 0.05;
  const double sigma = 1.0 / (lambda * std::sqrt(2.0));
  const auto xs = draw(WeibullParams(lambda, 2.0), 100000, 11);
  const double d = oracle::ks_statistic(xs, [&](double t) { return 1.0 - std::exp(-t * t / (2 * sigma * sigma)); });
  EXPECT_GT(oracle::kolmogorov_pvalue(d, xs.size()), 0.01);
}

TEST(SampleSleepTime, KsDetectsWrongShape) {
  const auto xs = draw(WeibullParams(0.05, 2.0), 100000, 12);
  const double d = oracle::ks_statistic(xs, [](double t) { return oracle::weibull_cdf(0.05, 1.0, t); });
  EXPECT_LT(oracle::kolmogorov_pvalue(d, xs.size()), 1e-6);
}

TEST(HazardRate, MatchesClosedForm) {
  EXPECT_DOUBLE_EQ(hazard_rate(WeibullParams(1.0, 2.0), 3.0), 6.0);
  EXPECT_NEAR(update_probe_rate(WeibullParams(0.05, 2.0), 100.0).scale(), 0.5, 1e-15);
  for (double t : {0.0, 1.0, 10.0, 500.0}) EXPECT_EQ(hazard_rate(WeibullParams(0.05, 1.0), t), 0.05);
  EXPECT_THROW(hazard_rate(WeibullParams(1.0, 0.5), 0.0), HazardSingularity);
  EXPECT_THROW(hazard_rate(WeibullParams(1.0, 2.0), -1.0), std::invalid_argument);
  EXPECT_EQ(hazard_rate(WeibullParams(1.0, 2.0), 0.0), 0.0);
}

TEST(UpdateProbeRate, KeepsShapeAndIsMonotone) {
  const WeibullParams p(0.05, 2.0);
  double last = 0.0;
  for (double t = 1.0; t < 1000.0; t *= 1.7) {
    const WeibullParams q = update_probe_rate(p, t);
    EXPECT_EQ(q.shape(), p.shape());
    EXPECT_GT(q.scale(), last);
    last = q.scale();
  }
  // A zero hazard is not a valid scale.
  EXPECT_THROW(update_probe_rate(p, 0.0), std::invalid_argument);
}

TEST(WeibullHelpers, QuantileInvertsCdf) {
  const WeibullParams p(0.05, 2.0);
  for (double q : {0.1, 0.5, 0.9, 0.999}) EXPECT_NEAR(weibull_cdf(p, weibull_quantile(p, q)), q, 1e-12);
  EXPECT_NEAR(weibull_mean(p), std::tgamma(1.5) / 0.05, 1e-12);
}
