#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <random>

#include "nlc/kernels.hpp"
#include "nlc/measure.hpp"
#include "generators.hpp"

using namespace nlc;
using namespace nlc::kernels;

namespace {

bool bitwise_equal(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

std::vector<Region> oracle_regions() {
  return {
      RadialRegion::annulus(0.0, 1.0),
      RadialRegion::annulus(0.3, 0.7),
      RadialRegion::annulus(1.0, 2.0),
      vertical_strip(0.0, 1.0),
      vertical_strip(-2.0, -0.5),
      horizontal_strip(-0.25, 0.25),
      quadrant_below({1.0, 1.0}),
      quadrant_below({-0.5, 0.3}),
  };
}

}  // namespace

TEST(GaussianSampler, DeterministicAndSeedDependent) {
  const GaussianSampler a(7), b(7), c(8);
  for (std::uint64_t i = 0; i < 100; ++i) EXPECT_EQ(a(i), b(i));
  EXPECT_NE(a(0), c(0));
}

TEST(GaussianSampler, RadialLawIsExponential) {
  // |w|² ~ Exp(1): mean 1, second moment 2
  const GaussianSampler s(3);
  double m1 = 0.0, m2 = 0.0;
  constexpr int n = 200'000;
  for (int i = 0; i < n; ++i) {
    const double r2 = std::norm(s(i));
    m1 += r2;
    m2 += r2 * r2;
  }
  EXPECT_NEAR(m1 / n, 1.0, 1e-3);
  EXPECT_NEAR(m2 / n, 2.0, 1e-2);
}

TEST(McMasses, SerialAndParallelAgreeBitwise) {
  const auto regions = oracle_regions();
  const auto s = mc_masses(regions, 100'000, 42, Exec::Serial);
  const auto p = mc_masses(regions, 100'000, 42, Exec::Parallel);
  ASSERT_EQ(s.size(), p.size());
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_TRUE(bitwise_equal(s[i], p[i])) << i;
}

TEST(McMasses, AgreesWithExactMeasureToThreeDigits) {
  const auto regions = oracle_regions();
  const auto est = mc_masses(regions, 1'000'000, 42);
  for (std::size_t i = 0; i < regions.size(); ++i) {
    const double exact = measure(regions[i]);
    const double half_unit = 0.5 * std::pow(10.0, std::floor(std::log10(exact)) - 2);
    EXPECT_LE(std::abs(est[i] - exact), half_unit) << i << ": " << est[i] << " vs " << exact;
  }
}

TEST(AnnulusSweep, MatchesClosedFormAndBound) {
  std::vector<std::pair<double, double>> radii;
  for (int i = 0; i < 100; ++i)
    for (int j = 0; j < 100; ++j) {
      const double r = 3.0 * i / 99.0, R = 3.0 * j / 99.0;
      if (r <= R) radii.emplace_back(r, R);
    }
  const auto s = annulus_sweep(radii, Exec::Serial);
  const auto p = annulus_sweep(radii, Exec::Parallel);
  ASSERT_EQ(s.size(), radii.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_TRUE(bitwise_equal(s[i].measure, p[i].measure));
    EXPECT_NEAR(s[i].measure, std::exp(-s[i].r * s[i].r) - std::exp(-s[i].R * s[i].R), 1e-12);
    EXPECT_LE(s[i].measure, s[i].R - s[i].r + 1e-15);
  }
}

TEST(StripSweep, MatchesErfForm) {
  std::vector<std::pair<double, double>> bounds;
  for (int i = 0; i < 100; ++i)
    for (int j = 0; j < 100; ++j) {
      const double a = -3.0 + 6.0 * i / 99.0, b = -3.0 + 6.0 * j / 99.0;
      if (a <= b) bounds.emplace_back(a, b);
    }
  const auto s = strip_sweep(bounds, Exec::Serial);
  const auto p = strip_sweep(bounds, Exec::Parallel);
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_TRUE(bitwise_equal(s[i].measure, p[i].measure));
    EXPECT_EQ(s[i].measure, s[i].nu);
    EXPECT_NEAR(s[i].measure, (std::erf(s[i].b) - std::erf(s[i].a)) / 2.0, 1e-12);
    EXPECT_LE(s[i].measure, s[i].b - s[i].a + 1e-15);
  }
}

TEST(QuadrantSymdiffSweep, BoundHolds) {
  std::mt19937_64 rng(41);
  std::vector<std::pair<Complex, Complex>> pairs;
  for (int i = 0; i < 10'000; ++i) pairs.emplace_back(testgen::random_point(rng, 2.0), testgen::random_point(rng, 2.0));
  const auto s = quadrant_symdiff_sweep(pairs, Exec::Serial);
  const auto p = quadrant_symdiff_sweep(pairs, Exec::Parallel);
  int violations = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_TRUE(bitwise_equal(s[i].symdiff_measure, p[i].symdiff_measure));
    if (s[i].symdiff_measure > s[i].bound) ++violations;
  }
  EXPECT_EQ(violations, 0);
}

TEST(MvtProfile, PeakIsSqrtTwoOverE) {
  std::vector<double> ts;
  for (int i = 0; i <= 100'000; ++i) ts.push_back(10.0 * i / 100'000.0);
  const auto s = mvt_profile(ts, Exec::Serial);
  const auto p = mvt_profile(ts, Exec::Parallel);
  const auto peak = std::max_element(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_TRUE(bitwise_equal(s[i], p[i]));
  EXPECT_NEAR(*peak, std::sqrt(2.0 / std::numbers::e), 1e-9);
  EXPECT_NEAR(ts[static_cast<std::size_t>(peak - s.begin())], 1.0 / std::numbers::sqrt2, 1e-4);
  EXPECT_LT(*peak, 1.0);
}
