#include "nlc/kernels.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "nlc/measure.hpp"

namespace nlc::kernels {

namespace {

template <typename R, typename F>
std::vector<R> transform_indexed(std::size_t n, Exec exec, F&& f) {
  std::vector<R> out(n);
  const auto count = static_cast<std::int64_t>(n);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
  } else {
    for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
  }
  return out;
}

// Plastic number; (1/g, 1/g²) is the R2 additive recurrence.
constexpr double kPlastic = 1.32471795724474602596;
constexpr double kAlphaU = 1.0 / kPlastic;
constexpr double kAlphaV = 1.0 / (kPlastic * kPlastic);

double frac(double x) { return x - std::floor(x); }

void count_hits(std::span<const Region> regions, const GaussianSampler& sample, std::int64_t begin,
                std::int64_t end, std::vector<std::uint64_t>& hits) {
  for (std::int64_t i = begin; i < end; ++i) {
    const Complex w = sample(static_cast<std::uint64_t>(i));
    for (std::size_t r = 0; r < regions.size(); ++r)
      if (regions[r].contains(w)) ++hits[r];
  }
}

}  // namespace

GaussianSampler::GaussianSampler(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  shift_u_ = unit(rng);
  shift_v_ = unit(rng);
}

Complex GaussianSampler::operator()(std::uint64_t i) const {
  const double k = static_cast<double>(i + 1);
  const double u = 1.0 - frac(shift_u_ + k * kAlphaU);  // ]0, 1]
  const double v = frac(shift_v_ + k * kAlphaV);
  return std::polar(std::sqrt(-std::log(u)), 2.0 * std::numbers::pi * v);
}

std::vector<double> mc_masses(std::span<const Region> regions, std::size_t samples, std::uint64_t seed, Exec exec) {
  const GaussianSampler sample(seed);
  std::vector<std::uint64_t> hits(regions.size(), 0);
  const auto n = static_cast<std::int64_t>(samples);
  if (exec == Exec::Parallel) {
#pragma omp parallel
    {
      std::vector<std::uint64_t> local(regions.size(), 0);
#pragma omp for schedule(static) nowait
      for (std::int64_t i = 0; i < n; ++i) count_hits(regions, sample, i, i + 1, local);
#pragma omp critical
      for (std::size_t r = 0; r < regions.size(); ++r) hits[r] += local[r];
    }
  } else {
    count_hits(regions, sample, 0, n, hits);
  }
  std::vector<double> out(regions.size());
  for (std::size_t r = 0; r < regions.size(); ++r)
    out[r] = static_cast<double>(hits[r]) / static_cast<double>(samples);
  return out;
}

std::vector<AnnulusCheck> annulus_sweep(std::span<const std::pair<double, double>> radii, Exec exec) {
  return transform_indexed<AnnulusCheck>(radii.size(), exec, [&](std::size_t i) {
    const auto [r, R] = radii[i];
    return AnnulusCheck{r, R, mu_radial(RadialRegion::annulus(r, R)), std::exp(-r * r) - std::exp(-R * R)};
  });
}

std::vector<StripCheck> strip_sweep(std::span<const std::pair<double, double>> bounds, Exec exec) {
  return transform_indexed<StripCheck>(bounds.size(), exec, [&](std::size_t i) {
    const auto [a, b] = bounds[i];
    return StripCheck{a, b, mu_grid(vertical_strip(a, b)), nu_mass(Interval(a, b)),
                      0.5 * (std::erf(b) - std::erf(a))};
  });
}

std::vector<PairCheck> quadrant_symdiff_sweep(std::span<const std::pair<Complex, Complex>> pairs, Exec exec) {
  return transform_indexed<PairCheck>(pairs.size(), exec, [&](std::size_t i) {
    const auto [z1, z2] = pairs[i];
    const Region d = region_symdiff(quadrant_below(z1), quadrant_below(z2));
    return PairCheck{z1, z2, measure(d), 2.0 * std::abs(z2 - z1)};
  });
}

std::vector<double> mvt_profile(std::span<const double> ts, Exec exec) {
  return transform_indexed<double>(ts.size(), exec, [&](std::size_t i) {
    const double t = ts[i];
    return 2.0 * t * std::exp(-t * t);
  });
}

}  // namespace nlc::kernels
