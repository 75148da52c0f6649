#pragma once

#include "nlc/interval.hpp"
#include "nlc/region.hpp"

namespace nlc {

// Gaussian measure ν on ℝ with density e^{-x²}/√π, and μ = ν ⊗ ν on ℂ = ℝ².

/// ν(]lo, hi]) = (erf(hi) − erf(lo)) / 2, evaluated with erfc when both
/// endpoints lie in the same far tail.
double nu_mass(const Interval& iv);

/// Σ over cells of ν(x-interval)·ν(y-interval).
double mu_grid(const GridRegion& r);

/// Σ over rings of e^{-lo²} − e^{-hi²}.
double mu_radial(const RadialRegion& r);

double measure(const Region& r);

/// Density of ν at x.
double nu_density(double x);

}  // namespace nlc
