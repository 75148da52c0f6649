#pragma once

// Data-parallel kernels. Every kernel takes an Exec policy; the Serial path is
// the reference implementation and both paths return bitwise-identical
// results (per-index outputs, integer reductions).

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "nlc/region.hpp"

namespace nlc::kernels {

enum class Exec { Serial, Parallel };

/// Deterministic points distributed as μ = ν⊗ν: a randomly shifted R2
/// low-discrepancy sequence mapped through Box–Muller (|w|² ~ Exp(1)).
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed);
  Complex operator()(std::uint64_t i) const;

 private:
  double shift_u_;
  double shift_v_;
};

/// Sampling estimates of μ(region) for every region, from the same point set.
std::vector<double> mc_masses(std::span<const Region> regions, std::size_t samples, std::uint64_t seed,
                              Exec exec = Exec::Parallel);

struct AnnulusCheck {
  double r, R;
  double measure;      // engine: mu_radial(K(r,R))
  double closed_form;  // e^{-r²} − e^{-R²}
};

std::vector<AnnulusCheck> annulus_sweep(std::span<const std::pair<double, double>> radii, Exec exec = Exec::Parallel);

struct StripCheck {
  double a, b;
  double measure;   // engine: mu_grid(S(a,b))
  double nu;        // engine: nu_mass(]a,b])
  double erf_form;  // (erf(b) − erf(a)) / 2
};

std::vector<StripCheck> strip_sweep(std::span<const std::pair<double, double>> bounds, Exec exec = Exec::Parallel);

struct PairCheck {
  Complex z1, z2;
  double symdiff_measure;  // μ(A(z1) ⊕ A(z2)) for the quadrant sets
  double bound;            // 2|z2 − z1|
};

std::vector<PairCheck> quadrant_symdiff_sweep(std::span<const std::pair<Complex, Complex>> pairs,
                                              Exec exec = Exec::Parallel);

/// 2t·e^{-t²} at each t.
std::vector<double> mvt_profile(std::span<const double> ts, Exec exec = Exec::Parallel);

}  // namespace nlc::kernels
