#include "nlc/measure.hpp"

#include <cmath>
#include <numbers>

namespace nlc {

double nu_density(double x) { return std::exp(-x * x) / std::sqrt(std::numbers::pi); }

double nu_mass(const Interval& iv) {
  if (iv.empty()) return 0.0;
  const double a = iv.lo().value();
  const double b = iv.hi().value();
  // Far tails go through erfc, where erf would round to ±1. Near the origin
  // erf keeps full relative precision. libm handles the infinities.
  constexpr double kTail = 0.5;
  if (a >= kTail) return 0.5 * (std::erfc(a) - std::erfc(b));
  if (b <= -kTail) return 0.5 * (std::erfc(-b) - std::erfc(-a));
  return 0.5 * (std::erf(b) - std::erf(a));
}

double mu_grid(const GridRegion& r) {
  double total = 0.0;
  for (const auto& c : r.cells()) total += nu_mass(c.x) * nu_mass(c.y);
  return total;
}

double mu_radial(const RadialRegion& r) {
  double total = 0.0;
  for (const auto& ring : r.rings()) {
    const double lo = ring.lo().value();
    const double hi = ring.hi().value();
    // e^{-lo²}(1 − e^{-(hi²−lo²)}); hi = inf gives e^{-lo²}.
    if (std::isinf(hi))
      total += std::exp(-lo * lo);
    else
      total += -std::exp(-lo * lo) * std::expm1(-(hi - lo) * (hi + lo));
  }
  return total;
}

double measure(const Region& r) {
  return r.family() == Family::Grid ? mu_grid(r.grid()) : mu_radial(r.radial());
}

}  // namespace nlc
