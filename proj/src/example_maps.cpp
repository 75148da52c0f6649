#include "nlc/example_maps.hpp"

#include <stdexcept>

namespace nlc {

void ExampleSpec::validate() const {
  if (id == ExampleId::HalfPlane && !(p > 0.5 && p < 1.0))
    throw std::invalid_argument("example3 requires 1/2 < p < 1");
}

std::string_view to_string(ExampleId id) {
  switch (id) {
    case ExampleId::Quadrant: return "example1";
    case ExampleId::Annulus: return "example2";
    case ExampleId::HalfPlane: return "example3";
  }
  return "example1";
}

ExampleId parse_example_id(std::string_view s) {
  if (s == "example1") return ExampleId::Quadrant;
  if (s == "example2") return ExampleId::Annulus;
  if (s == "example3") return ExampleId::HalfPlane;
  throw std::invalid_argument("unknown example: " + std::string(s));
}

SimpleFunction quadrant_map(Complex z) { return indicator(quadrant_below(z)); }

SimpleFunction annulus_map(Complex z) {
  const double r = std::abs(z);
  if (r > 1.0) return SimpleFunction::zero(Family::Radial);
  return indicator(RadialRegion::annulus(r, 1.0));
}

SimpleFunction halfplane_map(Complex z) { return indicator(halfplane_left(z.real())); }

CurveMap make_curve(const ExampleSpec& spec) {
  spec.validate();
  switch (spec.id) {
    case ExampleId::Quadrant: return {Family::Grid, quadrant_map};
    case ExampleId::Annulus: return {Family::Radial, annulus_map};
    case ExampleId::HalfPlane: return {Family::Grid, halfplane_map};
  }
  throw std::invalid_argument("unknown example");
}

GaugeSpec target_gauge(const ExampleSpec& spec) {
  if (spec.id == ExampleId::HalfPlane) return {GaugeSpec::Kind::Lp, spec.p};
  return {GaugeSpec::Kind::L0, spec.p};
}

CurveMap scalar_curve(std::function<Complex(Complex)> phi) {
  return {Family::Grid, [phi = std::move(phi)](Complex z) {
            const Complex c = phi(z);
            if (c == Complex{}) return SimpleFunction::zero(Family::Grid);
            return SimpleFunction(Family::Grid, {Term{c, Region(GridRegion::whole_plane())}});
          }};
}

}  // namespace nlc
