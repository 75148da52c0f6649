#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "nlc/divided_difference.hpp"

namespace nlc {

enum class ExampleId {
  Quadrant,   // z ↦ 1_{Re w ≤ Re z, Im w ≤ Im z}, into L⁰
  Annulus,    // z ↦ 1_{|z| ≤ |w| ≤ 1}, into L⁰
  HalfPlane,  // z ↦ 1_{Re w ≤ Re z}, into Lᵖ with ½ < p < 1
};

inline constexpr double kDefaultHalfPlaneP = 0.75;

struct ExampleSpec {
  ExampleId id = ExampleId::Quadrant;
  double p = kDefaultHalfPlaneP;  // used by HalfPlane only

  /// Throws std::invalid_argument for HalfPlane with p ∉ ]½, 1[.
  void validate() const;
};

/// "example1" | "example2" | "example3"
std::string_view to_string(ExampleId id);
ExampleId parse_example_id(std::string_view s);

SimpleFunction quadrant_map(Complex z);
SimpleFunction annulus_map(Complex z);
SimpleFunction halfplane_map(Complex z);

CurveMap make_curve(const ExampleSpec& spec);

/// Gauge realizing the topology of the example's target space.
GaugeSpec target_gauge(const ExampleSpec& spec);

/// z ↦ φ(z)·1_ℂ in the grid family.
CurveMap scalar_curve(std::function<Complex(Complex)> phi);

}  // namespace nlc
