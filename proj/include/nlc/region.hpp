#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nlc/interval.hpp"

namespace nlc {

using Complex = std::complex<double>;

enum class Family { Grid, Radial };

std::string_view to_string(Family f);

/// Raised when grid and radial objects are combined.
class FamilyMismatch : public std::invalid_argument {
 public:
  FamilyMismatch() : std::invalid_argument("operands belong to different region families") {}
};

/// Axis-aligned generalized rectangle ]x.lo,x.hi] × ]y.lo,y.hi].
struct Cell {
  Interval x;
  Interval y;

  bool empty() const { return x.empty() || y.empty(); }
  bool contains(Complex w) const { return x.contains(w.real()) && y.contains(w.imag()); }
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Finite union of rectangles, stored in canonical vertical-slab form:
/// maximal x-slabs on which the vertical cross-section is constant, each
/// cross-section a canonical IntervalSet. Structural equality is set equality.
class GridRegion {
 public:
  GridRegion() = default;
  /// Union of arbitrary (possibly overlapping) rectangles.
  explicit GridRegion(std::vector<Cell> rects);

  static GridRegion whole_plane() { return GridRegion({Cell{Interval::all(), Interval::all()}}); }
  static GridRegion rectangle(Interval x, Interval y) { return GridRegion({Cell{x, y}}); }

  /// Canonical region from a raster: cell (i,j) = ]xs[i],xs[i+1]] × ]ys[j],ys[j+1]],
  /// mask stored row-major in i (mask[i * ny + j]).
  static GridRegion from_mask(const std::vector<double>& xs, const std::vector<double>& ys,
                              const std::vector<char>& mask);

  const std::vector<Cell>& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }
  bool contains(Complex w) const;

  void collect_breakpoints(std::vector<double>& xs, std::vector<double>& ys) const;

  friend bool operator==(const GridRegion&, const GridRegion&) = default;

 private:
  std::vector<Cell> cells_;
};

/// Finite union of annuli, stored as a canonical set of radius intervals.
/// A ring whose inner radius is 0 also contains the origin.
class RadialRegion {
 public:
  RadialRegion() = default;
  explicit RadialRegion(std::vector<Interval> rings);
  explicit RadialRegion(IntervalSet rings);

  /// Annulus K(r, R) = { r ≤ |w| ≤ R } (stored as ]r, R]).
  static RadialRegion annulus(double r, double R);
  static RadialRegion whole_plane() { return annulus(0.0, std::numeric_limits<double>::infinity()); }

  const std::vector<Interval>& rings() const { return rings_.pieces(); }
  const IntervalSet& ring_set() const { return rings_; }
  bool empty() const { return rings_.empty(); }
  bool contains(Complex w) const;

  friend bool operator==(const RadialRegion&, const RadialRegion&) = default;

 private:
  IntervalSet rings_;
};

/// Tagged region. Boolean operations require both operands to share a family.
class Region {
 public:
  Region(GridRegion g) : rep_(std::move(g)) {}    // NOLINT
  Region(RadialRegion r) : rep_(std::move(r)) {}  // NOLINT

  static Region empty_of(Family f);
  static Region whole_plane(Family f);

  Family family() const { return std::holds_alternative<GridRegion>(rep_) ? Family::Grid : Family::Radial; }
  const GridRegion& grid() const;
  const RadialRegion& radial() const;

  bool empty() const;
  bool contains(Complex w) const;

  friend bool operator==(const Region&, const Region&) = default;

 private:
  std::variant<GridRegion, RadialRegion> rep_;
};

Region region_union(const Region& a, const Region& b);
Region region_intersect(const Region& a, const Region& b);
Region region_difference(const Region& a, const Region& b);
Region region_symdiff(const Region& a, const Region& b);
Region region_complement(const Region& a);

/// Exact inclusion test (a ∖ b is structurally empty).
bool region_subset(const Region& a, const Region& b);

// Named sets used by the example maps and their proofs.

/// ]−∞, x] × ]−∞, y]
GridRegion quadrant_below(Complex z);
/// ]−∞, x] × ℝ
GridRegion halfplane_left(double x);
/// S(a, b) = ]a, b] × ℝ
GridRegion vertical_strip(double a, double b);
/// ℝ × ]a, b]
GridRegion horizontal_strip(double a, double b);

}  // namespace nlc
