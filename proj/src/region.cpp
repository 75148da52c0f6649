#include "nlc/region.hpp"

#include <algorithm>
#include <functional>

namespace nlc {

std::string_view to_string(Family f) { return f == Family::Grid ? "grid" : "radial"; }

namespace {

using BoolOp = std::function<bool(bool, bool)>;

std::vector<char> rasterize(const GridRegion& r, const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t ny = ys.size() - 1;
  std::vector<char> mask((xs.size() - 1) * ny, 0);
  for (const auto& c : r.cells()) {
    auto [i0, i1] = covered_span(xs, c.x);
    auto [j0, j1] = covered_span(ys, c.y);
    for (std::size_t i = i0; i < i1; ++i)
      for (std::size_t j = j0; j < j1; ++j) mask[i * ny + j] = 1;
  }
  return mask;
}

std::vector<char> rasterize(const IntervalSet& s, const std::vector<double>& breaks) {
  std::vector<char> mask(breaks.size() - 1, 0);
  for (const auto& iv : s.pieces()) {
    auto [i0, i1] = covered_span(breaks, iv);
    std::fill(mask.begin() + static_cast<std::ptrdiff_t>(i0), mask.begin() + static_cast<std::ptrdiff_t>(i1), 1);
  }
  return mask;
}

GridRegion combine(const GridRegion& a, const GridRegion& b, const BoolOp& op) {
  std::vector<double> xs, ys;
  a.collect_breakpoints(xs, ys);
  b.collect_breakpoints(xs, ys);
  xs = breakpoints_with_infinities(std::move(xs));
  ys = breakpoints_with_infinities(std::move(ys));
  auto ma = rasterize(a, xs, ys);
  auto mb = rasterize(b, xs, ys);
  for (std::size_t i = 0; i < ma.size(); ++i) ma[i] = op(ma[i] != 0, mb[i] != 0) ? 1 : 0;
  return GridRegion::from_mask(xs, ys, ma);
}

std::vector<double> radial_breakpoints(const RadialRegion& a, const RadialRegion& b) {
  std::vector<double> pts{0.0, std::numeric_limits<double>::infinity()};
  for (const auto* r : {&a, &b})
    for (const auto& iv : r->rings()) {
      pts.push_back(iv.lo().value());
      pts.push_back(iv.hi().value());
    }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

RadialRegion combine(const RadialRegion& a, const RadialRegion& b, const BoolOp& op) {
  auto rs = radial_breakpoints(a, b);
  auto ma = rasterize(a.ring_set(), rs);
  auto mb = rasterize(b.ring_set(), rs);
  for (std::size_t i = 0; i < ma.size(); ++i) ma[i] = op(ma[i] != 0, mb[i] != 0) ? 1 : 0;
  return RadialRegion(IntervalSet::from_mask(rs, ma));
}

Region combine(const Region& a, const Region& b, const BoolOp& op) {
  if (a.family() != b.family()) throw FamilyMismatch();
  if (a.family() == Family::Grid) return combine(a.grid(), b.grid(), op);
  return combine(a.radial(), b.radial(), op);
}

}  // namespace

GridRegion::GridRegion(std::vector<Cell> rects) {
  std::erase_if(rects, [](const Cell& c) { return c.empty(); });
  if (rects.empty()) return;
  GridRegion raw;
  raw.cells_ = std::move(rects);
  std::vector<double> xs, ys;
  raw.collect_breakpoints(xs, ys);
  xs = breakpoints_with_infinities(std::move(xs));
  ys = breakpoints_with_infinities(std::move(ys));
  *this = from_mask(xs, ys, rasterize(raw, xs, ys));
}

GridRegion GridRegion::from_mask(const std::vector<double>& xs, const std::vector<double>& ys,
                                 const std::vector<char>& mask) {
  const std::size_t nx = xs.size() - 1;
  const std::size_t ny = ys.size() - 1;
  GridRegion out;
  IntervalSet current;
  std::size_t slab_start = 0;
  auto flush = [&](std::size_t slab_end) {
    for (const auto& y : current.pieces()) out.cells_.push_back(Cell{Interval(xs[slab_start], xs[slab_end]), y});
  };
  std::vector<char> column(ny);
  for (std::size_t i = 0; i < nx; ++i) {
    std::copy_n(mask.begin() + static_cast<std::ptrdiff_t>(i * ny), ny, column.begin());
    IntervalSet section = IntervalSet::from_mask(ys, column);
    if (i > 0 && section == current) continue;
    flush(i);
    current = std::move(section);
    slab_start = i;
  }
  flush(nx);
  return out;
}

bool GridRegion::contains(Complex w) const {
  return std::any_of(cells_.begin(), cells_.end(), [&](const Cell& c) { return c.contains(w); });
}

void GridRegion::collect_breakpoints(std::vector<double>& xs, std::vector<double>& ys) const {
  for (const auto& c : cells_) {
    xs.push_back(c.x.lo().value());
    xs.push_back(c.x.hi().value());
    ys.push_back(c.y.lo().value());
    ys.push_back(c.y.hi().value());
  }
}

RadialRegion::RadialRegion(std::vector<Interval> rings) : RadialRegion(IntervalSet(std::move(rings))) {}

RadialRegion::RadialRegion(IntervalSet rings) : rings_(std::move(rings)) {
  for (const auto& iv : rings_.pieces())
    if (iv.lo().value() < 0.0) throw std::invalid_argument("RadialRegion: negative radius");
}

RadialRegion RadialRegion::annulus(double r, double R) {
  if (!(r >= 0.0) || !(r <= R)) throw std::invalid_argument("annulus: need 0 <= r <= R");
  return RadialRegion(std::vector<Interval>{Interval(r, R)});
}

bool RadialRegion::contains(Complex w) const {
  const double r = std::abs(w);
  if (r == 0.0) return !rings_.empty() && rings_.pieces().front().lo().value() == 0.0;
  return rings_.contains(r);
}

Region Region::empty_of(Family f) {
  if (f == Family::Grid) return GridRegion{};
  return RadialRegion{};
}

Region Region::whole_plane(Family f) {
  if (f == Family::Grid) return GridRegion::whole_plane();
  return RadialRegion::whole_plane();
}

const GridRegion& Region::grid() const {
  if (const auto* g = std::get_if<GridRegion>(&rep_)) return *g;
  throw FamilyMismatch();
}

const RadialRegion& Region::radial() const {
  if (const auto* r = std::get_if<RadialRegion>(&rep_)) return *r;
  throw FamilyMismatch();
}

bool Region::empty() const {
  return std::visit([](const auto& r) { return r.empty(); }, rep_);
}

bool Region::contains(Complex w) const {
  return std::visit([&](const auto& r) { return r.contains(w); }, rep_);
}

Region region_union(const Region& a, const Region& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

Region region_intersect(const Region& a, const Region& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

Region region_difference(const Region& a, const Region& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

Region region_symdiff(const Region& a, const Region& b) {
  return combine(a, b, [](bool x, bool y) { return x != y; });
}

Region region_complement(const Region& a) {
  return combine(a, Region::empty_of(a.family()), [](bool x, bool) { return !x; });
}

bool region_subset(const Region& a, const Region& b) { return region_difference(a, b).empty(); }

GridRegion quadrant_below(Complex z) {
  return GridRegion::rectangle(Interval::up_to(z.real()), Interval::up_to(z.imag()));
}

GridRegion halfplane_left(double x) { return GridRegion::rectangle(Interval::up_to(x), Interval::all()); }

GridRegion vertical_strip(double a, double b) {
  return GridRegion::rectangle(Interval(a, b), Interval::all());
}

GridRegion horizontal_strip(double a, double b) {
  return GridRegion::rectangle(Interval::all(), Interval(a, b));
}

}  // namespace nlc
