#include "nlc/interval.hpp"

#include <algorithm>
#include <sstream>

namespace nlc {

namespace {

std::string endpoint(ExtendedReal e) {
  if (e.value() == -std::numeric_limits<double>::infinity()) return "-inf";
  if (e.value() == std::numeric_limits<double>::infinity()) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << e.value();
  return os.str();
}

}  // namespace

std::string to_string(const Interval& iv) {
  return "]" + endpoint(iv.lo()) + ", " + endpoint(iv.hi()) + "]";
}

IntervalSet::IntervalSet(std::vector<Interval> pieces) {
  std::erase_if(pieces, [](const Interval& iv) { return iv.empty(); });
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& a, const Interval& b) { return a.lo() < b.lo(); });
  for (const auto& iv : pieces) {
    if (!pieces_.empty() && iv.lo() <= pieces_.back().hi()) {
      if (pieces_.back().hi() < iv.hi()) pieces_.back() = Interval(pieces_.back().lo(), iv.hi());
    } else {
      pieces_.push_back(iv);
    }
  }
}

bool IntervalSet::contains(double x) const {
  // First piece with hi >= x.
  auto it = std::lower_bound(pieces_.begin(), pieces_.end(), x,
                             [](const Interval& iv, double v) { return iv.hi().value() < v; });
  return it != pieces_.end() && it->contains(x);
}

IntervalSet IntervalSet::from_mask(const std::vector<double>& breaks, const std::vector<char>& mask) {
  IntervalSet out;
  const std::size_t n = mask.size();
  std::size_t i = 0;
  while (i < n) {
    if (!mask[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && mask[j]) ++j;
    out.pieces_.emplace_back(breaks[i], breaks[j]);
    i = j;
  }
  return out;
}

std::vector<double> breakpoints_with_infinities(std::vector<double> pts) {
  pts.push_back(-std::numeric_limits<double>::infinity());
  pts.push_back(std::numeric_limits<double>::infinity());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::pair<std::size_t, std::size_t> covered_span(const std::vector<double>& breaks, const Interval& iv) {
  if (iv.empty()) return {0, 0};
  auto lo = std::lower_bound(breaks.begin(), breaks.end(), iv.lo().value());
  auto hi = std::lower_bound(breaks.begin(), breaks.end(), iv.hi().value());
  if (lo == breaks.end() || hi == breaks.end() || *lo != iv.lo().value() || *hi != iv.hi().value())
    throw std::logic_error("covered_span: endpoint is not a breakpoint");
  return {static_cast<std::size_t>(lo - breaks.begin()), static_cast<std::size_t>(hi - breaks.begin())};
}

}  // namespace nlc
