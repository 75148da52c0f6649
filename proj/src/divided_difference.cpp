#include "nlc/divided_difference.hpp"

#include <algorithm>
#include <numbers>

#include "nlc/measure.hpp"

namespace nlc {

namespace {

bool pairwise_distinct(const std::vector<Complex>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (v[i] == v[j]) return false;
  return true;
}

double factorial(std::size_t k) {
  double f = 1.0;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return f;
}

}  // namespace

NodeTuple::NodeTuple(std::vector<Complex> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw std::invalid_argument("NodeTuple: no nodes");
  distinct_ = pairwise_distinct(nodes_);
}

NodeTuple NodeTuple::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != nodes_.size()) throw std::invalid_argument("permuted: wrong length");
  std::vector<char> seen(perm.size(), 0);
  std::vector<Complex> out;
  out.reserve(perm.size());
  for (std::size_t i : perm) {
    if (i >= perm.size() || seen[i]) throw std::invalid_argument("permuted: not a permutation");
    seen[i] = 1;
    out.push_back(nodes_[i]);
  }
  return NodeTuple(std::move(out));
}

SimpleFunction divided_diff(const CurveMap& f, const NodeTuple& t, double zero_tol) {
  if (!t.distinct()) throw RepeatedNode();
  const auto& z = t.nodes();
  const std::size_t n = z.size();
  // memo[h][s] holds f^{<·>}(z_h, z_s, z_{s+1}, …, z_{n-1}) for h < s ≤ n.
  std::vector<std::vector<std::optional<SimpleFunction>>> memo(n, std::vector<std::optional<SimpleFunction>>(n + 1));
  for (std::size_t h = 0; h < n; ++h) memo[h][n] = f(z[h]);
  for (std::size_t s = n - 1; s >= 1; --s) {
    for (std::size_t h = 0; h < s; ++h) {
      const Complex inv = 1.0 / (z[h] - z[s]);
      const Complex coeffs[] = {inv, -inv};
      const SimpleFunction parts[] = {*memo[h][s + 1], *memo[s][s + 1]};
      memo[h][s] = linear_combine(coeffs, parts, zero_tol);
    }
  }
  return *memo[0][1];
}

SimpleFunction divided_diff_lagrange(const CurveMap& f, const NodeTuple& t, double zero_tol) {
  if (!t.distinct()) throw RepeatedNode();
  const auto& z = t.nodes();
  std::vector<Complex> weights;
  std::vector<SimpleFunction> values;
  for (std::size_t i = 0; i < z.size(); ++i) {
    Complex denom{1.0, 0.0};
    for (std::size_t j = 0; j < z.size(); ++j)
      if (j != i) denom *= z[i] - z[j];
    weights.push_back(1.0 / denom);
    values.push_back(f(z[i]));
  }
  return linear_combine(weights, values, zero_tol);
}

bool symmetry_check(const CurveMap& f, const NodeTuple& t, std::span<const std::size_t> perm, double zero_tol) {
  const SimpleFunction a = divided_diff(f, t, zero_tol);
  const SimpleFunction b = divided_diff(f, t.permuted(perm), zero_tol);
  const Complex coeffs[] = {1.0, -1.0};
  const SimpleFunction parts[] = {a, b};
  return linear_combine(coeffs, parts, zero_tol).is_zero();
}

BoundingData bounding_data(const NodeTuple& t) {
  const auto& z = t.nodes();
  BoundingData b{z[0].real(), z[0].real(), z[0].imag(), z[0].imag(), std::abs(z[0]), std::abs(z[0])};
  for (const auto& w : z) {
    b.x_lo = std::min(b.x_lo, w.real());
    b.x_hi = std::max(b.x_hi, w.real());
    b.y_lo = std::min(b.y_lo, w.imag());
    b.y_hi = std::max(b.y_hi, w.imag());
    b.r_lo = std::min(b.r_lo, std::abs(w));
    b.r_hi = std::max(b.r_hi, std::abs(w));
  }
  return b;
}

SupportBound support_bound_of(const NodeTuple& t, Family family) {
  const BoundingData b = bounding_data(t);
  if (family == Family::Radial) return {RadialRegion::annulus(b.r_lo, b.r_hi)};
  return {region_union(vertical_strip(b.x_lo, b.x_hi), horizontal_strip(b.y_lo, b.y_hi))};
}

ShrinkSchedule ShrinkSchedule::roots_of_unity(std::size_t k, double ratio, int steps) {
  ShrinkSchedule s{{}, ratio, steps};
  for (std::size_t j = 0; j <= k; ++j)
    s.offsets.push_back(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(k + 1)));
  return s;
}

ShrinkSchedule ShrinkSchedule::real_line(std::size_t k, double ratio, int steps) {
  ShrinkSchedule s{{}, ratio, steps};
  if (k == 0) {
    s.offsets.emplace_back(0.0);
    return s;
  }
  for (std::size_t j = 0; j <= k; ++j)
    s.offsets.emplace_back(-1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(k));
  return s;
}

void ShrinkSchedule::validate() const {
  if (offsets.empty()) throw std::invalid_argument("schedule: no offsets");
  if (!pairwise_distinct(offsets)) throw std::invalid_argument("schedule: offsets must be pairwise distinct");
  if (!(ratio > 0.0 && ratio < 1.0)) throw std::invalid_argument("schedule: ratio must lie in ]0,1[");
  if (steps < 1) throw std::invalid_argument("schedule: steps must be >= 1");
}

NodeTuple ShrinkSchedule::tuple(Complex center, int n) const {
  const double scale = std::pow(ratio, n);
  std::vector<Complex> nodes;
  nodes.reserve(offsets.size());
  for (const auto& u : offsets) nodes.push_back(center + scale * u);
  return NodeTuple(std::move(nodes));
}

double GaugeSpec::operator()(const SimpleFunction& f) const {
  return kind == Kind::L0 ? l0_gauge(f) : lp_gauge(f, p);
}

std::string_view to_string(LimitVerdict v) {
  switch (v) {
    case LimitVerdict::ConvergedToZero: return "CONVERGED-TO-ZERO";
    case LimitVerdict::Divergent: return "DIVERGENT";
    case LimitVerdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

LimitVerdict classify_trace(std::span<const double> trace, const LimitThresholds& th) {
  if (trace.size() < 2) return LimitVerdict::Inconclusive;
  const std::size_t w = std::clamp<std::size_t>(th.tail, 2, trace.size());
  auto tail = trace.last(w);
  const double last = trace.back();
  bool non_increasing = true;
  bool increasing = true;
  for (std::size_t i = 1; i < tail.size(); ++i) {
    non_increasing = non_increasing && tail[i] <= tail[i - 1];
    increasing = increasing && tail[i] > tail[i - 1];
  }
  if (last <= th.convergence && non_increasing) return LimitVerdict::ConvergedToZero;
  if (last >= th.divergence && increasing) return LimitVerdict::Divergent;
  return LimitVerdict::Inconclusive;
}

LimitReport derivative_by_limit(const CurveMap& f, Complex z, std::size_t k, const ShrinkSchedule& schedule,
                                const GaugeSpec& gauge, const LimitThresholds& th, double zero_tol) {
  schedule.validate();
  if (schedule.offsets.size() != k + 1) throw std::invalid_argument("schedule: need k+1 offsets");
  const Complex scale = factorial(k);
  LimitReport rep;
  std::optional<SimpleFunction> prev;
  for (int n = 1; n <= schedule.steps; ++n) {
    NodeTuple t = schedule.tuple(z, n);
    const SimpleFunction dd = divided_diff(f, t, zero_tol);
    const Complex c[] = {scale};
    const SimpleFunction fs[] = {dd};
    SimpleFunction est = linear_combine(c, fs, zero_tol);
    rep.gauge_trace.push_back(gauge(est));
    if (prev) rep.difference_trace.push_back(gauge(est - *prev));
    rep.tuples.push_back(std::move(t));
    prev = std::move(est);
  }
  rep.verdict = classify_trace(rep.gauge_trace, th);
  if (rep.verdict != LimitVerdict::Divergent) rep.estimate = std::move(prev);
  return rep;
}

}  // namespace nlc
