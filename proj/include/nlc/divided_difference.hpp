#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "nlc/simple_function.hpp"

namespace nlc {

/// A curve ℂ → E evaluated to simple functions of one family.
struct CurveMap {
  Family family;
  std::function<SimpleFunction(Complex)> eval;

  SimpleFunction operator()(Complex z) const { return eval(z); }
};

/// Nodes z₁, …, z_{k+1} of an order-k divided difference.
class NodeTuple {
 public:
  explicit NodeTuple(std::vector<Complex> nodes);

  const std::vector<Complex>& nodes() const { return nodes_; }
  std::size_t order() const { return nodes_.size() - 1; }
  bool distinct() const { return distinct_; }

  /// Tuple (nodes[perm[0]], nodes[perm[1]], …). perm must be a permutation.
  NodeTuple permuted(std::span<const std::size_t> perm) const;

 private:
  std::vector<Complex> nodes_;
  bool distinct_;
};

/// Raised when a divided difference is requested at coincident nodes.
class RepeatedNode : public std::invalid_argument {
 public:
  RepeatedNode() : std::invalid_argument("divided difference needs pairwise distinct nodes") {}
};

/// f^{<k>}(z₁,…,z_{k+1}) by the defining recursion
///   f^{<k>}(x₁,x₂,x₃,…) = (f^{<k-1>}(x₁,x₃,…) − f^{<k-1>}(x₂,x₃,…)) / (x₁ − x₂),
/// with every intermediate tuple memoized for the duration of the call.
SimpleFunction divided_diff(const CurveMap& f, const NodeTuple& t, double zero_tol = kDefaultZeroTolerance);

/// Σᵢ f(zᵢ) / Πⱼ≠ᵢ (zᵢ − zⱼ). Same value as divided_diff; kept as a cross-check.
SimpleFunction divided_diff_lagrange(const CurveMap& f, const NodeTuple& t,
                                     double zero_tol = kDefaultZeroTolerance);

/// divided_diff at t and at perm·t agree on a common refinement: every atom
/// coefficient of the difference is within zero_tol of the larger operand's scale.
bool symmetry_check(const CurveMap& f, const NodeTuple& t, std::span<const std::size_t> perm,
                    double zero_tol = kDefaultZeroTolerance);

/// Extremes of the node coordinates (grid) or moduli (radial).
struct BoundingData {
  double x_lo, x_hi, y_lo, y_hi;
  double r_lo, r_hi;
};

BoundingData bounding_data(const NodeTuple& t);

/// Grid: ([x_*,x^*] + iℝ) ∪ (ℝ + i[y_*,y^*]). Radial: K(r_*, r^*).
SupportBound support_bound_of(const NodeTuple& t, Family family);

// Limits toward the diagonal.

/// Tuples z + ratioⁿ·offsets for n = 1..steps.
struct ShrinkSchedule {
  std::vector<Complex> offsets;
  double ratio = 0.5;
  int steps = 40;

  /// offsets e^{2πij/(k+1)}, j = 0..k
  static ShrinkSchedule roots_of_unity(std::size_t k, double ratio = 0.5, int steps = 40);
  /// k+1 equally spaced real offsets in [−1, 1]
  static ShrinkSchedule real_line(std::size_t k, double ratio = 0.5, int steps = 40);

  /// Throws std::invalid_argument for repeated offsets, ratio ∉ ]0,1[ or steps < 1.
  void validate() const;
  NodeTuple tuple(Complex center, int n) const;
};

struct GaugeSpec {
  enum class Kind { L0, Lp } kind = Kind::L0;
  double p = 0.75;

  double operator()(const SimpleFunction& f) const;
};

enum class LimitVerdict { ConvergedToZero, Divergent, Inconclusive };

std::string_view to_string(LimitVerdict v);

struct LimitThresholds {
  double convergence = 1e-6;
  double divergence = 1e6;
  std::size_t tail = 3;
};

struct LimitReport {
  LimitVerdict verdict = LimitVerdict::Inconclusive;
  /// Last k!·f^{<k>} value; empty when the trace diverged.
  std::optional<SimpleFunction> estimate;
  /// Gauge of k!·f^{<k>} at each step.
  std::vector<double> gauge_trace;
  /// Gauge of the difference between consecutive estimates (one shorter).
  std::vector<double> difference_trace;
  std::vector<NodeTuple> tuples;
};

/// Classifies a gauge trace: converged when the last value is ≤ convergence
/// with a non-increasing tail, divergent when the last value is ≥ divergence
/// with a strictly increasing tail, otherwise inconclusive (including traces
/// with fewer than two entries).
LimitVerdict classify_trace(std::span<const double> trace, const LimitThresholds& th);

/// Estimates f^{(k)}(z) = k!·f^{<k>}(z,…,z) along the schedule.
LimitReport derivative_by_limit(const CurveMap& f, Complex z, std::size_t k, const ShrinkSchedule& schedule,
                                const GaugeSpec& gauge, const LimitThresholds& th = {},
                                double zero_tol = kDefaultZeroTolerance);

}  // namespace nlc
