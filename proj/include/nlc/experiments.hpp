#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nlc/example_maps.hpp"

namespace nlc {

enum class Experiment {
  Smoothness,
  TaylorFailure,
  IdentityTheoremFailure,
  C1NotC2,
  RealRestriction,
  MeasureIdentities,
};

/// "smoothness", "taylor-failure", "identity-theorem-failure", "c1-not-c2",
/// "real-restriction", "measure-identities"
std::string_view to_string(Experiment e);
Experiment parse_experiment(std::string_view s);

struct Tolerances {
  double convergence = 1e-6;
  double divergence = 1e6;
  double coefficient_zero = kDefaultZeroTolerance;
};

struct ExperimentConfig {
  Experiment experiment = Experiment::Smoothness;
  ExampleSpec example;
  std::uint64_t seed = 42;
  int k = 4;  // highest order; orders 1..k are exercised
  double rho = 0.5;
  int steps = 40;
  int blowup_steps = 128;  // t = 2^-m, m = 1..blowup_steps
  std::optional<Complex> center;
  int centers = 5;
  int pairs = 8;
  Tolerances tol;
  std::size_t mc_samples = 1'000'000;
  std::size_t sweep_points = 10'000;

  /// Throws std::invalid_argument: ρ ∉ ]0,1[, steps < 8, non-positive
  /// tolerances, k < 1, or an invalid example.
  void validate() const;
};

// Pinned thresholds of the verdict rules.
inline constexpr double kSlopeTolerance = 0.05;
inline constexpr std::size_t kSlopeWindow = 10;
inline constexpr double kIdentityTolerance = 1e-12;
inline constexpr double kClosedFormRelTolerance = 1e-10;
inline constexpr double kRelativeSlack = 1e-12;

enum class Verdict { Pass, Fail, DivergentAsExpected, Inconclusive };

std::string_view to_string(Verdict v);

/// One recorded observation. `series` groups records into traces; its prefix
/// up to the first '/' names the rule that judges them.
struct StepRecord {
  std::string series;
  int n = 0;
  std::vector<Complex> nodes;
  double gauge = 0.0;
  double bound = 0.0;
  bool support_ok = true;
  std::vector<std::pair<std::string, double>> extra;

  double extra_value(std::string_view key) const;
};

/// Constants of the Lᵖ blow-up lower bound 2^{1−p}·t^{1−2p}·c.
struct BlowupConstants {
  double c;          // 1/(e√π)
  double exponent;   // 1 − 2p
  double prefactor;  // 2^{1−p}

  static BlowupConstants for_p(double p);
  double lower_bound(double t) const;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<StepRecord> steps;
  Verdict verdict = Verdict::Inconclusive;
  std::map<std::string, Verdict> series_verdicts;
  BlowupConstants constants{};
  double wall_time_s = 0.0;
};

struct VerdictSummary {
  Verdict overall;
  std::map<std::string, Verdict> series;
};

/// Recomputes every verdict from config and records alone.
VerdictSummary derive_verdict(const ExperimentReport& report);

ExperimentReport exp_smoothness(const ExperimentConfig& cfg);
ExperimentReport exp_taylor_failure(const ExperimentConfig& cfg);
ExperimentReport exp_identity_theorem_failure(const ExperimentConfig& cfg);
ExperimentReport exp_c1_not_c2(const ExperimentConfig& cfg);
ExperimentReport exp_real_restriction(const ExperimentConfig& cfg);
ExperimentReport exp_measure_identities(const ExperimentConfig& cfg);

ExperimentReport run_experiment(const ExperimentConfig& cfg);

/// Configurations run by `verify all`, derived from a base config (seed, p,
/// tolerances and schedule are inherited).
std::vector<ExperimentConfig> full_suite(const ExperimentConfig& base);

/// True for PASS and DIVERGENT-AS-EXPECTED.
bool is_success(Verdict v);

/// Least-squares slope of ys against xs.
double fit_slope(std::span<const double> xs, std::span<const double> ys);

/// |a − b| within half a unit of the third significant digit of `exact`.
bool agrees_to_3_significant_digits(double estimate, double exact);

}  // namespace nlc
