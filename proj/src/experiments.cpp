#include "nlc/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "nlc/kernels.hpp"
#include "nlc/measure.hpp"

namespace nlc {

std::string_view to_string(Experiment e) {
  switch (e) {
    case Experiment::Smoothness: return "smoothness";
    case Experiment::TaylorFailure: return "taylor-failure";
    case Experiment::IdentityTheoremFailure: return "identity-theorem-failure";
    case Experiment::C1NotC2: return "c1-not-c2";
    case Experiment::RealRestriction: return "real-restriction";
    case Experiment::MeasureIdentities: return "measure-identities";
  }
  return "smoothness";
}

Experiment parse_experiment(std::string_view s) {
  for (auto e : {Experiment::Smoothness, Experiment::TaylorFailure, Experiment::IdentityTheoremFailure,
                 Experiment::C1NotC2, Experiment::RealRestriction, Experiment::MeasureIdentities})
    if (to_string(e) == s) return e;
  throw std::invalid_argument("unknown experiment: " + std::string(s));
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::DivergentAsExpected: return "DIVERGENT-AS-EXPECTED";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

bool is_success(Verdict v) { return v == Verdict::Pass || v == Verdict::DivergentAsExpected; }

void ExperimentConfig::validate() const {
  if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("config: rho must lie in ]0,1[");
  if (steps < 8) throw std::invalid_argument("config: steps must be >= 8");
  if (blowup_steps < 8) throw std::invalid_argument("config: blowup_steps must be >= 8");
  if (k < 1) throw std::invalid_argument("config: k must be >= 1");
  if (!(tol.convergence > 0.0 && tol.divergence > 0.0 && tol.coefficient_zero > 0.0))
    throw std::invalid_argument("config: tolerances must be positive");
  if (centers < 1 || pairs < 1) throw std::invalid_argument("config: centers and pairs must be >= 1");
  if (mc_samples < 1 || sweep_points < 4) throw std::invalid_argument("config: sample counts too small");
  example.validate();
}

double StepRecord::extra_value(std::string_view key) const {
  for (const auto& [k, v] : extra)
    if (k == key) return v;
  throw std::out_of_range("StepRecord: no extra value " + std::string(key));
}

BlowupConstants BlowupConstants::for_p(double p) {
  return {1.0 / (std::numbers::e * std::sqrt(std::numbers::pi)), 1.0 - 2.0 * p, std::pow(2.0, 1.0 - p)};
}

double BlowupConstants::lower_bound(double t) const { return prefactor * std::pow(t, exponent) * c; }

double fit_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) throw std::invalid_argument("fit_slope: need >= 2 points");
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

bool agrees_to_3_significant_digits(double estimate, double exact) {
  if (exact == 0.0) return estimate == 0.0;
  const double unit = std::pow(10.0, std::floor(std::log10(std::abs(exact))) - 2.0);
  return std::abs(estimate - exact) <= 0.5 * unit;
}

// ---------------------------------------------------------------------------
// Verdict rules

namespace {

std::string_view rule_of(const std::string& series) {
  const auto slash = series.find('/');
  return std::string_view(series).substr(0, slash);
}

Verdict from_limit(LimitVerdict v) {
  switch (v) {
    case LimitVerdict::ConvergedToZero: return Verdict::Pass;
    case LimitVerdict::Divergent: return Verdict::Fail;
    case LimitVerdict::Inconclusive: return Verdict::Inconclusive;
  }
  return Verdict::Inconclusive;
}

bool at_most(double value, double bound) { return value <= bound * (1.0 + kRelativeSlack); }
bool at_least(double value, double bound) { return value >= bound * (1.0 - kRelativeSlack); }

std::vector<double> gauges(const std::vector<const StepRecord*>& recs) {
  std::vector<double> g;
  g.reserve(recs.size());
  for (const auto* r : recs) g.push_back(r->gauge);
  return g;
}

LimitThresholds thresholds(const ExperimentConfig& cfg) { return {cfg.tol.convergence, cfg.tol.divergence, 3}; }

// log2(gauge) against log2(x) over the last kSlopeWindow records.
std::optional<double> tail_log_slope(const std::vector<const StepRecord*>& recs, std::string_view x_key) {
  if (recs.size() < kSlopeWindow) return std::nullopt;
  std::vector<double> xs, ys;
  for (std::size_t i = recs.size() - kSlopeWindow; i < recs.size(); ++i) {
    if (!(recs[i]->gauge > 0.0)) return std::nullopt;
    xs.push_back(std::log2(recs[i]->extra_value(x_key)));
    ys.push_back(std::log2(recs[i]->gauge));
  }
  return fit_slope(xs, ys);
}

Verdict judge_series(std::string_view rule, const std::vector<const StepRecord*>& recs, const ExperimentConfig& cfg) {
  const double p = cfg.example.p;
  auto all = [&](auto&& pred) { return std::all_of(recs.begin(), recs.end(), [&](const auto* r) { return pred(*r); }); };
  auto pass_if = [](bool ok) { return ok ? Verdict::Pass : Verdict::Fail; };

  if (rule == "smooth") {
    const bool bounds_ok = all([](const StepRecord& r) {
      return r.support_ok && at_most(r.gauge, r.bound) && at_most(r.bound, r.extra_value("bound_4max"));
    });
    if (!bounds_ok) return Verdict::Fail;
    return from_limit(classify_trace(gauges(recs), thresholds(cfg)));
  }
  if (rule == "limit") return from_limit(classify_trace(gauges(recs), thresholds(cfg)));
  if (rule == "witness")
    return pass_if(all([](const StepRecord& r) { return r.gauge > 0.0 && r.extra_value("distance") <= r.bound; }));
  if (rule == "zero") return pass_if(all([](const StepRecord& r) { return r.gauge == 0.0; }));
  if (rule == "nonzero" || rule == "injective") return pass_if(all([](const StepRecord& r) { return r.gauge > 0.0; }));
  if (rule == "c1") {
    if (!all([](const StepRecord& r) { return r.support_ok && at_most(r.gauge, r.bound); })) return Verdict::Fail;
    if (recs.size() < kSlopeWindow) return Verdict::Inconclusive;
    if (auto slope = tail_log_slope(recs, "delta")) return pass_if(std::abs(*slope - (1.0 - p)) <= kSlopeTolerance);
    return pass_if(recs.back()->gauge == 0.0);
  }
  if (rule == "blowup") {
    const bool bounds_ok = all([](const StepRecord& r) {
      const double closed = r.extra_value("closed_form");
      return r.support_ok && at_least(r.gauge, r.bound) &&
             std::abs(r.gauge - closed) <= kClosedFormRelTolerance * closed;
    });
    if (!bounds_ok) return Verdict::Fail;
    const auto slope = tail_log_slope(recs, "t");
    if (!slope) return Verdict::Inconclusive;
    if (std::abs(*slope - (1.0 - 2.0 * p)) > kSlopeTolerance) return Verdict::Fail;
    switch (classify_trace(gauges(recs), thresholds(cfg))) {
      case LimitVerdict::Divergent: return Verdict::DivergentAsExpected;
      case LimitVerdict::Inconclusive: return Verdict::Inconclusive;
      case LimitVerdict::ConvergedToZero: return Verdict::Fail;
    }
  }
  if (rule == "annulus")
    return pass_if(all([](const StepRecord& r) {
      return std::abs(r.gauge - r.extra_value("closed_form")) <= kIdentityTolerance && at_most(r.gauge, r.bound) &&
             at_most(r.gauge, r.extra_value("mvt_bound"));
    }));
  if (rule == "strip")
    return pass_if(all([](const StepRecord& r) {
      return std::abs(r.gauge - r.extra_value("nu")) <= kIdentityTolerance &&
             std::abs(r.gauge - r.extra_value("erf_form")) <= kIdentityTolerance && at_most(r.gauge, r.bound);
    }));
  if (rule == "mvt") {
    if (recs.empty()) return Verdict::Inconclusive;
    if (!all([](const StepRecord& r) { return at_most(r.gauge, r.bound); })) return Verdict::Fail;
    const auto* best = *std::max_element(recs.begin(), recs.end(),
                                         [](const auto* a, const auto* b) { return a->gauge < b->gauge; });
    return pass_if(best->gauge >= best->bound - 1e-6 &&
                   std::abs(best->extra_value("t") - 1.0 / std::numbers::sqrt2) <= 1e-2);
  }
  if (rule == "oracle")
    return pass_if(all([](const StepRecord& r) { return agrees_to_3_significant_digits(r.gauge, r.bound); }));
  throw std::invalid_argument("unknown series rule: " + std::string(rule));
}

}  // namespace

VerdictSummary derive_verdict(const ExperimentReport& report) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<const StepRecord*>> groups;
  for (const auto& r : report.steps) {
    auto [it, inserted] = groups.try_emplace(r.series);
    if (inserted) order.push_back(r.series);
    it->second.push_back(&r);
  }
  VerdictSummary out{Verdict::Inconclusive, {}};
  if (order.empty()) return out;
  bool any_fail = false, any_inconclusive = false, any_divergent = false;
  for (const auto& name : order) {
    const Verdict v = judge_series(rule_of(name), groups[name], report.config);
    out.series[name] = v;
    any_fail |= v == Verdict::Fail;
    any_inconclusive |= v == Verdict::Inconclusive;
    any_divergent |= v == Verdict::DivergentAsExpected;
  }
  if (any_fail)
    out.overall = Verdict::Fail;
  else if (any_inconclusive)
    out.overall = Verdict::Inconclusive;
  else
    out.overall = any_divergent ? Verdict::DivergentAsExpected : Verdict::Pass;
  return out;
}

// ---------------------------------------------------------------------------
// Experiments

namespace {

constexpr double kBoxHalfWidth = 2.0;

class PointSource {
 public:
  explicit PointSource(std::uint64_t seed) : rng_(seed) {}

  Complex point(bool real_axis) {
    std::uniform_real_distribution<double> coord(-kBoxHalfWidth, kBoxHalfWidth);
    const double x = coord(rng_);
    const double y = real_axis ? 0.0 : coord(rng_);
    return {x, y};
  }

  double angle() { return std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng_); }
  bool coin() { return std::bernoulli_distribution(0.5)(rng_); }

 private:
  std::mt19937_64 rng_;
};

std::string series_name(std::string_view rule, std::initializer_list<std::pair<std::string_view, long long>> tags) {
  std::string s(rule);
  for (const auto& [k, v] : tags) s += "/" + std::string(k) + "=" + std::to_string(v);
  return s;
}

std::vector<Complex> centers_for(const ExperimentConfig& cfg, PointSource& src, bool real_axis) {
  if (cfg.center) return {*cfg.center};
  std::vector<Complex> out;
  for (int i = 0; i < cfg.centers; ++i) out.push_back(src.point(real_axis));
  return out;
}

ExperimentReport begin_report(const ExperimentConfig& cfg) {
  cfg.validate();
  ExperimentReport rep;
  rep.config = cfg;
  rep.constants = BlowupConstants::for_p(cfg.example.p);
  return rep;
}

ExperimentReport& finish(ExperimentReport& rep, std::chrono::steady_clock::time_point start) {
  const auto v = derive_verdict(rep);
  rep.verdict = v.overall;
  rep.series_verdicts = v.series;
  rep.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

void require_example(const ExperimentConfig& cfg, std::initializer_list<ExampleId> allowed) {
  for (auto id : allowed)
    if (cfg.example.id == id) return;
  throw std::invalid_argument(std::string(to_string(cfg.experiment)) + " does not apply to " +
                              std::string(to_string(cfg.example.id)));
}

// g_n = f^{<k>} along z + ρⁿu, with its support bound B_n.
void smooth_series(ExperimentReport& rep, const CurveMap& f, Complex z, std::size_t k, bool real_axis,
                   const std::string& name) {
  const auto& cfg = rep.config;
  const ShrinkSchedule schedule = real_axis ? ShrinkSchedule::real_line(k, cfg.rho, cfg.steps)
                                            : ShrinkSchedule::roots_of_unity(k, cfg.rho, cfg.steps);
  schedule.validate();
  for (int n = 1; n <= schedule.steps; ++n) {
    const NodeTuple t = schedule.tuple(z, n);
    const SimpleFunction g = divided_diff(f, t, cfg.tol.coefficient_zero);
    const SupportBound bn = support_bound_of(t, f.family);
    double max_offset = 0.0;
    for (const auto& w : t.nodes()) max_offset = std::max(max_offset, std::abs(w - z));
    rep.steps.push_back(StepRecord{name, n, t.nodes(), l0_gauge(g), measure(bn.region), supported_in(g, bn),
                                   {{"bound_4max", 4.0 * max_offset}}});
  }
}

void limit_series(ExperimentReport& rep, const CurveMap& f, Complex z, std::size_t k, const GaugeSpec& gauge,
                  const std::string& name) {
  const auto& cfg = rep.config;
  const auto schedule = ShrinkSchedule::roots_of_unity(k, cfg.rho, cfg.steps);
  const LimitReport lim = derivative_by_limit(f, z, k, schedule, gauge, thresholds(cfg), cfg.tol.coefficient_zero);
  for (std::size_t i = 0; i < lim.gauge_trace.size(); ++i)
    rep.steps.push_back(StepRecord{name, static_cast<int>(i + 1), lim.tuples[i].nodes(), lim.gauge_trace[i],
                                   cfg.tol.convergence, true, {}});
}

// Difference quotients (f(z₂) − f(z₁))/(z₂ − z₁) along shrinking pairs.
void c1_phase(ExperimentReport& rep, const CurveMap& f, PointSource& src, bool real_axis) {
  const auto& cfg = rep.config;
  const double p = cfg.example.p;
  for (int pair = 0; pair < cfg.pairs; ++pair) {
    const Complex z1 = src.point(real_axis);
    const Complex dir = real_axis ? Complex(src.coin() ? 1.0 : -1.0, 0.0) : std::polar(1.0, src.angle());
    const std::string name = series_name("c1", {{"pair", pair}});
    for (int n = 1; n <= cfg.steps; ++n) {
      const Complex z2 = z1 + std::pow(cfg.rho, n) * dir;
      const NodeTuple t({z1, z2});
      const SimpleFunction q = divided_diff(f, t, cfg.tol.coefficient_zero);
      const double delta = std::abs(z2 - z1);
      rep.steps.push_back(StepRecord{name, n, t.nodes(), lp_gauge(q, p), std::pow(delta, 1.0 - p),
                                     supported_in(q, support_bound_of(t, f.family)), {{"delta", delta}}});
    }
  }
}

// (1/t)(f^{<1>}(t,2t) − f^{<1>}(0,2t)) for t = 2^-m.
void blowup_phase(ExperimentReport& rep, const CurveMap& f) {
  const auto& cfg = rep.config;
  const double p = cfg.example.p;
  for (int m = 1; m <= cfg.blowup_steps; ++m) {
    const double t = std::ldexp(1.0, -m);
    const SimpleFunction upper = divided_diff(f, NodeTuple({t, 2.0 * t}), cfg.tol.coefficient_zero);
    const SimpleFunction lower = divided_diff(f, NodeTuple({0.0, 2.0 * t}), cfg.tol.coefficient_zero);
    const Complex coeffs[] = {1.0 / t, -1.0 / t};
    const SimpleFunction parts[] = {upper, lower};
    const SimpleFunction q = linear_combine(coeffs, parts, cfg.tol.coefficient_zero);
    const NodeTuple nodes({t, 0.0, 2.0 * t});
    const double closed = std::pow(1.0 / (2.0 * t * t), p) * nu_mass(Interval(0.0, 2.0 * t));
    rep.steps.push_back(StepRecord{"blowup", m, nodes.nodes(), lp_gauge(q, p), rep.constants.lower_bound(t),
                                   supported_in(q, support_bound_of(nodes, f.family)),
                                   {{"t", t}, {"closed_form", closed}}});
  }
}

}  // namespace

ExperimentReport exp_smoothness(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport rep = begin_report(cfg);
  require_example(cfg, {ExampleId::Quadrant, ExampleId::Annulus});
  const CurveMap f = make_curve(cfg.example);
  PointSource src(cfg.seed);
  const auto centers = centers_for(cfg, src, false);
  for (std::size_t c = 0; c < centers.size(); ++c)
    for (int k = 1; k <= cfg.k; ++k)
      smooth_series(rep, f, centers[c], static_cast<std::size_t>(k), false,
                    series_name("smooth", {{"center", static_cast<long long>(c)}, {"k", k}}));
  return finish(rep, start);
}

ExperimentReport exp_taylor_failure(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport rep = begin_report(cfg);
  require_example(cfg, {ExampleId::Quadrant});
  const CurveMap f = make_curve(cfg.example);
  PointSource src(cfg.seed);
  std::vector<Complex> centers{cfg.center.value_or(Complex{})};
  for (int i = 1; i < cfg.centers; ++i) centers.push_back(src.point(false));

  const Complex directions[] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  for (std::size_t c = 0; c < centers.size(); ++c) {
    const Complex z0 = centers[c];
    const std::string name = series_name("witness", {{"center", static_cast<long long>(c)}});
    for (int e = 1; e <= 8; ++e) {
      const double radius = std::pow(10.0, -e);
      // First direction with a positive disagreement set; the offset r/2
      // keeps |z − z0| ≤ r after rounding.
      Complex z = z0;
      double mass = 0.0;
      for (const auto& d : directions) {
        z = z0 + 0.5 * radius * d;
        mass = measure(region_symdiff(quadrant_below(z0), quadrant_below(z)));
        if (mass > 0.0) break;
      }
      rep.steps.push_back(StepRecord{name, e, {z0, z}, mass, radius, true, {{"distance", std::abs(z - z0)}}});
    }
    for (int k = 1; k <= cfg.k; ++k)
      limit_series(rep, f, z0, static_cast<std::size_t>(k), target_gauge(cfg.example),
                   series_name("limit", {{"center", static_cast<long long>(c)}, {"k", k}}));
  }
  return finish(rep, start);
}

ExperimentReport exp_identity_theorem_failure(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport rep = begin_report(cfg);
  require_example(cfg, {ExampleId::Annulus});
  const CurveMap f = make_curve(cfg.example);

  int n = 0;
  auto record_value = [&](const char* series, Complex z) {
    rep.steps.push_back(StepRecord{series, ++n, {z}, l0_gauge(f(z)), 0.0, true, {}});
  };
  // Outside: radii 1.1 … 3.0 plus the four exact unit points.
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      record_value("zero", std::polar(1.1 + 0.2 * i + 0.01 * j, 2.0 * std::numbers::pi * j / 10.0));
  for (const Complex z : {Complex{1, 0}, Complex{0, 1}, Complex{-1, 0}, Complex{0, -1}}) record_value("zero", z);
  // Inside: radii 0.05 … 0.95 plus the origin.
  n = 0;
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j)
      record_value("nonzero", std::polar(0.05 + 0.1 * i, 2.0 * std::numbers::pi * j / 10.0));
  record_value("nonzero", Complex{});

  PointSource src(cfg.seed);
  std::vector<Complex> centers{{0.4, 0.0}, {1.5, 0.0}};
  if (cfg.center) centers.push_back(*cfg.center);
  for (int i = 0; i < cfg.centers; ++i) centers.push_back(src.point(false));
  for (std::size_t c = 0; c < centers.size(); ++c)
    for (int k = 1; k <= cfg.k; ++k)
      smooth_series(rep, f, centers[c], static_cast<std::size_t>(k), false,
                    series_name("smooth", {{"center", static_cast<long long>(c)}, {"k", k}}));
  return finish(rep, start);
}

ExperimentReport exp_c1_not_c2(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport rep = begin_report(cfg);
  require_example(cfg, {ExampleId::HalfPlane});
  const CurveMap f = make_curve(cfg.example);
  PointSource src(cfg.seed);
  c1_phase(rep, f, src, false);
  blowup_phase(rep, f);
  return finish(rep, start);
}

ExperimentReport exp_real_restriction(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport rep = begin_report(cfg);
  require_example(cfg, {ExampleId::Quadrant, ExampleId::HalfPlane});
  const CurveMap f = make_curve(cfg.example);
  PointSource src(cfg.seed);
  if (cfg.example.id == ExampleId::Quadrant) {
    const auto centers = centers_for(cfg, src, true);
    for (std::size_t c = 0; c < centers.size(); ++c) {
      const Complex z{centers[c].real(), 0.0};
      for (int k = 1; k <= cfg.k; ++k)
        smooth_series(rep, f, z, static_cast<std::size_t>(k), true,
                      series_name("smooth", {{"center", static_cast<long long>(c)}, {"k", k}}));
    }
    for (int i = 0; i < 100; ++i) {
      const Complex x1 = src.point(true);
      Complex x2 = src.point(true);
      if (x2 == x1) x2 += 1.0;
      const double mass = measure(region_symdiff(quadrant_below(x1), quadrant_below(x2)));
      rep.steps.push_back(StepRecord{"injective", i + 1, {x1, x2}, mass, 0.0, true, {}});
    }
  } else {
    c1_phase(rep, f, src, true);
    blowup_phase(rep, f);
  }
  return finish(rep, start);
}

ExperimentReport exp_measure_identities(const ExperimentConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport rep = begin_report(cfg);
  using kernels::Exec;

  const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(cfg.sweep_points))));
  auto grid = [&](double lo, double hi) {
    std::vector<std::pair<double, double>> out;
    out.reserve(side * side);
    for (std::size_t i = 0; i < side; ++i)
      for (std::size_t j = 0; j < side; ++j) {
        const double a = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(side - 1);
        const double b = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(side - 1);
        out.emplace_back(std::min(a, b), std::max(a, b));
      }
    return out;
  };

  const double mvt_constant = std::sqrt(2.0 / std::numbers::e);
  int n = 0;
  for (const auto& a : kernels::annulus_sweep(grid(0.0, 3.0), Exec::Parallel))
    rep.steps.push_back(StepRecord{"annulus", ++n, {}, a.measure, a.R - a.r, true,
                                   {{"r", a.r}, {"R", a.R}, {"closed_form", a.closed_form},
                                    {"mvt_bound", mvt_constant * (a.R - a.r)}}});
  n = 0;
  for (const auto& s : kernels::strip_sweep(grid(-3.0, 3.0), Exec::Parallel))
    rep.steps.push_back(StepRecord{"strip", ++n, {}, s.measure, s.b - s.a, true,
                                   {{"a", s.a}, {"b", s.b}, {"nu", s.nu}, {"erf_form", s.erf_form}}});

  std::vector<double> ts(cfg.sweep_points);
  for (std::size_t i = 0; i < ts.size(); ++i) ts[i] = 10.0 * static_cast<double>(i) / static_cast<double>(ts.size() - 1);
  const auto profile = kernels::mvt_profile(ts, Exec::Parallel);
  for (std::size_t i = 0; i < ts.size(); ++i)
    rep.steps.push_back(StepRecord{"mvt", static_cast<int>(i + 1), {}, profile[i], mvt_constant, true, {{"t", ts[i]}}});

  const std::vector<Region> oracle_regions = {
      RadialRegion::annulus(0.3, 0.7), RadialRegion::annulus(0.0, 0.5), RadialRegion::annulus(0.0, 1.0),
      RadialRegion::annulus(0.5, 1.0), RadialRegion::annulus(1.5, 2.0), RadialRegion::whole_plane(),
      vertical_strip(0.0, 1.0),        vertical_strip(-0.2, 0.05),      vertical_strip(-1.0, 2.0),
      vertical_strip(0.5, 1.5),        quadrant_below({0.0, 0.0}),      quadrant_below({1.0, 1.0}),
      halfplane_left(0.0),
  };
  const auto estimates = kernels::mc_masses(oracle_regions, cfg.mc_samples, cfg.seed, Exec::Parallel);
  for (std::size_t i = 0; i < oracle_regions.size(); ++i)
    rep.steps.push_back(StepRecord{"oracle", static_cast<int>(i + 1), {}, estimates[i], measure(oracle_regions[i]),
                                   true, {{"samples", static_cast<double>(cfg.mc_samples)}}});
  return finish(rep, start);
}

ExperimentReport run_experiment(const ExperimentConfig& cfg) {
  switch (cfg.experiment) {
    case Experiment::Smoothness: return exp_smoothness(cfg);
    case Experiment::TaylorFailure: return exp_taylor_failure(cfg);
    case Experiment::IdentityTheoremFailure: return exp_identity_theorem_failure(cfg);
    case Experiment::C1NotC2: return exp_c1_not_c2(cfg);
    case Experiment::RealRestriction: return exp_real_restriction(cfg);
    case Experiment::MeasureIdentities: return exp_measure_identities(cfg);
  }
  throw std::invalid_argument("unknown experiment");
}

std::vector<ExperimentConfig> full_suite(const ExperimentConfig& base) {
  auto with = [&](Experiment e, ExampleId id) {
    ExperimentConfig c = base;
    c.experiment = e;
    c.example.id = id;
    return c;
  };
  return {
      with(Experiment::Smoothness, ExampleId::Quadrant),
      with(Experiment::Smoothness, ExampleId::Annulus),
      with(Experiment::TaylorFailure, ExampleId::Quadrant),
      with(Experiment::IdentityTheoremFailure, ExampleId::Annulus),
      with(Experiment::C1NotC2, ExampleId::HalfPlane),
      with(Experiment::RealRestriction, ExampleId::Quadrant),
      with(Experiment::RealRestriction, ExampleId::HalfPlane),
      with(Experiment::MeasureIdentities, ExampleId::Quadrant),
  };
}

}  // namespace nlc
