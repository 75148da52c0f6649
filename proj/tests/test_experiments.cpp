#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "nlc/experiments.hpp"
#include "nlc/measure.hpp"
#include "nlc/report_io.hpp"
#include "oracles.hpp"

using namespace nlc;

namespace {

ExperimentConfig config(Experiment e, ExampleId id, double p = kDefaultHalfPlaneP) {
  ExperimentConfig c;
  c.experiment = e;
  c.example = {id, p};
  return c;
}

std::vector<const StepRecord*> series(const ExperimentReport& r, std::string_view prefix) {
  std::vector<const StepRecord*> out;
  for (const auto& s : r.steps)
    if (s.series.starts_with(prefix)) out.push_back(&s);
  return out;
}

const StepRecord& blowup_at(const ExperimentReport& r, int m) {
  for (const auto* s : series(r, "blowup"))
    if (s->n == m) return *s;
  throw std::out_of_range("no blowup record");
}

double blowup_slope(const ExperimentReport& r) {
  const auto recs = series(r, "blowup");
  std::vector<double> xs, ys;
  for (std::size_t i = recs.size() - kSlopeWindow; i < recs.size(); ++i) {
    xs.push_back(std::log2(recs[i]->extra_value("t")));
    ys.push_back(std::log2(recs[i]->gauge));
  }
  return fit_slope(xs, ys);
}

nlohmann::json without_timing(nlohmann::json j) {
  j.erase("wall_time_s");
  return j;
}

}  // namespace

TEST(Config, Validation) {
  ExperimentConfig c;
  EXPECT_NO_THROW(c.validate());
  auto bad = [](auto mutate) {
    ExperimentConfig c;
    mutate(c);
    return c;
  };
  EXPECT_THROW(bad([](auto& c) { c.rho = 1.0; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](auto& c) { c.rho = 0.0; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](auto& c) { c.steps = 7; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](auto& c) { c.k = 0; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](auto& c) { c.tol.convergence = 0.0; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](auto& c) { c.tol.divergence = -1.0; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](auto& c) { c.tol.coefficient_zero = 0.0; }).validate(), std::invalid_argument);
  EXPECT_THROW(bad([](auto& c) { c.example = {ExampleId::HalfPlane, 0.4}; }).validate(), std::invalid_argument);
}

TEST(Config, ExperimentMustMatchExample) {
  EXPECT_THROW(exp_smoothness(config(Experiment::Smoothness, ExampleId::HalfPlane)), std::invalid_argument);
  EXPECT_THROW(exp_taylor_failure(config(Experiment::TaylorFailure, ExampleId::Annulus)), std::invalid_argument);
  EXPECT_THROW(exp_c1_not_c2(config(Experiment::C1NotC2, ExampleId::Quadrant)), std::invalid_argument);
  EXPECT_THROW(exp_identity_theorem_failure(config(Experiment::IdentityTheoremFailure, ExampleId::Quadrant)),
               std::invalid_argument);
  EXPECT_THROW(exp_real_restriction(config(Experiment::RealRestriction, ExampleId::Annulus)), std::invalid_argument);
}

TEST(Names, RoundTrip) {
  for (auto e : {Experiment::Smoothness, Experiment::TaylorFailure, Experiment::IdentityTheoremFailure,
                 Experiment::C1NotC2, Experiment::RealRestriction, Experiment::MeasureIdentities})
    EXPECT_EQ(parse_experiment(to_string(e)), e);
  EXPECT_THROW(parse_experiment("smooth"), std::invalid_argument);
  EXPECT_EQ(to_string(Verdict::DivergentAsExpected), "DIVERGENT-AS-EXPECTED");
  EXPECT_TRUE(is_success(Verdict::Pass));
  EXPECT_TRUE(is_success(Verdict::DivergentAsExpected));
  EXPECT_FALSE(is_success(Verdict::Fail));
  EXPECT_FALSE(is_success(Verdict::Inconclusive));
}

TEST(BlowupConstants, Values) {
  const auto b = BlowupConstants::for_p(0.75);
  EXPECT_NEAR(b.c, 0.20755374871029735, 1e-12);
  EXPECT_NEAR(b.c, 1.0 / (std::numbers::e * std::sqrt(std::numbers::pi)), 1e-15);
  EXPECT_DOUBLE_EQ(b.exponent, -0.5);
  EXPECT_DOUBLE_EQ(b.prefactor, std::pow(2.0, 0.25));
  EXPECT_NEAR(b.lower_bound(0.25), 0.4936487894235449, 1e-15);
  for (double p : {0.51, 0.6, 0.9, 0.99}) EXPECT_LT(BlowupConstants::for_p(p).exponent, 0.0);
}

TEST(Helpers, FitSlopeAndSignificantDigits) {
  const double xs[] = {0, 1, 2, 3}, ys[] = {1, 3, 5, 7};
  EXPECT_DOUBLE_EQ(fit_slope(xs, ys), 2.0);
  EXPECT_THROW(fit_slope(std::span(xs, 1), std::span(ys, 1)), std::invalid_argument);
  EXPECT_TRUE(agrees_to_3_significant_digits(0.30149, 0.30130));
  EXPECT_FALSE(agrees_to_3_significant_digits(0.30190, 0.30130));
  EXPECT_TRUE(agrees_to_3_significant_digits(0.0, 0.0));
  EXPECT_FALSE(agrees_to_3_significant_digits(1e-9, 0.0));
  EXPECT_TRUE(agrees_to_3_significant_digits(1.2345e-3, 1.2349e-3));
}

TEST(Smoothness, QuadrantFirstOrder) {
  auto c = config(Experiment::Smoothness, ExampleId::Quadrant);
  c.center = Complex{0.3, 0.7};
  c.k = 1;
  const auto r = exp_smoothness(c);
  EXPECT_EQ(r.verdict, Verdict::Pass);
  ASSERT_EQ(r.steps.size(), 40u);
  EXPECT_LE(r.steps.back().gauge, 1e-6);
}

TEST(Smoothness, QuadrantThirdOrderSupport) {
  auto c = config(Experiment::Smoothness, ExampleId::Quadrant);
  c.k = 3;
  const auto r = exp_smoothness(c);
  EXPECT_EQ(r.verdict, Verdict::Pass);
  for (const auto& s : r.steps) EXPECT_TRUE(s.support_ok) << s.series << ' ' << s.n;
}

TEST(Smoothness, AnnulusSecondOrder) {
  auto c = config(Experiment::Smoothness, ExampleId::Annulus);
  c.center = Complex{0.4, 0.0};
  c.k = 2;
  const auto r = exp_smoothness(c);
  EXPECT_EQ(r.verdict, Verdict::Pass);
  for (const auto& s : r.steps) EXPECT_TRUE(s.support_ok);
}

// Every g_n has l0 gauge ≤ μ(B_n) ≤ 4·max|z_{n,i} − z|.
TEST(Smoothness, BoundDominanceInEveryStep) {
  for (auto id : {ExampleId::Quadrant, ExampleId::Annulus}) {
    const auto r = exp_smoothness(config(Experiment::Smoothness, id));
    EXPECT_EQ(r.verdict, Verdict::Pass);
    EXPECT_EQ(r.series_verdicts.size(), 20u);
    for (const auto& s : r.steps) {
      // same mass summed atom-wise vs region-wise, so equality holds only up to rounding
      EXPECT_LE(s.gauge, s.bound * (1 + kRelativeSlack));
      EXPECT_LE(s.bound, s.extra_value("bound_4max") * (1 + kRelativeSlack));
    }
  }
}

TEST(TaylorFailure, WitnessesAndVanishingDerivatives) {
  const auto r = exp_taylor_failure(config(Experiment::TaylorFailure, ExampleId::Quadrant));
  EXPECT_EQ(r.verdict, Verdict::Pass);
  const auto witnesses = series(r, "witness");
  EXPECT_EQ(witnesses.size(), 5u * 8u);
  for (const auto* s : witnesses) {
    EXPECT_GT(s->gauge, 0.0);
    EXPECT_LE(s->extra_value("distance"), s->bound);
  }
  EXPECT_EQ(witnesses.back()->bound, 1e-8);
  EXPECT_EQ(series(r, "limit").size(), 5u * 4u * 40u);
}

// z0 = 0, z = r: the disagreement set is ]0,r]×]−∞,0] of mass ν(]0,r])/2 ≈ r/(2√π).
TEST(TaylorFailure, WitnessMassAtOrigin) {
  const double r = 1e-6;
  const double mass = measure(region_symdiff(quadrant_below(0.0), quadrant_below(r)));
  const double oracle = 0.5 * oracle::nu_quad(0.0, r);
  EXPECT_NEAR(mass, oracle, 1e-12 * oracle);
  EXPECT_NEAR(mass, r / (2.0 * std::sqrt(std::numbers::pi)), 1e-17);
  EXPECT_EQ(measure(region_symdiff(quadrant_below(0.3), quadrant_below(0.3))), 0.0);
}

TEST(IdentityTheoremFailure, ZeroOutsideNonzeroInside) {
  const auto r = exp_identity_theorem_failure(config(Experiment::IdentityTheoremFailure, ExampleId::Annulus));
  EXPECT_EQ(r.verdict, Verdict::Pass);
  const auto zero = series(r, "zero"), nonzero = series(r, "nonzero");
  EXPECT_GE(zero.size(), 100u);
  EXPECT_GE(nonzero.size(), 100u);
  for (const auto* s : zero) {
    EXPECT_GE(std::abs(s->nodes.at(0)), 1.0 - 1e-15);
    EXPECT_EQ(s->gauge, 0.0);
  }
  for (const auto* s : nonzero) {
    EXPECT_LT(std::abs(s->nodes.at(0)), 1.0);
    EXPECT_GT(s->gauge, 0.0);
  }
  EXPECT_NEAR(nonzero.back()->gauge, -std::expm1(-1.0), 1e-15);
  EXPECT_EQ(r.series_verdicts.at("smooth/center=1/k=1"), Verdict::Pass);
}

TEST(C1NotC2, QuantitativeAtThreeQuarters) {
  const auto r = exp_c1_not_c2(config(Experiment::C1NotC2, ExampleId::HalfPlane, 0.75));
  EXPECT_EQ(r.verdict, Verdict::DivergentAsExpected);
  for (const auto* s : series(r, "c1")) EXPECT_LE(s->gauge, s->bound * (1 + 1e-12));

  const auto& quarter = blowup_at(r, 2);
  ASSERT_EQ(quarter.extra_value("t"), 0.25);
  const double expected = std::pow(8.0, 0.75) * std::erf(0.5) / 2.0;
  EXPECT_NEAR(expected, 1.2379643161066438, 1e-15);
  const double oracle = std::pow(8.0, 0.75) * oracle::nu_quad(0.0, 0.5);
  EXPECT_NEAR(quarter.gauge, expected, 1e-10 * expected);
  EXPECT_NEAR(quarter.gauge, oracle, 1e-10 * oracle);
  EXPECT_NEAR(quarter.bound, 0.4936487894235449, 1e-15);

  for (const auto* s : series(r, "blowup")) EXPECT_GE(s->gauge, s->bound);
  EXPECT_NEAR(blowup_slope(r), -0.5, 0.05);
  EXPECT_GT(series(r, "blowup").back()->gauge, 1e6);
}

TEST(C1NotC2, PhaseAExample) {
  const auto f = make_curve({ExampleId::HalfPlane, 0.75});
  const Complex z1{0.3, -0.2};
  const Complex z2 = z1 + std::polar(1e-4, 0.7);
  const double g = lp_gauge(divided_diff(f, NodeTuple({z1, z2})), 0.75);
  EXPECT_LE(g, std::pow(1e-4, 0.25));
  EXPECT_GT(g, 0.0);
}

class BlowupSlope : public ::testing::TestWithParam<double> {};

TEST_P(BlowupSlope, MatchesOneMinusTwoP) {
  const double p = GetParam();
  const auto r = exp_c1_not_c2(config(Experiment::C1NotC2, ExampleId::HalfPlane, p));
  EXPECT_EQ(r.verdict, Verdict::DivergentAsExpected);
  EXPECT_NEAR(blowup_slope(r), 1.0 - 2.0 * p, 0.05);
  for (const auto* s : series(r, "blowup")) {
    EXPECT_GE(s->gauge, s->bound);
    const double closed = s->extra_value("closed_form");
    EXPECT_NEAR(s->gauge, closed, 1e-10 * closed);
  }
}

INSTANTIATE_TEST_SUITE_P(Exponents, BlowupSlope, ::testing::Values(0.6, 0.75, 0.9));

TEST(RealRestriction, QuadrantOnTheLine) {
  auto c = config(Experiment::RealRestriction, ExampleId::Quadrant);
  c.k = 3;
  const auto r = exp_real_restriction(c);
  EXPECT_EQ(r.verdict, Verdict::Pass);
  for (const auto& s : r.steps)
    for (const auto& z : s.nodes) EXPECT_EQ(z.imag(), 0.0);
  EXPECT_EQ(series(r, "injective").size(), 100u);
}

TEST(RealRestriction, HalfPlaneOnTheLine) {
  const auto r = exp_real_restriction(config(Experiment::RealRestriction, ExampleId::HalfPlane));
  EXPECT_EQ(r.verdict, Verdict::DivergentAsExpected);
  EXPECT_EQ(r.series_verdicts.at("blowup"), Verdict::DivergentAsExpected);
  for (const auto& s : r.steps)
    for (const auto& z : s.nodes) EXPECT_EQ(z.imag(), 0.0);
}

TEST(MeasureIdentities, Pass) {
  const auto r = exp_measure_identities(config(Experiment::MeasureIdentities, ExampleId::Quadrant));
  EXPECT_EQ(r.verdict, Verdict::Pass);
  EXPECT_EQ(series(r, "annulus").size(), 10'000u);
  EXPECT_EQ(series(r, "strip").size(), 10'000u);
  EXPECT_EQ(series(r, "oracle").front()->extra_value("samples"), 1e6);
  // (r,R) = (0,0) and (0.3,0.7)
  EXPECT_EQ(series(r, "annulus").front()->gauge, 0.0);
  const auto o = series(r, "oracle");
  EXPECT_NEAR(o.front()->bound, 0.30130479108681209, 1e-15);
  EXPECT_NEAR(oracle::annulus_quad(0.3, 0.7), 0.30130479108681209, 1e-13);
}

TEST(Verdicts, DerivedFromRecordsAlone) {
  auto r = exp_c1_not_c2(config(Experiment::C1NotC2, ExampleId::HalfPlane));
  const auto again = derive_verdict(r);
  EXPECT_EQ(again.overall, r.verdict);
  EXPECT_EQ(again.series, r.series_verdicts);

  // Tampered evidence changes the verdict.
  auto broken = r;
  for (auto& s : broken.steps)
    if (s.series == "blowup" && s.n == 5) s.gauge *= 1.001;
  EXPECT_EQ(derive_verdict(broken).overall, Verdict::Fail);

  broken = r;
  for (auto& s : broken.steps)
    if (s.series == "c1/pair=0" && s.n == 3) s.gauge = 2.0 * s.bound;
  EXPECT_EQ(derive_verdict(broken).overall, Verdict::Fail);
}

TEST(Verdicts, SupportFailureIsFail) {
  auto r = exp_smoothness(config(Experiment::Smoothness, ExampleId::Quadrant));
  r.steps[7].support_ok = false;
  EXPECT_EQ(derive_verdict(r).overall, Verdict::Fail);
}

TEST(Verdicts, SingleRecordSeriesAreInconclusive) {
  auto r = exp_real_restriction(config(Experiment::RealRestriction, ExampleId::Quadrant));
  std::vector<StepRecord> firsts;
  for (const auto& s : r.steps)
    if (s.series.starts_with("smooth") && s.n == 1) firsts.push_back(s);
  r.steps = firsts;
  EXPECT_EQ(derive_verdict(r).overall, Verdict::Inconclusive);
  r.steps.clear();
  EXPECT_EQ(derive_verdict(r).overall, Verdict::Inconclusive);
}

// The alternative F-norm ∫|f|/(1+|f|)dμ leaves every smoothness verdict unchanged.
TEST(Verdicts, RatioGaugeGivesSameSmoothnessVerdicts) {
  for (auto id : {ExampleId::Quadrant, ExampleId::Annulus}) {
    const auto cfg = config(Experiment::Smoothness, id);
    auto r = exp_smoothness(cfg);
    const auto f = make_curve(cfg.example);
    for (auto& s : r.steps) s.gauge = ratio_gauge(divided_diff(f, NodeTuple(s.nodes)));
    const auto v = derive_verdict(r);
    EXPECT_EQ(v.overall, r.verdict);
    EXPECT_EQ(v.series, r.series_verdicts);
  }
}

TEST(Determinism, SameSeedSameReport) {
  for (const auto& c : full_suite(ExperimentConfig{})) {
    if (c.experiment == Experiment::MeasureIdentities) continue;  // covered by the acceptance run
    EXPECT_EQ(without_timing(to_json(run_experiment(c))), without_timing(to_json(run_experiment(c))))
        << to_string(c.experiment);
  }
}

TEST(Determinism, SeedChangesRandomCenters) {
  auto a = config(Experiment::Smoothness, ExampleId::Quadrant);
  auto b = a;
  b.seed = 43;
  EXPECT_NE(exp_smoothness(a).steps.front().nodes, exp_smoothness(b).steps.front().nodes);
}

TEST(FullSuite, InheritsBase) {
  ExperimentConfig base;
  base.seed = 7;
  base.example.p = 0.6;
  const auto suite = full_suite(base);
  ASSERT_EQ(suite.size(), 8u);
  for (const auto& c : suite) {
    EXPECT_EQ(c.seed, 7u);
    EXPECT_EQ(c.example.p, 0.6);
  }
}

TEST(Report, JsonSchema) {
  const auto r = exp_c1_not_c2(config(Experiment::C1NotC2, ExampleId::HalfPlane));
  const auto j = to_json(r);
  for (const char* key : {"config", "steps", "verdict", "constants", "wall_time_s", "series_verdicts"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["verdict"], "DIVERGENT-AS-EXPECTED");
  EXPECT_EQ(j["config"]["example"], "example3");
  EXPECT_EQ(j["config"]["p"], 0.75);
  EXPECT_NEAR(j["constants"]["c"].get<double>(), 0.20755374871029735, 1e-15);
  EXPECT_EQ(j["constants"]["exponent"], -0.5);
  ASSERT_EQ(j["steps"].size(), r.steps.size());
  const auto& s = j["steps"][0];
  for (const char* key : {"n", "nodes", "gauge", "bound", "support_ok"}) EXPECT_TRUE(s.contains(key)) << key;
  ASSERT_EQ(s["nodes"].size(), 2u);
  EXPECT_EQ(s["nodes"][0].size(), 2u);
  EXPECT_TRUE(s["support_ok"].is_boolean());
}

TEST(Report, CsvLayout) {
  auto c = config(Experiment::Smoothness, ExampleId::Quadrant);
  c.k = 1;
  c.centers = 1;
  const auto r = exp_smoothness(c);
  std::ostringstream os;
  write_csv(os, r);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "step,gauge,bound,support_ok");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 3);
    EXPECT_TRUE(line.ends_with(",true"));
  }
  EXPECT_EQ(rows, r.steps.size());
}

TEST(Report, SuiteVerdict) {
  std::vector<ExperimentReport> reps(2);
  reps[0].verdict = Verdict::Pass;
  reps[1].verdict = Verdict::DivergentAsExpected;
  EXPECT_EQ(suite_to_json(reps)["verdict"], "PASS");
  reps[1].verdict = Verdict::Inconclusive;
  EXPECT_EQ(suite_to_json(reps)["verdict"], "FAIL");
}
