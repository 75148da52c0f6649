// verify: runs the counterexample experiments and writes JSON/CSV reports.
//
//   verify <experiment> --example <example1|example2|example3> [--k N] [--p X]
//          [--rho X] [--steps N] [--seed N] [--tol X] [--out FILE] [--format json|csv]
//   verify all [...]
//
// Exit status is 0 iff every verdict is PASS or DIVERGENT-AS-EXPECTED.
// When --out is absent and NLC_REPORT_DIR is set, reports are written there.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "nlc/report_io.hpp"

namespace {

constexpr const char* kOutputDirEnv = "NLC_REPORT_DIR";

nlc::ExampleId default_example(nlc::Experiment e) {
  switch (e) {
    case nlc::Experiment::IdentityTheoremFailure: return nlc::ExampleId::Annulus;
    case nlc::Experiment::C1NotC2: return nlc::ExampleId::HalfPlane;
    default: return nlc::ExampleId::Quadrant;
  }
}

std::string render(std::span<const nlc::ExperimentReport> reports, bool suite, const std::string& format) {
  std::ostringstream os;
  if (format == "csv") {
    for (const auto& r : reports) {
      if (suite) os << "# " << nlc::to_string(r.config.experiment) << ' ' << nlc::to_string(r.config.example.id) << '\n';
      nlc::write_csv(os, r);
    }
  } else if (suite) {
    os << nlc::suite_to_json(reports).dump(2) << '\n';
  } else {
    os << nlc::to_json(reports.front()).dump(2) << '\n';
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification harness for indicator-valued curves into L0 and Lp (p < 1)"};

  std::string experiment;
  std::optional<std::string> example;
  nlc::ExperimentConfig cfg;
  std::optional<double> center_re, center_im;
  std::string out;
  std::string format = "json";

  app.add_option("experiment", experiment,
                 "smoothness | taylor-failure | identity-theorem-failure | c1-not-c2 | real-restriction | "
                 "measure-identities | all")
      ->required();
  app.add_option("--example", example, "example1 | example2 | example3");
  app.add_option("--k", cfg.k, "highest divided-difference order (orders 1..k are run)");
  app.add_option("--p", cfg.example.p, "exponent of Lp for example3, in ]1/2, 1[");
  app.add_option("--rho", cfg.rho, "shrink ratio of the node schedule");
  app.add_option("--steps", cfg.steps, "steps of the shrink schedule");
  app.add_option("--blowup-steps", cfg.blowup_steps, "steps t = 2^-m of the C2 blow-up phase");
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--tol", cfg.tol.convergence, "convergence tolerance of gauge traces");
  app.add_option("--ceiling", cfg.tol.divergence, "divergence ceiling of gauge traces");
  app.add_option("--zero-tol", cfg.tol.coefficient_zero, "relative coefficient zero tolerance");
  app.add_option("--centers", cfg.centers, "number of random centers");
  app.add_option("--pairs", cfg.pairs, "number of random pairs (C1 phase)");
  app.add_option("--center-re", center_re, "fixed center, real part");
  app.add_option("--center-im", center_im, "fixed center, imaginary part");
  app.add_option("--samples", cfg.mc_samples, "Monte-Carlo oracle sample count");
  app.add_option("--out", out, "output file (default: stdout, or $NLC_REPORT_DIR)");
  app.add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  CLI11_PARSE(app, argc, argv);

  std::vector<nlc::ExperimentReport> reports;
  const bool suite = experiment == "all";
  try {
    if (center_re || center_im) cfg.center = nlc::Complex{center_re.value_or(0.0), center_im.value_or(0.0)};
    std::vector<nlc::ExperimentConfig> configs;
    if (suite) {
      configs = nlc::full_suite(cfg);
    } else {
      cfg.experiment = nlc::parse_experiment(experiment);
      cfg.example.id = example ? nlc::parse_example_id(*example) : default_example(cfg.experiment);
      configs.push_back(cfg);
    }
    for (const auto& c : configs) {
      reports.push_back(nlc::run_experiment(c));
      const auto& r = reports.back();
      std::cerr << nlc::to_string(c.experiment) << ' ' << nlc::to_string(c.example.id) << ": "
                << nlc::to_string(r.verdict) << " (" << r.steps.size() << " records, " << r.wall_time_s << " s)\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "verify: " << e.what() << '\n';
    return 2;
  }

  const std::string text = render(reports, suite, format);
  std::string path = out;
  if (path.empty()) {
    if (const char* dir = std::getenv(kOutputDirEnv)) {
      std::string stem = suite ? "all" : experiment + "-" + std::string(nlc::to_string(reports.front().config.example.id));
      path = (std::filesystem::path(dir) / (stem + "." + format)).string();
    }
  }
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(path);
    if (!f) {
      std::cerr << "verify: cannot write " << path << '\n';
      return 2;
    }
    f << text;
  }

  bool ok = true;
  for (const auto& r : reports) ok = ok && nlc::is_success(r.verdict);
  return ok ? 0 : 1;
}
