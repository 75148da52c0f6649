#pragma once

#include <iosfwd>
#include <span>

#include "json.hpp"

#include "nlc/experiments.hpp"

namespace nlc {

// Regions serialize as {"family": "grid", "cells": [{"x": [lo, hi], "y": [lo, hi]}]}
// or {"family": "radial", "rings": [[lo, hi], ...]}; infinite endpoints are
// the strings "-inf" / "inf".
nlohmann::json to_json(const Region& r);
Region region_from_json(const nlohmann::json& j);

// {"family": ..., "atoms": [{"re": ..., "im": ..., "region": {...}}]}
nlohmann::json to_json(const SimpleFunction& f);
SimpleFunction function_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ExperimentConfig& cfg);

/// {experiment, config, steps: [{n, series, nodes, gauge, bound, support_ok, ...}],
///  verdict, series_verdicts, constants: {c, exponent, prefactor}, wall_time_s}
nlohmann::json to_json(const ExperimentReport& rep);

/// Header `step,gauge,bound,support_ok`, one row per record.
void write_csv(std::ostream& os, const ExperimentReport& rep);

/// {"reports": [...], "verdict": "PASS" | "FAIL"}
nlohmann::json suite_to_json(std::span<const ExperimentReport> reports);

}  // namespace nlc
