#include "nlc/report_io.hpp"

#include <cmath>
#include <limits>
#include <ostream>

namespace nlc {

using nlohmann::json;

namespace {

json endpoint(ExtendedReal e) {
  if (e.value() == -std::numeric_limits<double>::infinity()) return "-inf";
  if (e.value() == std::numeric_limits<double>::infinity()) return "inf";
  return e.value();
}

ExtendedReal parse_endpoint(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "-inf") return ExtendedReal::neg_inf();
    if (s == "inf") return ExtendedReal::pos_inf();
    throw std::invalid_argument("bad endpoint: " + s);
  }
  return j.get<double>();
}

json interval_json(const Interval& iv) { return json::array({endpoint(iv.lo()), endpoint(iv.hi())}); }

Interval parse_interval(const json& j) { return {parse_endpoint(j.at(0)), parse_endpoint(j.at(1))}; }

Family parse_family(const json& j) {
  const auto s = j.get<std::string>();
  if (s == "grid") return Family::Grid;
  if (s == "radial") return Family::Radial;
  throw std::invalid_argument("bad family: " + s);
}

json nodes_json(const std::vector<Complex>& nodes) {
  json out = json::array();
  for (const auto& z : nodes) out.push_back(json::array({z.real(), z.imag()}));
  return out;
}

}  // namespace

json to_json(const Region& r) {
  json j{{"family", std::string(to_string(r.family()))}};
  if (r.family() == Family::Grid) {
    json cells = json::array();
    for (const auto& c : r.grid().cells()) cells.push_back({{"x", interval_json(c.x)}, {"y", interval_json(c.y)}});
    j["cells"] = std::move(cells);
  } else {
    json rings = json::array();
    for (const auto& ring : r.radial().rings()) rings.push_back(interval_json(ring));
    j["rings"] = std::move(rings);
  }
  return j;
}

Region region_from_json(const json& j) {
  if (parse_family(j.at("family")) == Family::Grid) {
    std::vector<Cell> cells;
    for (const auto& c : j.at("cells")) cells.push_back(Cell{parse_interval(c.at("x")), parse_interval(c.at("y"))});
    return GridRegion(std::move(cells));
  }
  std::vector<Interval> rings;
  for (const auto& ring : j.at("rings")) rings.push_back(parse_interval(ring));
  return RadialRegion(std::move(rings));
}

json to_json(const SimpleFunction& f) {
  json atoms = json::array();
  for (const auto& a : f.atoms())
    atoms.push_back({{"re", a.coef.real()}, {"im", a.coef.imag()}, {"region", to_json(a.region)}});
  return {{"family", std::string(to_string(f.family()))}, {"atoms", std::move(atoms)}};
}

SimpleFunction function_from_json(const json& j) {
  const Family family = parse_family(j.at("family"));
  std::vector<Term> terms;
  for (const auto& a : j.at("atoms"))
    terms.push_back(Term{Complex{a.at("re").get<double>(), a.at("im").get<double>()}, region_from_json(a.at("region"))});
  return SimpleFunction(family, std::move(terms));
}

json to_json(const ExperimentConfig& cfg) {
  json j{
      {"experiment", std::string(to_string(cfg.experiment))},
      {"example", std::string(to_string(cfg.example.id))},
      {"p", cfg.example.p},
      {"seed", cfg.seed},
      {"k", cfg.k},
      {"rho", cfg.rho},
      {"steps", cfg.steps},
      {"blowup_steps", cfg.blowup_steps},
      {"centers", cfg.centers},
      {"pairs", cfg.pairs},
      {"tolerances",
       {{"convergence", cfg.tol.convergence},
        {"divergence", cfg.tol.divergence},
        {"coefficient_zero", cfg.tol.coefficient_zero}}},
      {"mc_samples", cfg.mc_samples},
      {"sweep_points", cfg.sweep_points},
  };
  j["center"] = cfg.center ? json::array({cfg.center->real(), cfg.center->imag()}) : json(nullptr);
  return j;
}

json to_json(const ExperimentReport& rep) {
  json steps = json::array();
  for (const auto& s : rep.steps) {
    json j{{"n", s.n},           {"series", s.series}, {"nodes", nodes_json(s.nodes)},
           {"gauge", s.gauge},   {"bound", s.bound},   {"support_ok", s.support_ok}};
    for (const auto& [k, v] : s.extra) j[k] = v;
    steps.push_back(std::move(j));
  }
  json series = json::object();
  for (const auto& [name, v] : rep.series_verdicts) series[name] = std::string(to_string(v));
  return {
      {"experiment", std::string(to_string(rep.config.experiment))},
      {"config", to_json(rep.config)},
      {"steps", std::move(steps)},
      {"verdict", std::string(to_string(rep.verdict))},
      {"series_verdicts", std::move(series)},
      {"constants", {{"c", rep.constants.c}, {"exponent", rep.constants.exponent}, {"prefactor", rep.constants.prefactor}}},
      {"wall_time_s", rep.wall_time_s},
  };
}

void write_csv(std::ostream& os, const ExperimentReport& rep) {
  const auto old_precision = os.precision(17);
  os << "step,gauge,bound,support_ok\n";
  for (const auto& s : rep.steps) os << s.n << ',' << s.gauge << ',' << s.bound << ',' << (s.support_ok ? "true" : "false") << '\n';
  os.precision(old_precision);
}

json suite_to_json(std::span<const ExperimentReport> reports) {
  json arr = json::array();
  bool ok = true;
  for (const auto& r : reports) {
    arr.push_back(to_json(r));
    ok = ok && is_success(r.verdict);
  }
  return {{"reports", std::move(arr)}, {"verdict", ok ? "PASS" : "FAIL"}};
}

}  // namespace nlc
