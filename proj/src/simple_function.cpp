#include "nlc/simple_function.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "nlc/measure.hpp"

namespace nlc {

namespace {

using CoefKey = std::pair<double, double>;

// Accumulates term coefficients over the elementary cells of a raster and
// groups the surviving cells by exact coefficient value.
template <typename Accumulate, typename Build>
std::vector<Term> refine(std::size_t n_cells, const std::vector<Term>& terms, double zero_tol,
                         Accumulate&& accumulate, Build&& build) {
  std::vector<Complex> acc(n_cells, Complex{});
  double max_coef = 0.0;
  for (const auto& t : terms) {
    max_coef = std::max(max_coef, std::abs(t.coef));
    accumulate(t, acc);
  }
  const double cutoff = zero_tol * max_coef;
  std::map<CoefKey, std::vector<char>> groups;
  for (std::size_t i = 0; i < n_cells; ++i) {
    const Complex c = acc[i];
    if (std::abs(c) <= cutoff) continue;
    auto [it, inserted] = groups.try_emplace(CoefKey{c.real(), c.imag()});
    if (inserted) it->second.assign(n_cells, 0);
    it->second[i] = 1;
  }
  std::vector<Term> atoms;
  atoms.reserve(groups.size());
  for (const auto& [key, mask] : groups) atoms.push_back(Term{Complex{key.first, key.second}, build(mask)});
  return atoms;
}

std::vector<Term> grid_atoms(const std::vector<Term>& terms, double zero_tol) {
  std::vector<double> xs, ys;
  for (const auto& t : terms) t.region.grid().collect_breakpoints(xs, ys);
  xs = breakpoints_with_infinities(std::move(xs));
  ys = breakpoints_with_infinities(std::move(ys));
  const std::size_t ny = ys.size() - 1;
  return refine(
      (xs.size() - 1) * ny, terms, zero_tol,
      [&](const Term& t, std::vector<Complex>& acc) {
        for (const auto& c : t.region.grid().cells()) {
          auto [i0, i1] = covered_span(xs, c.x);
          auto [j0, j1] = covered_span(ys, c.y);
          for (std::size_t i = i0; i < i1; ++i)
            for (std::size_t j = j0; j < j1; ++j) acc[i * ny + j] += t.coef;
        }
      },
      [&](const std::vector<char>& mask) { return Region(GridRegion::from_mask(xs, ys, mask)); });
}

std::vector<Term> radial_atoms(const std::vector<Term>& terms, double zero_tol) {
  std::vector<double> rs{0.0, std::numeric_limits<double>::infinity()};
  for (const auto& t : terms)
    for (const auto& ring : t.region.radial().rings()) {
      rs.push_back(ring.lo().value());
      rs.push_back(ring.hi().value());
    }
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  return refine(
      rs.size() - 1, terms, zero_tol,
      [&](const Term& t, std::vector<Complex>& acc) {
        for (const auto& ring : t.region.radial().rings()) {
          auto [i0, i1] = covered_span(rs, ring);
          for (std::size_t i = i0; i < i1; ++i) acc[i] += t.coef;
        }
      },
      [&](const std::vector<char>& mask) { return Region(RadialRegion(IntervalSet::from_mask(rs, mask))); });
}

}  // namespace

SimpleFunction::SimpleFunction(Family family) : family_(family) {}

SimpleFunction::SimpleFunction(Family family, std::vector<Term> terms, double zero_tol)
    : family_(family), terms_(std::move(terms)) {
  for (const auto& t : terms_)
    if (t.region.family() != family_) throw FamilyMismatch();
  if (terms_.empty()) return;
  atoms_ = family_ == Family::Grid ? grid_atoms(terms_, zero_tol) : radial_atoms(terms_, zero_tol);
}

Complex SimpleFunction::eval_terms(Complex w) const {
  Complex sum{};
  for (const auto& t : terms_)
    if (t.region.contains(w)) sum += t.coef;
  return sum;
}

Complex SimpleFunction::eval(Complex w) const {
  for (const auto& a : atoms_)
    if (a.region.contains(w)) return a.coef;
  return {};
}

SimpleFunction SimpleFunction::canonicalized(double zero_tol) const {
  return SimpleFunction(family_, atoms_, zero_tol);
}

SimpleFunction indicator(const Region& r) { return SimpleFunction(r.family(), {Term{Complex{1.0, 0.0}, r}}); }

SimpleFunction linear_combine(std::span<const Complex> coeffs, std::span<const SimpleFunction> fns,
                              double zero_tol) {
  if (coeffs.size() != fns.size()) throw std::invalid_argument("linear_combine: size mismatch");
  if (fns.empty()) throw std::invalid_argument("linear_combine: no functions");
  const Family family = fns.front().family();
  std::vector<Term> terms;
  for (std::size_t i = 0; i < fns.size(); ++i) {
    if (fns[i].family() != family) throw FamilyMismatch();
    if (coeffs[i] == Complex{}) continue;
    for (const auto& a : fns[i].atoms()) terms.push_back(Term{coeffs[i] * a.coef, a.region});
  }
  return SimpleFunction(family, std::move(terms), zero_tol);
}

SimpleFunction operator+(const SimpleFunction& a, const SimpleFunction& b) {
  const Complex c[] = {1.0, 1.0};
  const SimpleFunction f[] = {a, b};
  return linear_combine(c, f);
}

SimpleFunction operator-(const SimpleFunction& a, const SimpleFunction& b) {
  const Complex c[] = {1.0, -1.0};
  const SimpleFunction f[] = {a, b};
  return linear_combine(c, f);
}

SimpleFunction operator*(Complex c, const SimpleFunction& f) {
  const Complex cs[] = {c};
  const SimpleFunction fs[] = {f};
  return linear_combine(cs, fs);
}

double gauge_in_measure(const SimpleFunction& f, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("gauge_in_measure: eps must be positive");
  double total = 0.0;
  for (const auto& a : f.atoms())
    if (std::abs(a.coef) >= eps) total += measure(a.region);
  return total;
}

bool wk_member(const SimpleFunction& f, long long k) {
  if (k < 1) throw std::invalid_argument("wk_member: k must be >= 1");
  const double inv = 1.0 / static_cast<double>(k);
  return gauge_in_measure(f, inv) < inv;
}

double l0_gauge(const SimpleFunction& f) {
  double total = 0.0;
  for (const auto& a : f.atoms()) total += std::min(1.0, std::abs(a.coef)) * measure(a.region);
  return total;
}

double ratio_gauge(const SimpleFunction& f) {
  double total = 0.0;
  for (const auto& a : f.atoms()) {
    const double m = std::abs(a.coef);
    total += m / (1.0 + m) * measure(a.region);
  }
  return total;
}

double lp_gauge(const SimpleFunction& f, double p) {
  if (!(p > 0.5 && p < 1.0)) throw std::invalid_argument("lp_gauge: p must lie in ]1/2, 1[");
  double total = 0.0;
  for (const auto& a : f.atoms()) total += std::pow(std::abs(a.coef), p) * measure(a.region);
  return total;
}

bool supported_in(const SimpleFunction& f, const SupportBound& bound) {
  if (f.family() != bound.region.family()) throw FamilyMismatch();
  return std::all_of(f.atoms().begin(), f.atoms().end(),
                     [&](const Term& a) { return region_subset(a.region, bound.region); });
}

Region support_of(const SimpleFunction& f) {
  Region out = Region::empty_of(f.family());
  for (const auto& a : f.atoms()) out = region_union(out, a.region);
  return out;
}

}  // namespace nlc
