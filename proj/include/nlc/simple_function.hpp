#pragma once

#include <span>
#include <vector>

#include "nlc/region.hpp"

namespace nlc {

/// Relative threshold below which an atom coefficient counts as zero:
/// |c| ≤ kDefaultZeroTolerance · max |term coefficient|.
inline constexpr double kDefaultZeroTolerance = 1e-9;

struct Term {
  Complex coef;
  Region region;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Finite complex combination of region indicators, a stand-in for an
/// element of L⁰(ℂ,μ) or Lᵖ(ℂ,μ).
///
/// The canonical atom list is computed at construction: atoms are pairwise
/// disjoint, carry pairwise distinct nonzero coefficients, and their regions
/// are in canonical form. Two functions with equal atoms are equal as
/// functions (not only almost everywhere).
class SimpleFunction {
 public:
  /// The zero function of a family.
  explicit SimpleFunction(Family family);
  /// Throws FamilyMismatch if a term region has another family.
  SimpleFunction(Family family, std::vector<Term> terms, double zero_tol = kDefaultZeroTolerance);

  static SimpleFunction zero(Family family) { return SimpleFunction(family); }

  Family family() const { return family_; }
  const std::vector<Term>& terms() const { return terms_; }
  const std::vector<Term>& atoms() const { return atoms_; }
  bool is_zero() const { return atoms_.empty(); }

  /// Σ of coefficients of the terms whose region contains w.
  Complex eval_terms(Complex w) const;
  /// Coefficient of the unique atom containing w (0 outside all atoms).
  Complex eval(Complex w) const;

  /// Rebuilds from the atoms alone.
  SimpleFunction canonicalized(double zero_tol = kDefaultZeroTolerance) const;

  /// Equality of the canonical atom decompositions.
  friend bool operator==(const SimpleFunction& a, const SimpleFunction& b) {
    return a.family_ == b.family_ && a.atoms_ == b.atoms_;
  }

 private:
  Family family_;
  std::vector<Term> terms_;
  std::vector<Term> atoms_;
};

/// 1_r
SimpleFunction indicator(const Region& r);

/// Σ coeffs[i] · fns[i]. The terms of the result are the scaled atoms of the
/// inputs. Throws FamilyMismatch or std::invalid_argument on size mismatch
/// or an empty list.
SimpleFunction linear_combine(std::span<const Complex> coeffs, std::span<const SimpleFunction> fns,
                              double zero_tol = kDefaultZeroTolerance);

SimpleFunction operator+(const SimpleFunction& a, const SimpleFunction& b);
SimpleFunction operator-(const SimpleFunction& a, const SimpleFunction& b);
SimpleFunction operator*(Complex c, const SimpleFunction& f);

/// μ({w : |f(w)| ≥ eps}). Requires eps > 0.
double gauge_in_measure(const SimpleFunction& f, double eps);

/// f ∈ W_k  ⇔  μ({|f| ≥ 1/k}) < 1/k. Requires k ≥ 1.
bool wk_member(const SimpleFunction& f, long long k);

/// ∫ min(1, |f|) dμ, a metric gauge for convergence in measure.
double l0_gauge(const SimpleFunction& f);

/// ∫ |f| / (1 + |f|) dμ, an alternative F-norm for the same topology.
double ratio_gauge(const SimpleFunction& f);

/// ∫ |f|ᵖ dμ for ½ < p < 1; throws std::invalid_argument otherwise.
double lp_gauge(const SimpleFunction& f, double p);

/// Region in which elements are claimed to be supported.
struct SupportBound {
  Region region;
};

/// True iff every atom lies inside bound.region. Throws FamilyMismatch.
bool supported_in(const SimpleFunction& f, const SupportBound& bound);

/// Union of the atom regions.
Region support_of(const SimpleFunction& f);

}  // namespace nlc
