#pragma once

// Lattice width of a body U: primitive functionals of minimal width, the
// endpoint check on phi(U), and an exhaustive search for the smallest t
// such that t·(U-U)* contains a basis of M.

#include <string>
#include <optional>
#include <utility>
#include <vector>

#include "toric/convex_body.hpp"
#include "toric/numeric_lattice.hpp"

namespace toric {

struct WidthResult {
  DualFunctional functional;
  Interval interval;  // phi(U) = [-w_minus, w_plus]
  Rational width;
  Rational w_minus;
  Rational w_plus;
};

WidthResult measure_width(const VPolytope& u, const DualFunctional& phi);

/// Enumerates the integer points of a dilate of the polar of U - U, i.e.
/// the functionals of width at most a given radius. Functionals are
/// reported once per sign, normalized so the first nonzero coordinate is
/// positive.
class FunctionalEnumerator {
 public:
  explicit FunctionalEnumerator(const VPolytope& u);

  /// Primitive functionals of width <= radius, sorted by width, then
  /// lexicographically.
  std::vector<WidthResult> within(const Rational& radius) const;

  /// Width of phi on U.
  Rational width(const DualFunctional& phi) const;

 private:
  VPolytope u_;
  std::vector<std::vector<Integer>> scaled_;  // denominators cleared
  Integer scale_;
  VPolytope polar_;  // (U-U)*
};

/// All primitive functionals attaining the minimal width, provided it is
/// <= radius; sorted lexicographically. Throws SearchError "width exceeds
/// radius" otherwise.
std::vector<WidthResult> minimal_width_functionals(const VPolytope& u, const Rational& radius);

/// The lexicographically smallest minimal-width functional.
WidthResult min_width_functional(const VPolytope& u, const Rational& radius);

struct EndpointBoundReport {
  bool ok = true;
  std::string message;
};

/// Both endpoints of phi(U) must have absolute value >= 1.
EndpointBoundReport check_endpoint_bound(const VPolytope& u, const WidthResult& r);

struct LambdaOracleResult {
  Rational lambda;
  std::vector<DualFunctional> basis;
};

/// Exact minimal t such that the functionals of width <= t contain a basis
/// of M. Dimension <= 3. Throws SearchError when no basis fits under cap.
LambdaOracleResult lambda_exact_oracle(const VPolytope& u, const Rational& cap);

}  // namespace toric
