#include "toric/toric_pair.hpp"

#include <algorithm>
#include <optional>
#include <set>

#include "toric/error.hpp"

namespace toric {

std::vector<std::string> validate(const ToricPair& pair) {
  std::vector<std::string> violations;
  if (pair.dim < 1) violations.push_back("dimension must be at least 1");
  if (pair.rays.size() != pair.coeffs.size()) {
    violations.push_back("ray and coefficient counts differ");
  }
  std::set<LatticeVector> seen;
  for (std::size_t i = 0; i < pair.rays.size(); ++i) {
    const auto& ray = pair.rays[i];
    if (ray.dim() != pair.dim) {
      violations.push_back("ray " + std::to_string(i) + " has wrong dimension");
      continue;
    }
    if (!is_primitive(ray)) {
      violations.push_back("ray not primitive: " + to_string(ray));
    }
    if (!seen.insert(ray).second) {
      violations.push_back("duplicate ray: " + to_string(ray));
    }
  }
  for (const auto& a : pair.coeffs) {
    if (a <= 0 || a > 1) {
      violations.push_back("coefficient must be in (0,1]: " + to_string(a));
    }
  }
  if (violations.empty()) {
    if (!contains_origin_in_interior(body(pair).hull)) {
      violations.push_back("origin not interior");
    }
  }
  return violations;
}

void require_valid(const ToricPair& pair) {
  const auto violations = validate(pair);
  if (violations.empty()) return;
  std::string message = "invalid pair";
  for (const auto& v : violations) message += "; " + v;
  throw InputError(message);
}

PairBody body(const ToricPair& pair) {
  if (pair.rays.size() != pair.coeffs.size()) {
    throw InputError("ray and coefficient counts differ");
  }
  PairBody out;
  out.hull.dim = pair.dim;
  for (std::size_t i = 0; i < pair.rays.size(); ++i) {
    if (pair.coeffs[i] <= 0) throw InputError("coefficient must be in (0,1]");
    RationalPoint v = to_rational(pair.rays[i]);
    for (auto& c : v) c /= pair.coeffs[i];
    out.hull.vertices.push_back(std::move(v));
  }
  return out;
}

Rational mld(const VPolytope& u) {
  const Gauge g(u);
  // Every lattice point of gauge < 1 lies in U, so N ∩ U carries the minimum
  // whenever it is <= 1; otherwise scan a box large enough to hit a point.
  std::optional<Rational> best;
  for (const auto& e : lattice_points(u)) {
    if (e.is_zero()) continue;
    const Rational val = g(e);
    if (!best || val < *best) best = val;
  }
  if (best) return *best;
  // U contains no nonzero lattice point: grow until one appears.
  for (Rational s(2);; s *= 2) {
    for (const auto& e : lattice_points(scale(u, s))) {
      if (e.is_zero()) continue;
      const Rational val = g(e);
      if (!best || val < *best) best = val;
    }
    if (best) return *best;
  }
}

Rational mld(const ToricPair& pair) {
  require_valid(pair);
  return mld(body(pair).hull);
}

Rational log_discrepancy(const ToricPair& pair, const LatticeVector& e) {
  require_valid(pair);
  if (e.is_zero()) throw ContractError("log discrepancy of the zero vector");
  if (e.dim() != pair.dim) throw ContractError("dimension mismatch");
  return gauge(body(pair).hull, to_rational(e));
}

HPolytope moment_polytope(const ToricPair& pair) {
  require_valid(pair);
  HPolytope h;
  h.dim = pair.dim;
  for (std::size_t i = 0; i < pair.rays.size(); ++i) {
    h.inequalities.push_back({to_rational(pair.rays[i]), Rational(-pair.coeffs[i])});
  }
  return h;
}

Rational anticanonical_volume(const ToricPair& pair) {
  const VPolytope square = dual_vertices(moment_polytope(pair));
  Integer factorial(1);
  for (std::size_t i = 2; i <= pair.dim; ++i) factorial *= static_cast<unsigned long>(i);
  return Rational(factorial) * volume(square);
}

ToricPair transform(const ToricPair& pair, const IntMatrix& a) {
  if (a.rows() != pair.dim || a.cols() != pair.dim) {
    throw ContractError("transform dimension mismatch");
  }
  const Integer det = determinant(a);
  if (det != 1 && det != -1) throw ContractError("transform is not unimodular");
  ToricPair out = pair;
  for (auto& ray : out.rays) {
    std::vector<Integer> image(pair.dim, Integer(0));
    for (std::size_t r = 0; r < pair.dim; ++r)
      for (std::size_t c = 0; c < pair.dim; ++c) image[r] += a(r, c) * ray[c];
    ray = LatticeVector(std::move(image));
  }
  return out;
}

}  // namespace toric
