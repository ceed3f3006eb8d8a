#include "toric/width_search.hpp"

#include <algorithm>
#include <optional>

#include "toric/error.hpp"

namespace toric {

WidthResult measure_width(const VPolytope& u, const DualFunctional& phi) {
  WidthResult r;
  r.functional = phi;
  r.interval = width_interval(u, phi);
  r.width = r.interval.length();
  r.w_minus = -r.interval.lo;
  r.w_plus = r.interval.hi;
  return r;
}

FunctionalEnumerator::FunctionalEnumerator(const VPolytope& u) : u_(reduce_vertices(u)) {
  const std::size_t d = u_.dim;
  if (affine_rank(u_.vertices) != d) {
    throw ContractError("width search needs a full-dimensional body");
  }
  scale_ = 1;
  for (const auto& v : u_.vertices)
    for (const auto& c : v) scale_ = lcm(scale_, c.get_den());
  for (const auto& v : u_.vertices) {
    std::vector<Integer> row;
    row.reserve(d);
    for (const auto& c : v) row.push_back(c.get_num() * (scale_ / c.get_den()));
    scaled_.push_back(std::move(row));
  }
  // (U-U)* = {phi : width(phi) <= 1}.
  polar_ = dual_vertices(polar_dual(difference_body(u_)));
}

Rational FunctionalEnumerator::width(const DualFunctional& phi) const {
  if (phi.dim() != u_.dim) throw ContractError("dimension mismatch in width");
  Integer lo;
  Integer hi;
  Integer val;
  for (std::size_t i = 0; i < scaled_.size(); ++i) {
    val = 0;
    for (std::size_t k = 0; k < phi.dim(); ++k) val += phi[k] * scaled_[i][k];
    if (i == 0 || val < lo) lo = val;
    if (i == 0 || val > hi) hi = val;
  }
  return make_rational(hi - lo, scale_);
}

std::vector<WidthResult> FunctionalEnumerator::within(const Rational& radius) const {
  const std::size_t d = u_.dim;
  const VPolytope search = scale(polar_, radius);
  std::vector<WidthResult> out;
  std::vector<Integer> prefix;
  // Depth-first over coordinates, each bounded by the slice of radius·(U-U)*.
  // The first nonzero coordinate is kept positive.
  const auto descend = [&](auto&& self, bool zero_so_far) -> void {
    if (prefix.size() == d) {
      if (zero_so_far) return;
      const DualFunctional phi(prefix);
      if (is_primitive(phi) && width(phi) <= radius) out.push_back(measure_width(u_, phi));
      return;
    }
    const auto range = coordinate_range(search, prefix);
    if (!range) return;
    Integer lo = range->first;
    if (zero_so_far && lo < 0) lo = 0;
    for (Integer x = lo; x <= range->second; ++x) {
      prefix.push_back(x);
      self(self, zero_so_far && x == 0);
      prefix.pop_back();
    }
  };
  descend(descend, true);
  std::sort(out.begin(), out.end(), [](const WidthResult& a, const WidthResult& b) {
    if (a.width != b.width) return a.width < b.width;
    return a.functional < b.functional;
  });
  return out;
}

std::vector<WidthResult> minimal_width_functionals(const VPolytope& u, const Rational& radius) {
  if (radius <= 0) throw ContractError("search radius must be positive");
  const FunctionalEnumerator enumerator(u);
  // Grow the radius geometrically; the minimum within a smaller radius is
  // the minimum within the full radius once anything is found.
  Rational r = radius < 2 ? radius : Rational(2);
  while (true) {
    auto found = enumerator.within(r);
    if (!found.empty()) {
      const Rational best = found.front().width;
      std::vector<WidthResult> ties;
      for (auto& f : found) {
        if (f.width != best) break;
        ties.push_back(std::move(f));
      }
      return ties;
    }
    if (r == radius) {
      throw SearchError("width exceeds radius " + to_string(radius));
    }
    r *= 2;
    if (r > radius) r = radius;
  }
}

WidthResult min_width_functional(const VPolytope& u, const Rational& radius) {
  return minimal_width_functionals(u, radius).front();
}

EndpointBoundReport check_endpoint_bound(const VPolytope& u, const WidthResult& r) {
  EndpointBoundReport report;
  const Interval actual = width_interval(u, r.functional);
  if (!(actual == r.interval) || r.w_minus != -actual.lo || r.w_plus != actual.hi ||
      r.width != r.w_minus + r.w_plus) {
    report.ok = false;
    report.message = "width record inconsistent with functional " + to_string(r.functional);
    return report;
  }
  if (r.w_minus < 1 || r.w_plus < 1) {
    report.ok = false;
    report.message = "functional " + to_string(r.functional) + " has interval [" +
                     to_string(actual.lo) + ", " + to_string(actual.hi) +
                     "]; both endpoints must have absolute value >= 1";
  }
  return report;
}

LambdaOracleResult lambda_exact_oracle(const VPolytope& u, const Rational& cap) {
  const std::size_t d = u.dim;
  if (d < 1 || d > 3) throw ContractError("lambda oracle supports dimension 1 to 3");
  const auto candidates = FunctionalEnumerator(u).within(cap);

  std::vector<DualFunctional> functionals;
  for (const auto& c : candidates) functionals.push_back(c.functional);

  std::size_t group_start = 0;
  while (group_start < candidates.size()) {
    std::size_t group_end = group_start;
    while (group_end < candidates.size() &&
           candidates[group_end].width == candidates[group_start].width) {
      ++group_end;
    }
    for (std::size_t j = group_start; j < group_end; ++j) {
      std::optional<std::vector<DualFunctional>> found;
      for_each_combination(j, d - 1, [&](std::span<const std::size_t> idx) {
        std::vector<DualFunctional> basis;
        for (auto i : idx) basis.push_back(functionals[i]);
        basis.push_back(functionals[j]);
        const Integer det = determinant(IntMatrix::from_rows(basis, d));
        if (det == 1 || det == -1) {
          found = std::move(basis);
          return false;
        }
        return true;
      });
      if (found) return {candidates[group_start].width, std::move(*found)};
    }
    group_start = group_end;
  }
  throw SearchError("no basis of functionals with width <= " + to_string(cap));
}

}  // namespace toric
