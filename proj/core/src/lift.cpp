#include "toric/lift.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "toric/error.hpp"

namespace toric {

namespace {

struct ProjectedBody {
  std::vector<Rational> a;  // initial(v)
  std::vector<Rational> b;  // phi(v)

  Rational length(const Rational& z) const {
    Rational lo;
    Rational hi;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const Rational v = a[i] + z * b[i];
      if (i == 0 || v < lo) lo = v;
      if (i == 0 || v > hi) hi = v;
    }
    return hi - lo;
  }
};

ProjectedBody project(const DualFunctional& initial, const DualFunctional& phi,
                      const VPolytope& body) {
  if (body.vertices.empty()) throw ContractError("empty body");
  ProjectedBody out;
  for (const auto& v : body.vertices) {
    out.a.push_back(evaluate(initial, v));
    out.b.push_back(evaluate(phi, v));
  }
  return out;
}

}  // namespace

LiftProblem make_lift_problem(VPolytope body, DualFunctional phi, Rational point,
                              DualFunctional slice_functional) {
  const std::size_t d = body.dim;
  if (d < 2) throw ContractError("lifting needs ambient dimension >= 2");
  if (phi.dim() != d || slice_functional.dim() + 1 != d) {
    throw ContractError("dimension mismatch in lift problem");
  }
  if (!is_primitive(phi)) throw ContractError("phi is not primitive");
  if (!is_primitive(slice_functional)) {
    throw ContractError("slice functional is not surjective");
  }
  LiftProblem p;
  p.range = width_interval(body, phi);
  if (!(p.range.lo < point && point < p.range.hi)) {
    throw ContractError("point " + to_string(point) + " is not interior to phi(C)");
  }
  p.gamma = std::min(Rational(point - p.range.lo), Rational(p.range.hi - point)) /
            p.range.length();
  p.slice_body = slice(body, phi, point);
  p.slice_width = width_interval(p.slice_body, slice_functional).length();
  if (p.slice_width == 0) throw ContractError("slice has zero width");
  p.phi = std::move(phi);
  p.body = std::move(body);
  p.point = std::move(point);
  p.slice_functional = std::move(slice_functional);
  return p;
}

Rational shifted_length(const DualFunctional& initial, const DualFunctional& phi,
                        const VPolytope& body, const Integer& z) {
  return project(initial, phi, body).length(Rational(z));
}

ShiftScan scan_shift(const DualFunctional& initial, const DualFunctional& phi,
                     const VPolytope& body) {
  const ProjectedBody proj = project(initial, phi, body);

  // The real minimizer sits at a breakpoint of the piecewise-linear length.
  std::optional<Rational> real_min;
  Rational real_value;
  for (std::size_t i = 0; i < proj.a.size(); ++i) {
    for (std::size_t j = 0; j < proj.a.size(); ++j) {
      if (proj.b[i] == proj.b[j]) continue;
      const Rational z = (proj.a[j] - proj.a[i]) / (proj.b[i] - proj.b[j]);
      const Rational val = proj.length(z);
      if (!real_min || val < real_value || (val == real_value && z < *real_min)) {
        real_min = z;
        real_value = val;
      }
    }
  }
  if (!real_min) throw ContractError("phi is constant on the body");

  std::map<Integer, Rational> samples;
  auto f = [&](const Integer& z) -> const Rational& {
    auto it = samples.find(z);
    if (it == samples.end()) it = samples.emplace(z, proj.length(Rational(z))).first;
    return it->second;
  };

  const Integer seed = floor(*real_min);
  for (Integer z = seed; f(z - 1) <= f(z); z -= 1) {
  }
  for (Integer z = seed; f(z + 1) <= f(z); z += 1) {
  }

  ShiftScan scan;
  bool rising = false;
  const Rational* prev = nullptr;
  for (const auto& [z, value] : samples) {
    if (prev != nullptr) {
      if (value > *prev) rising = true;
      if (rising && value < *prev) {
        throw InternalError("shift scan is not unimodal around " + to_string(z));
      }
    }
    prev = &value;
    scan.samples.emplace_back(z, value);
  }

  const Rational* best_value = nullptr;
  for (const auto& [z, value] : scan.samples) {
    if (best_value == nullptr || value < *best_value) {
      best_value = &value;
      scan.best = z;
    } else if (value == *best_value) {
      const int by_abs = cmpabs(z, scan.best);
      if (by_abs < 0 || (by_abs == 0 && z < scan.best)) scan.best = z;
    }
  }
  return scan;
}

Integer best_shift(const DualFunctional& initial, const DualFunctional& phi,
                   const VPolytope& body) {
  return scan_shift(initial, phi, body).best;
}

Integer explicit_shift(const DualFunctional& initial, const DualFunctional& phi,
                       const VPolytope& body, const Rational& point) {
  const ProjectedBody proj = project(initial, phi, body);
  const std::size_t n = proj.a.size();

  // Top of the slice {x1 = p}.
  std::optional<Rational> top;
  for (std::size_t i = 0; i < n; ++i) {
    if (proj.b[i] == point && (!top || proj.a[i] > *top)) top = proj.a[i];
    if (proj.b[i] >= point) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (proj.b[j] <= point) continue;
      const Rational s = (point - proj.b[i]) / (proj.b[j] - proj.b[i]);
      const Rational y = proj.a[i] + s * (proj.a[j] - proj.a[i]);
      if (!top || y > *top) top = y;
    }
  }
  if (!top) throw ContractError("point outside phi(C)");

  // Right derivative of the concave upper boundary at p.
  std::optional<Rational> slope;
  for (std::size_t i = 0; i < n; ++i) {
    if (proj.b[i] <= point) continue;
    const Rational s = (proj.a[i] - *top) / (proj.b[i] - point);
    if (!slope || s > *slope) slope = s;
  }
  if (!slope) throw ContractError("point is not interior to phi(C)");
  return ceil(-*slope);
}

LiftResult lift_functional(const LiftProblem& problem) {
  const LatticeSplit split = split_lattice(problem.phi);
  LiftResult r;
  r.initial = split.extend_from_kernel(problem.slice_functional);
  r.shift = best_shift(r.initial, problem.phi, problem.body);
  r.functional = r.initial + r.shift * problem.phi;
  r.length = width_interval(problem.body, r.functional).length();
  r.bound = problem.range.length() + problem.slice_width / problem.gamma;

  if (!(split.restrict_to_kernel(r.functional) == problem.slice_functional)) {
    throw InternalError("lift " + to_string(r.functional) + " does not restrict to " +
                        to_string(problem.slice_functional));
  }
  if (!(r.length < r.bound)) {
    throw InternalError("lift " + to_string(r.functional) + " has length " +
                        to_string(r.length) + ", not below " + to_string(r.bound));
  }
  return r;
}

}  // namespace toric
