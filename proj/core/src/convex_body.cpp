#include "toric/convex_body.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <utility>

#include "toric/error.hpp"
#include "toric/linear_program.hpp"

namespace toric {

namespace {

void require_dim(const VPolytope& p, std::size_t dim, const char* what) {
  if (p.dim != dim) throw ContractError(std::string("dimension mismatch in ") + what);
  for (const auto& v : p.vertices) {
    if (v.size() != dim) throw ContractError(std::string("malformed point in ") + what);
  }
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void sort_unique(std::vector<RationalPoint>& points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

Rational cross(const RationalPoint& o, const RationalPoint& a, const RationalPoint& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain on sorted, unique points; drops collinear points.
std::vector<RationalPoint> planar_hull(const std::vector<RationalPoint>& pts) {
  if (pts.size() < 3) return pts;
  std::vector<RationalPoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  if (hull.size() == 1 && pts.size() > 1) hull.push_back(pts.back());
  return hull;
}

bool in_hull_of_others(const std::vector<RationalPoint>& pts, std::size_t skip) {
  VPolytope others;
  others.dim = pts[skip].size();
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (i != skip) others.vertices.push_back(pts[i]);
  return contains(others, pts[skip]);
}

}  // namespace

Interval width_interval(const VPolytope& p, const DualFunctional& phi) {
  if (p.vertices.empty()) throw ContractError("width of empty polytope");
  if (phi.dim() != p.dim) throw ContractError("dimension mismatch in width_interval");
  Interval out{evaluate(phi, p.vertices[0]), evaluate(phi, p.vertices[0])};
  for (const auto& v : p.vertices) {
    const Rational val = evaluate(phi, v);
    if (val < out.lo) out.lo = val;
    if (val > out.hi) out.hi = val;
  }
  return out;
}

VPolytope scale(const VPolytope& p, const Rational& s) {
  VPolytope out = p;
  for (auto& v : out.vertices)
    for (auto& c : v) c *= s;
  return out;
}

std::size_t affine_rank(const std::vector<RationalPoint>& points) {
  if (points.size() < 2) return 0;
  RationalMatrix diffs;
  for (std::size_t i = 1; i < points.size(); ++i) {
    RationalPoint d(points[i].size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    diffs.push_back(std::move(d));
  }
  return rank(std::move(diffs));
}

bool is_bounded(const HPolytope& h) {
  const std::size_t d = h.dim;
  RationalMatrix normals;
  for (const auto& ineq : h.inequalities) normals.push_back(ineq.normal);
  if (rank(normals) < d) return false;
  bool bounded = true;
  for_each_combination(normals.size(), d - 1, [&](std::span<const std::size_t> idx) {
    RationalMatrix sub;
    for (auto i : idx) sub.push_back(normals[i]);
    const RationalMatrix ray = nullspace(sub, d);
    if (ray.size() != 1) return true;
    bool all_nonneg = true;
    bool all_nonpos = true;
    for (const auto& n : normals) {
      const Rational s = dot(n, ray[0]);
      if (s < 0) all_nonneg = false;
      if (s > 0) all_nonpos = false;
    }
    if (all_nonneg || all_nonpos) {
      bounded = false;
      return false;
    }
    return true;
  });
  return bounded;
}

bool contains_origin_in_interior(const VPolytope& p) {
  if (p.vertices.empty()) return false;
  HPolytope cone;
  cone.dim = p.dim;
  for (const auto& v : p.vertices) cone.inequalities.push_back({v, Rational(-1)});
  return is_bounded(cone);
}

HPolytope polar_dual(const VPolytope& p) {
  require_dim(p, p.dim, "polar_dual");
  if (!contains_origin_in_interior(p)) throw ContractError("body must contain origin");
  HPolytope h;
  h.dim = p.dim;
  for (const auto& v : p.vertices) h.inequalities.push_back({v, Rational(-1)});
  return h;
}

VPolytope dual_vertices(const HPolytope& h) {
  const std::size_t d = h.dim;
  if (!is_bounded(h)) throw ContractError("H-polytope is unbounded");
  VPolytope out;
  out.dim = d;
  const auto& ineqs = h.inequalities;
  for_each_combination(ineqs.size(), d, [&](std::span<const std::size_t> idx) {
    RationalMatrix a;
    RationalPoint b;
    for (auto i : idx) {
      a.push_back(ineqs[i].normal);
      b.push_back(ineqs[i].offset);
    }
    auto x = solve_square(std::move(a), std::move(b));
    if (!x) return true;
    for (const auto& ineq : ineqs) {
      if (dot(ineq.normal, *x) < ineq.offset) return true;
    }
    out.vertices.push_back(std::move(*x));
    return true;
  });
  sort_unique(out.vertices);
  if (out.vertices.empty()) throw ContractError("H-polytope is empty");
  return out;
}

VPolytope reduce_vertices(const VPolytope& p) {
  require_dim(p, p.dim, "reduce_vertices");
  VPolytope out;
  out.dim = p.dim;
  out.vertices = p.vertices;
  sort_unique(out.vertices);
  if (out.vertices.size() <= 2) return out;
  if (p.dim == 1) {
    out.vertices = {out.vertices.front(), out.vertices.back()};
    return out;
  }
  if (p.dim == 2) {
    out.vertices = planar_hull(out.vertices);
    sort_unique(out.vertices);
    return out;
  }
  std::vector<RationalPoint> pts = out.vertices;
  for (std::size_t i = 0; i < pts.size();) {
    if (in_hull_of_others(pts, i)) {
      pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  out.vertices = std::move(pts);
  return out;
}

Gauge::Gauge(const VPolytope& p) : dim_(p.dim) {
  normals_ = dual_vertices(polar_dual(p)).vertices;
}

Rational Gauge::operator()(std::span<const Rational> x) const {
  if (x.size() != dim_) throw ContractError("dimension mismatch in gauge");
  Rational best(0);
  for (const auto& y : normals_) {
    const Rational v = -dot(y, x);
    if (v > best) best = v;
  }
  return best;
}

Rational Gauge::operator()(const LatticeVector& x) const {
  return (*this)(to_rational(x));
}

Rational gauge(const VPolytope& p, std::span<const Rational> x) {
  return Gauge(p)(x);
}

Rational gauge_lp(const VPolytope& p, std::span<const Rational> x) {
  require_dim(p, x.size(), "gauge_lp");
  if (!contains_origin_in_interior(p)) throw ContractError("body must contain origin");
  LinearProgram lp;
  const std::size_t m = p.vertices.size();
  lp.cost.assign(m, Rational(1));
  for (std::size_t r = 0; r < p.dim; ++r) {
    RationalPoint row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = p.vertices[i][r];
    lp.constraints.push_back(std::move(row));
    lp.rhs.push_back(x[r]);
  }
  const LpSolution sol = solve(lp);
  if (sol.status != LpStatus::optimal) throw InternalError("gauge LP did not reach an optimum");
  return sol.value;
}

bool contains(const VPolytope& p, std::span<const Rational> x) {
  require_dim(p, x.size(), "contains");
  if (p.vertices.empty()) return false;
  LinearProgram lp;
  const std::size_t m = p.vertices.size();
  lp.cost.assign(m, Rational(0));
  for (std::size_t r = 0; r < p.dim; ++r) {
    RationalPoint row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = p.vertices[i][r];
    lp.constraints.push_back(std::move(row));
    lp.rhs.push_back(x[r]);
  }
  lp.constraints.emplace_back(m, Rational(1));
  lp.rhs.emplace_back(1);
  return solve(lp).status == LpStatus::optimal;
}

VPolytope slice(const VPolytope& p, const DualFunctional& phi, const Rational& value) {
  require_dim(p, phi.dim(), "slice");
  if (p.dim < 2) throw ContractError("slice needs dimension >= 2");
  const LatticeSplit split = split_lattice(phi);

  std::vector<Rational> values;
  values.reserve(p.vertices.size());
  for (const auto& v : p.vertices) values.push_back(evaluate(phi, v));

  std::vector<RationalPoint> points;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    if (values[i] == value) points.push_back(p.vertices[i]);
    if (values[i] >= value) continue;
    for (std::size_t j = 0; j < p.vertices.size(); ++j) {
      if (values[j] <= value) continue;
      const Rational s = (value - values[i]) / (values[j] - values[i]);
      RationalPoint x(p.dim);
      for (std::size_t k = 0; k < p.dim; ++k) {
        x[k] = p.vertices[i][k] + s * (p.vertices[j][k] - p.vertices[i][k]);
      }
      points.push_back(std::move(x));
    }
  }
  if (points.empty()) throw ContractError("empty slice");

  VPolytope out;
  out.dim = p.dim - 1;
  const auto& preimage = split.lattice_basis[0];
  for (auto& x : points) {
    if (value != 0) {
      for (std::size_t k = 0; k < p.dim; ++k) x[k] -= value * Rational(preimage[k]);
    }
    out.vertices.push_back(split.kernel_coordinates(x));
  }
  return reduce_vertices(out);
}

VPolytope difference_body(const VPolytope& p) {
  require_dim(p, p.dim, "difference_body");
  const VPolytope base = reduce_vertices(p);
  VPolytope out;
  out.dim = p.dim;
  for (const auto& a : base.vertices) {
    for (const auto& b : base.vertices) {
      RationalPoint d(p.dim);
      for (std::size_t k = 0; k < p.dim; ++k) d[k] = a[k] - b[k];
      out.vertices.push_back(std::move(d));
    }
  }
  return reduce_vertices(out);
}

std::optional<std::pair<Integer, Integer>> coordinate_range(const VPolytope& p,
                                                            std::span<const Integer> prefix) {
  const std::size_t k = prefix.size();
  if (k >= p.dim) throw ContractError("coordinate_range prefix too long");
  if (p.vertices.empty()) return std::nullopt;
  // Barycentric weights on the generators: sum 1, prefix coordinates fixed.
  const std::size_t n = p.vertices.size();
  LinearProgram lp;
  for (std::size_t j = 0; j < k; ++j) {
    RationalPoint row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = p.vertices[i][j];
    lp.constraints.push_back(std::move(row));
    lp.rhs.emplace_back(prefix[j]);
  }
  lp.constraints.emplace_back(n, Rational(1));
  lp.rhs.emplace_back(1);
  lp.cost.resize(n);
  for (std::size_t i = 0; i < n; ++i) lp.cost[i] = p.vertices[i][k];
  const LpSolution low = solve(lp);
  if (low.status != LpStatus::optimal) return std::nullopt;
  for (auto& c : lp.cost) c = -c;
  const LpSolution high = solve(lp);
  const Integer lo = ceil(low.value);
  const Integer hi = floor(-high.value);
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

std::vector<LatticeVector> lattice_points(const VPolytope& p) {
  require_dim(p, p.dim, "lattice_points");
  std::vector<LatticeVector> out;
  if (p.vertices.empty()) return out;
  std::vector<Integer> prefix;
  // Each range is exact for its slice, so every completed prefix lies in P.
  const auto descend = [&](auto&& self) -> void {
    if (prefix.size() == p.dim) {
      out.emplace_back(prefix);
      return;
    }
    const auto range = coordinate_range(p, prefix);
    if (!range) return;
    for (Integer x = range->first; x <= range->second; ++x) {
      prefix.push_back(x);
      self(self);
      prefix.pop_back();
    }
  };
  descend(descend);
  return out;
}

namespace {

// Facets of conv(points[s] : s in subset), whose affine hull has dimension k,
// as sorted index lists. The affine hull is projected isomorphically onto k
// coordinates before the hyperplane search.
std::vector<std::vector<std::size_t>> facets_of(const std::vector<RationalPoint>& points,
                                                const std::vector<std::size_t>& subset,
                                                std::size_t k) {
  const std::size_t d = points[subset[0]].size();
  RationalMatrix diffs;
  for (std::size_t i = 1; i < subset.size(); ++i) {
    RationalPoint diff(d);
    for (std::size_t j = 0; j < d; ++j) diff[j] = points[subset[i]][j] - points[subset[0]][j];
    diffs.push_back(std::move(diff));
  }
  // Pivot columns of the row space give an injective coordinate projection.
  std::vector<std::size_t> coords;
  {
    RationalMatrix m = diffs;
    std::size_t r = 0;
    for (std::size_t c = 0; c < d && r < m.size(); ++c) {
      std::size_t piv = r;
      while (piv < m.size() && m[piv][c] == 0) ++piv;
      if (piv == m.size()) continue;
      std::swap(m[piv], m[r]);
      for (std::size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        const Rational f = m[i][c] / m[r][c];
        for (std::size_t j = c; j < d; ++j) m[i][j] -= f * m[r][j];
      }
      coords.push_back(c);
      ++r;
    }
  }
  if (coords.size() != k) throw InternalError("affine dimension mismatch in triangulation");

  std::vector<RationalPoint> q;
  for (auto s : subset) {
    RationalPoint proj;
    for (auto c : coords) proj.push_back(points[s][c]);
    q.push_back(std::move(proj));
  }

  std::set<std::vector<std::size_t>> facets;
  if (k == 1) {
    Rational mn = q[0][0];
    Rational mx = q[0][0];
    for (const auto& v : q) {
      if (v[0] < mn) mn = v[0];
      if (v[0] > mx) mx = v[0];
    }
    std::vector<std::size_t> low;
    std::vector<std::size_t> high;
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i][0] == mn) low.push_back(subset[i]);
      if (q[i][0] == mx) high.push_back(subset[i]);
    }
    facets.insert(low);
    facets.insert(high);
  } else {
    for_each_combination(q.size(), k, [&](std::span<const std::size_t> idx) {
      RationalMatrix rows;
      for (std::size_t i = 1; i < idx.size(); ++i) {
        RationalPoint row(k);
        for (std::size_t j = 0; j < k; ++j) row[j] = q[idx[i]][j] - q[idx[0]][j];
        rows.push_back(std::move(row));
      }
      const RationalMatrix normal = nullspace(rows, k);
      if (normal.size() != 1) return true;
      const Rational level = dot(normal[0], q[idx[0]]);
      bool above = false;
      bool below = false;
      std::vector<std::size_t> on;
      for (std::size_t i = 0; i < q.size(); ++i) {
        const Rational s = dot(normal[0], q[i]) - level;
        if (s > 0) above = true;
        if (s < 0) below = true;
        if (s == 0) on.push_back(subset[i]);
      }
      if (!(above && below)) facets.insert(std::move(on));
      return true;
    });
  }
  return {facets.begin(), facets.end()};
}

std::vector<std::vector<std::size_t>> triangulate_subset(const std::vector<RationalPoint>& points,
                                                         const std::vector<std::size_t>& subset,
                                                         std::size_t k) {
  if (k == 0) return {{subset[0]}};
  std::size_t apex = subset[0];
  for (auto s : subset)
    if (points[s] < points[apex]) apex = s;
  std::vector<std::vector<std::size_t>> out;
  for (const auto& facet : facets_of(points, subset, k)) {
    if (std::find(facet.begin(), facet.end(), apex) != facet.end()) continue;
    for (auto simplex : triangulate_subset(points, facet, k - 1)) {
      simplex.push_back(apex);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::size_t>> triangulate(const std::vector<RationalPoint>& points) {
  if (points.empty()) return {};
  std::vector<std::size_t> all(points.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return triangulate_subset(points, all, affine_rank(points));
}

Rational volume(const VPolytope& p) {
  require_dim(p, p.dim, "volume");
  std::vector<RationalPoint> pts = p.vertices;
  sort_unique(pts);
  const std::size_t d = p.dim;
  if (pts.empty() || affine_rank(pts) < d) return Rational(0);
  if (d == 0) return Rational(1);
  Rational total(0);
  for (const auto& simplex : triangulate(pts)) {
    RationalMatrix m;
    const auto& base = pts[simplex.back()];
    for (std::size_t i = 0; i + 1 < simplex.size(); ++i) {
      RationalPoint row(d);
      for (std::size_t j = 0; j < d; ++j) row[j] = pts[simplex[i]][j] - base[j];
      m.push_back(std::move(row));
    }
    total += abs(determinant(std::move(m)));
  }
  Integer factorial(1);
  for (std::size_t i = 2; i <= d; ++i) factorial *= static_cast<unsigned long>(i);
  return total / Rational(factorial);
}

}  // namespace toric
