#pragma once

// Exact rational convex bodies in V- and H-representation: support
// intervals, gauge functions, polar duality, slices, difference bodies,
// lattice points and volume.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "toric/numeric_lattice.hpp"

namespace toric {

/// Convex hull of `vertices`. The list may be redundant but must contain
/// every true vertex.
struct VPolytope {
  std::size_t dim = 0;
  std::vector<RationalPoint> vertices;
};

/// <normal, x> >= offset.
struct Halfspace {
  RationalPoint normal;
  Rational offset;
};

struct HPolytope {
  std::size_t dim = 0;
  std::vector<Halfspace> inequalities;
};

struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// phi(P) = [min phi(v), max phi(v)] over the generators.
Interval width_interval(const VPolytope& p, const DualFunctional& phi);

/// Points of P scaled by s.
VPolytope scale(const VPolytope& p, const Rational& s);

/// Dimension of the affine hull of the generators (-1 maps to 0 for empty).
std::size_t affine_rank(const std::vector<RationalPoint>& points);

/// True iff 0 lies in the interior of P (the generators positively span).
bool contains_origin_in_interior(const VPolytope& p);

/// {y : <y, v> >= -1 for all generators v}. Requires 0 interior to P.
HPolytope polar_dual(const VPolytope& p);

/// Vertex enumeration of a bounded H-polytope by solving every d-subset of
/// inequalities. Throws ContractError when the region is unbounded or empty.
VPolytope dual_vertices(const HPolytope& h);

/// True iff the region has no nonzero recession direction. Does not check
/// feasibility.
bool is_bounded(const HPolytope& h);

/// The irredundant vertex set of P, lexicographically sorted.
VPolytope reduce_vertices(const VPolytope& p);

/// Minkowski functional of a body containing 0 in its interior, evaluated
/// through the facet description P = {x : <y_k, x> >= -1}.
class Gauge {
 public:
  explicit Gauge(const VPolytope& p);

  Rational operator()(std::span<const Rational> x) const;
  Rational operator()(const LatticeVector& x) const;

  /// Vertices y_k of the polar body; each defines the facet <y_k, x> >= -1.
  const std::vector<RationalPoint>& facet_normals() const { return normals_; }
  std::size_t dim() const { return dim_; }

 private:
  std::size_t dim_;
  std::vector<RationalPoint> normals_;
};

/// gauge(P, x) = min{s >= 0 : x in sP}. Throws ContractError
/// "body must contain origin" when 0 is not interior.
Rational gauge(const VPolytope& p, std::span<const Rational> x);

/// The same quantity computed independently as the linear program
/// min sum(l_i) s.t. sum(l_i v_i) = x, l >= 0.
Rational gauge_lp(const VPolytope& p, std::span<const Rational> x);

/// Exact membership x ∈ conv(generators) by LP feasibility.
bool contains(const VPolytope& p, std::span<const Rational> x);

/// P ∩ {phi = value}, translated into phi^⊥ by subtracting value times the
/// phi-preimage of 1 from split_lattice(phi), then written in the kernel
/// coordinates of that split. The result has dimension d-1 and is reduced
/// to its vertices. Throws ContractError when the slice is empty.
VPolytope slice(const VPolytope& p, const DualFunctional& phi, const Rational& value);

/// conv{v_i - v_j} = P + (-P), reduced to its vertices.
VPolytope difference_body(const VPolytope& p);

/// Integer range of coordinate prefix.size() over the points of P whose
/// leading coordinates equal prefix; nullopt when it holds no integer.
std::optional<std::pair<Integer, Integer>> coordinate_range(const VPolytope& p,
                                                            std::span<const Integer> prefix);

/// All integer points of P, lexicographically ordered.
std::vector<LatticeVector> lattice_points(const VPolytope& p);

/// Exact Euclidean volume by fan triangulation from a vertex; zero for
/// lower-dimensional P.
Rational volume(const VPolytope& p);

/// The simplices (as index lists into `points`) of the fan triangulation
/// used by volume(). Exposed for testing.
std::vector<std::vector<std::size_t>> triangulate(const std::vector<RationalPoint>& points);

}  // namespace toric
