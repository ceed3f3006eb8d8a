#pragma once

// Extending a surjective functional from the slice lattice N ∩ phi^⊥ to N
// while controlling its width on a convex body C:
//   length phi'(C) < w(phi) + w0 / gamma,
// where w0 is the width on the slice C ∩ {phi = p} and gamma the smaller
// barycentric coordinate of p in phi(C).

#include <utility>
#include <vector>

#include "toric/convex_body.hpp"
#include "toric/numeric_lattice.hpp"

namespace toric {

struct LiftProblem {
  DualFunctional phi;
  VPolytope body;
  Rational point;
  DualFunctional slice_functional;  // coordinates in the kernel basis of phi

  // Derived by make_lift_problem.
  Interval range;        // phi(C) = [p1, p2]
  Rational gamma;        // min(p - p1, p2 - p) / (p2 - p1)
  VPolytope slice_body;  // slice(C, phi, p)
  Rational slice_width;  // w0
};

/// Validates the inputs and computes the derived fields. Throws
/// ContractError when phi or the slice functional is not primitive, when p
/// is not strictly inside phi(C), or when the slice width w0 is zero.
LiftProblem make_lift_problem(VPolytope body, DualFunctional phi, Rational point,
                              DualFunctional slice_functional);

struct LiftResult {
  DualFunctional functional;  // phi'
  DualFunctional initial;     // lift vanishing on the phi-preimage of 1
  Integer shift;              // phi' = initial + shift * phi
  Rational length;            // length phi'(C)
  Rational bound;             // w(phi) + w0 / gamma
};

/// Lifts the slice functional and picks the shift minimizing the width.
/// Restriction and the strict bound are checked on every call; a failure
/// throws InternalError.
LiftResult lift_functional(const LiftProblem& problem);

/// Length of (initial + z*phi)(C).
Rational shifted_length(const DualFunctional& initial, const DualFunctional& phi,
                        const VPolytope& body, const Integer& z);

struct ShiftScan {
  Integer best;
  /// Every (z, length) pair evaluated, sorted by z.
  std::vector<std::pair<Integer, Rational>> samples;
};

/// Integer minimizer of the convex piecewise-linear z -> length. The scan
/// starts at the real minimizer and walks outward until the length
/// increases strictly on both sides; unimodality of the sampled values is
/// asserted. Ties prefer the smaller |z|, then the smaller z.
ShiftScan scan_shift(const DualFunctional& initial, const DualFunctional& phi,
                     const VPolytope& body);

Integer best_shift(const DualFunctional& initial, const DualFunctional& phi,
                   const VPolytope& body);

/// The shift of the constructive existence argument: with s the right
/// derivative at x1 = p of the upper boundary of (phi, initial)(C), take
/// z = ceil(-s), which moves that slope into [0, 1).
Integer explicit_shift(const DualFunctional& initial, const DualFunctional& phi,
                       const VPolytope& body, const Rational& point);

}  // namespace toric
