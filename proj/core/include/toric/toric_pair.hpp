#pragma once

// A toric pair (X, B) stored as primitive rays e_i with coefficients
// a_i in (0, 1], B = sum (1 - a_i) V(e_i). Every quantity is computed from
// the polar body U = Conv(e_i / a_i); the toric reading of gauge values as
// log discrepancies assumes -K-B is R-free.

#include <cstddef>
#include <string>
#include <vector>

#include "toric/convex_body.hpp"
#include "toric/numeric_lattice.hpp"

namespace toric {

struct ToricPair {
  std::size_t dim = 0;
  std::vector<LatticeVector> rays;
  std::vector<Rational> coeffs;
  std::string name;
};

/// The body U = Conv(e_i / a_i) in N_R.
struct PairBody {
  VPolytope hull;

  std::size_t dim() const { return hull.dim; }
};

/// Standing hypotheses: rays primitive and distinct, coefficients in (0,1],
/// origin interior to U. Returns the list of violations (empty when valid).
std::vector<std::string> validate(const ToricPair& pair);

/// Throws InputError listing every violation when the pair is invalid.
void require_valid(const ToricPair& pair);

PairBody body(const ToricPair& pair);

/// min gauge(U, e) over nonzero e in N ∩ U.
Rational mld(const ToricPair& pair);
Rational mld(const VPolytope& body);

/// gauge(U, e); throws ContractError for e = 0.
Rational log_discrepancy(const ToricPair& pair, const LatticeVector& e);

/// {m : <m, e_i> >= -a_i}.
HPolytope moment_polytope(const ToricPair& pair);

/// d! * vol(moment polytope).
Rational anticanonical_volume(const ToricPair& pair);

/// Image of the pair under e -> A e for a unimodular A.
ToricPair transform(const ToricPair& pair, const IntMatrix& unimodular);

}  // namespace toric
