#pragma once

// Recursive construction of a unimodular basis of M whose widths on U are
// bounded by lambda(d, eps), and the klt complement it certifies.
//
// At each level a minimal-width primitive functional phi (width w) is
// chosen, the body is sliced through the origin along phi, the fiber body
// w·U0 is handled recursively with mld bound eps/w, and the fiber basis is
// lifted back to N with controlled widths.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toric/convex_body.hpp"
#include "toric/numeric_lattice.hpp"
#include "toric/toric_pair.hpp"

namespace toric {

/// lambda(1, eps) = 2/eps; lambda(n, eps) = n(n+1)/eps + lambda(n-1, eps^2/(n(n+1))).
/// Requires d >= 1 and eps in (0, 1].
Rational lambda_budget(std::size_t d, const Rational& eps);

/// sum_{i<d} (d(d+1)/eps)^(2^i), an upper bound for lambda_budget.
Rational lambda_sum_bound(std::size_t d, const Rational& eps);

struct ClosedFormReport {
  Rational recursion;
  Rational closed_form;
  bool ok = false;
};

/// Compares the recursion with 6/eps + 12/eps^2 (d = 2) or
/// 12/eps + 72/eps^2 + 1728/eps^4 (d = 3).
ClosedFormReport closed_form_check(std::size_t d, const Rational& eps);

enum class ConstructionMode {
  scaled,     // fiber body w·U0 with eps/w; endpoint checks at every level
  sharpened,  // fiber body U0 with eps unchanged
};

std::string to_string(ConstructionMode mode);
ConstructionMode parse_mode(const std::string& text);

struct LiftRecord {
  DualFunctional fiber_functional;  // kernel coordinates of this level
  DualFunctional functional;        // lifted, this level's coordinates
  Rational width;                   // on this level's body
  Rational bound;                   // w + w0 / gamma
  Integer shift;
};

/// One level of the recursion, in that level's lattice coordinates.
struct RecursionLevel {
  std::size_t dim = 0;
  DualFunctional phi;
  Rational w;
  Rational w_minus;
  Rational w_plus;
  Rational t;      // 1/w
  Rational gamma;  // min(w_minus, w_plus) / w
  Rational epsilon;
  VPolytope slice_body;          // U0 in kernel coordinates (empty at d = 1)
  Rational fiber_witness;        // witness returned for the fiber body
  std::vector<LiftRecord> lifts;
  Rational witness;              // max width of this level's basis
  bool recursion_bound_holds = true;  // witness < w + fiber_witness
};

struct Construction {
  std::vector<DualFunctional> basis;
  Rational witness;
  ConstructionMode mode = ConstructionMode::scaled;
  Rational epsilon;
  std::vector<RecursionLevel> trace;  // top level first
};

/// Builds a unimodular basis of M for the body U, assuming every nonzero
/// lattice point has gauge >= eps. Among minimal-width functionals every
/// candidate is tried and the smallest final witness kept (first in
/// lexicographic order on ties), which makes the witness independent of
/// the lattice coordinates. Throws SearchError when the width search fails
/// and InternalError, with the trace, when a guaranteed inequality fails.
Construction construct_basis(const VPolytope& u, const Rational& eps,
                             ConstructionMode mode = ConstructionMode::scaled);

struct ComplementCertificate {
  ToricPair pair;
  ConstructionMode mode = ConstructionMode::scaled;
  Rational epsilon;
  Rational budget;  // lambda(d, epsilon)
  std::vector<DualFunctional> basis;
  Rational witness;
  Integer n;
  std::vector<Rational> divisor_coeffs;  // m_j = n a_j + min_{S} <m, e_j>
  std::vector<RecursionLevel> trace;
};

/// Complement of index n (default ceil(witness)) from a constructed basis.
/// Throws ContractError if n < ceil(witness) and InternalError if some
/// ±phi_i misses n·□.
ComplementCertificate assemble_certificate(const ToricPair& pair, const Construction& c,
                                           std::optional<Integer> n = std::nullopt);

/// construct_basis on body(pair) followed by assemble_certificate.
/// eps defaults to mld(pair) and must satisfy 0 < eps <= mld(pair).
ComplementCertificate construct_complement(const ToricPair& pair,
                                           std::optional<Rational> eps = std::nullopt,
                                           ConstructionMode mode = ConstructionMode::scaled,
                                           std::optional<Integer> n = std::nullopt);

struct CheckItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckItem> items;

  bool passed() const;
  const CheckItem* find(const std::string& name) const;
};

/// Recomputes every claim of the certificate from the pair and the
/// certificate data alone.
VerificationReport verify_certificate(const ToricPair& pair, const ComplementCertificate& c);

}  // namespace toric
