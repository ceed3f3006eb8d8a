#include "toric/complement.hpp"

#include <algorithm>

#include "toric/error.hpp"
#include "toric/lift.hpp"
#include "toric/width_search.hpp"

namespace toric {

namespace {

void require_epsilon(const Rational& eps) {
  if (eps <= 0 || eps > 1) throw ContractError("epsilon must lie in (0,1], got " + to_string(eps));
}

Rational lambda_recursion(std::size_t n, const Rational& eps) {
  if (n == 1) return 2 / eps;
  const Rational k(static_cast<unsigned long>(n * (n + 1)));
  return k / eps + lambda_recursion(n - 1, eps * eps / k);
}

Rational power(const Rational& base, unsigned long exponent) {
  Rational out(1);
  for (unsigned long i = 0; i < exponent; ++i) out *= base;
  return out;
}

std::string describe(const RecursionLevel& level) {
  return "level dim=" + std::to_string(level.dim) + " phi=" + to_string(level.phi) +
         " w=" + to_string(level.w) + " [-" + to_string(level.w_minus) + ", " +
         to_string(level.w_plus) + "] eps=" + to_string(level.epsilon);
}

std::string describe(const std::vector<RecursionLevel>& trace) {
  std::string out;
  for (const auto& level : trace) out += "\n  " + describe(level);
  return out;
}

std::vector<Construction> build_all(const VPolytope& u, const Rational& eps, ConstructionMode mode,
                                   bool expand_ties);

Construction build_base(const VPolytope& u, const Rational& eps, ConstructionMode mode) {
  const WidthResult wr = measure_width(u, DualFunctional{1});
  RecursionLevel level;
  level.dim = 1;
  level.phi = wr.functional;
  level.w = wr.width;
  level.w_minus = wr.w_minus;
  level.w_plus = wr.w_plus;
  if (!(wr.w_minus > 0 && wr.w_plus > 0)) {
    throw ContractError("body must contain origin");
  }
  level.t = 1 / level.w;
  level.gamma = std::min(level.w_minus, level.w_plus) / level.w;
  level.epsilon = eps;
  level.fiber_witness = 0;
  level.witness = level.w;
  if (mode == ConstructionMode::scaled) {
    const auto report = check_endpoint_bound(u, wr);
    if (!report.ok) throw InternalError("endpoint bound failed: " + report.message + describe({level}));
  }
  Construction c;
  c.basis = {wr.functional};
  c.witness = level.w;
  c.mode = mode;
  c.epsilon = eps;
  c.trace = {std::move(level)};
  return c;
}

// Every shift of the lift attaining the minimal length, the chosen one first.
using TiedLift = std::pair<DualFunctional, Integer>;

std::vector<TiedLift> tied_lifts(const LiftProblem& problem, const LiftResult& lifted) {
  std::vector<TiedLift> out{{lifted.functional, lifted.shift}};
  const auto length_at = [&](const Integer& z) {
    return shifted_length(lifted.initial, problem.phi, problem.body, z);
  };
  for (Integer z = lifted.shift - 1; length_at(z) == lifted.length; --z) {
    out.emplace_back(lifted.initial + z * problem.phi, z);
  }
  for (Integer z = lifted.shift + 1; length_at(z) == lifted.length; ++z) {
    out.emplace_back(lifted.initial + z * problem.phi, z);
  }
  return out;
}

std::vector<Construction> build_along(const VPolytope& u, const Rational& eps, ConstructionMode mode,
                                      const WidthResult& wr, bool expand_ties) {
  const std::size_t d = u.dim;
  const bool scaled = mode == ConstructionMode::scaled;

  RecursionLevel head;
  head.dim = d;
  head.phi = wr.functional;
  head.w = wr.width;
  head.w_minus = wr.w_minus;
  head.w_plus = wr.w_plus;
  head.t = 1 / wr.width;
  head.gamma = std::min(wr.w_minus, wr.w_plus) / wr.width;
  head.epsilon = eps;

  if (scaled) {
    const auto report = check_endpoint_bound(u, wr);
    if (!report.ok) throw InternalError("endpoint bound failed: " + report.message + describe({head}));
    if (head.gamma < head.t) {
      throw InternalError("gamma below 1/w" + describe({head}));
    }
  }

  head.slice_body = slice(u, wr.functional, Rational(0));
  const VPolytope fiber = scaled ? scale(head.slice_body, head.w) : head.slice_body;
  const Rational fiber_eps = scaled ? Rational(eps / head.w) : eps;

  std::vector<Construction> out;
  for (const Construction& sub : build_all(fiber, fiber_eps, mode, true)) {
    RecursionLevel level = head;
    level.fiber_witness = sub.witness;
    level.witness = level.w;
    std::vector<std::vector<TiedLift>> choices;
    for (const auto& psi : sub.basis) {
      const LiftProblem problem = make_lift_problem(u, wr.functional, Rational(0), psi);
      const LiftResult lifted = lift_functional(problem);
      level.lifts.push_back({psi, lifted.functional, lifted.length, lifted.bound, lifted.shift});
      if (lifted.length > level.witness) level.witness = lifted.length;
      choices.push_back(expand_ties ? tied_lifts(problem, lifted)
                                    : std::vector<TiedLift>{{lifted.functional, lifted.shift}});
    }
    level.recursion_bound_holds = level.witness < level.w + level.fiber_witness;

    std::vector<RecursionLevel> trace{level};
    trace.insert(trace.end(), sub.trace.begin(), sub.trace.end());
    if (scaled) {
      if (!level.recursion_bound_holds) {
        throw InternalError("witness " + to_string(level.witness) + " not below w + fiber witness" +
                            describe(trace));
      }
      const Rational budget = lambda_budget(d, eps);
      if (level.witness > budget) {
        throw InternalError("witness " + to_string(level.witness) + " exceeds budget " +
                            to_string(budget) + describe(trace));
      }
    }

    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
      Construction c;
      c.mode = mode;
      c.epsilon = eps;
      c.witness = level.witness;
      c.basis.push_back(wr.functional);
      c.trace = trace;
      for (std::size_t j = 0; j < choices.size(); ++j) {
        const auto& [functional, shift] = choices[j][pick[j]];
        c.basis.push_back(functional);
        c.trace[0].lifts[j].functional = functional;
        c.trace[0].lifts[j].shift = shift;
      }
      const Integer det = determinant(IntMatrix::from_rows(c.basis, d));
      if (det != 1 && det != -1) throw InternalError("constructed basis is not unimodular" + describe(trace));
      out.push_back(std::move(c));
      std::size_t j = 0;
      while (j < pick.size() && ++pick[j] == choices[j].size()) pick[j++] = 0;
      if (j == pick.size()) break;
    }
  }
  return out;
}

std::vector<Construction> build_all(const VPolytope& u, const Rational& eps, ConstructionMode mode,
                                   bool expand_ties) {
  if (u.dim == 1) return {build_base(u, eps, mode)};
  const Rational radius = Rational(static_cast<unsigned long>(u.dim * (u.dim + 1))) / eps;
  std::vector<Construction> out;
  for (const auto& candidate : minimal_width_functionals(u, radius)) {
    for (auto& c : build_along(u, eps, mode, candidate, expand_ties)) out.push_back(std::move(c));
  }
  return out;
}

// The first construction of least witness over all tie paths.
Construction build(const VPolytope& u, const Rational& eps, ConstructionMode mode) {
  std::vector<Construction> all = build_all(u, eps, mode, false);
  std::size_t best = 0;
  for (std::size_t k = 1; k < all.size(); ++k) {
    if (all[k].witness < all[best].witness) best = k;
  }
  return std::move(all[best]);
}

}  // namespace

Rational lambda_budget(std::size_t d, const Rational& eps) {
  if (d < 1) throw ContractError("dimension must be at least 1");
  require_epsilon(eps);
  return lambda_recursion(d, eps);
}

Rational lambda_sum_bound(std::size_t d, const Rational& eps) {
  if (d < 1) throw ContractError("dimension must be at least 1");
  require_epsilon(eps);
  const Rational base = Rational(static_cast<unsigned long>(d * (d + 1))) / eps;
  Rational sum(0);
  Rational term = base;
  for (std::size_t i = 0; i < d; ++i) {
    sum += term;
    term *= term;
  }
  return sum;
}

ClosedFormReport closed_form_check(std::size_t d, const Rational& eps) {
  require_epsilon(eps);
  const Rational inv = 1 / eps;
  ClosedFormReport r;
  r.recursion = lambda_budget(d, eps);
  if (d == 2) {
    r.closed_form = 6 * inv + 12 * power(inv, 2);
  } else if (d == 3) {
    r.closed_form = 12 * inv + 72 * power(inv, 2) + 1728 * power(inv, 4);
  } else {
    throw ContractError("closed forms are known for d = 2 and d = 3 only");
  }
  r.ok = r.recursion == r.closed_form;
  return r;
}

std::string to_string(ConstructionMode mode) {
  return mode == ConstructionMode::scaled ? "scaled" : "sharp";
}

ConstructionMode parse_mode(const std::string& text) {
  if (text == "scaled") return ConstructionMode::scaled;
  if (text == "sharp" || text == "sharpened") return ConstructionMode::sharpened;
  throw InputError("unknown mode \"" + text + "\" (expected scaled or sharp)");
}

Construction construct_basis(const VPolytope& u, const Rational& eps, ConstructionMode mode) {
  require_epsilon(eps);
  if (u.dim < 1) throw ContractError("dimension must be at least 1");
  if (!contains_origin_in_interior(u)) throw ContractError("body must contain origin");
  return build(u, eps, mode);
}

ComplementCertificate assemble_certificate(const ToricPair& pair, const Construction& c,
                                           std::optional<Integer> n) {
  require_valid(pair);
  const std::size_t d = pair.dim;
  if (c.basis.size() != d) throw ContractError("basis has wrong size");

  ComplementCertificate cert;
  cert.pair = pair;
  cert.mode = c.mode;
  cert.epsilon = c.epsilon;
  cert.budget = lambda_budget(d, c.epsilon);
  cert.basis = c.basis;
  cert.witness = c.witness;
  cert.trace = c.trace;
  const Integer minimal = ceil(c.witness);
  cert.n = n ? *n : minimal;
  if (cert.n < minimal) {
    throw ContractError("index " + to_string(cert.n) + " is below ceil(witness) = " +
                        to_string(minimal));
  }

  for (std::size_t j = 0; j < pair.rays.size(); ++j) {
    const Rational limit = Rational(cert.n) * pair.coeffs[j];
    Integer largest(0);
    for (std::size_t i = 0; i < d; ++i) {
      Integer v = pairing(cert.basis[i], pair.rays[j]);
      if (v < 0) v = -v;
      if (Rational(v) > limit) {
        throw InternalError("±" + to_string(cert.basis[i]) + " is not in n·□ at ray " +
                            to_string(pair.rays[j]));
      }
      if (v > largest) largest = v;
    }
    cert.divisor_coeffs.push_back(limit - Rational(largest));
  }
  return cert;
}

ComplementCertificate construct_complement(const ToricPair& pair, std::optional<Rational> eps,
                                           ConstructionMode mode, std::optional<Integer> n) {
  require_valid(pair);
  const Rational m = mld(pair);
  const Rational e = eps ? *eps : m;
  require_epsilon(e);
  if (e > m) {
    throw ContractError("epsilon " + to_string(e) + " exceeds mld " + to_string(m));
  }
  return assemble_certificate(pair, construct_basis(body(pair).hull, e, mode), n);
}

bool VerificationReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.passed; });
}

const CheckItem* VerificationReport::find(const std::string& name) const {
  for (const auto& item : items)
    if (item.name == name) return &item;
  return nullptr;
}

VerificationReport verify_certificate(const ToricPair& pair, const ComplementCertificate& c) {
  VerificationReport report;
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.items.push_back({std::move(name), ok, std::move(detail)});
  };

  const auto violations = validate(pair);
  if (!violations.empty()) {
    add("pair", false, violations.front());
    return report;
  }
  const bool same_pair = c.pair.dim == pair.dim && c.pair.rays == pair.rays &&
                         c.pair.coeffs == pair.coeffs;
  add("pair", same_pair, same_pair ? "certificate matches pair" : "certificate was issued for a different pair");

  const std::size_t d = pair.dim;
  bool shape_ok = c.basis.size() == d && c.divisor_coeffs.size() == pair.rays.size();
  for (const auto& phi : c.basis) shape_ok = shape_ok && phi.dim() == d;
  add("dimension", shape_ok,
      shape_ok ? std::to_string(d) + " functionals" : "basis or coefficient list has the wrong shape");
  if (!shape_ok) return report;

  const Integer det = determinant(IntMatrix::from_rows(c.basis, d));
  const bool unimodular = det == 1 || det == -1;
  add("unimodular", unimodular, "det = " + to_string(det));

  const VPolytope u = body(pair).hull;
  Rational widest(0);
  for (const auto& phi : c.basis) {
    const Rational w = width_interval(u, phi).length();
    if (w > widest) widest = w;
  }
  add("witness", widest == c.witness,
      "max width " + to_string(widest) + ", recorded " + to_string(c.witness));

  add("index", c.n >= 1, "n = " + to_string(c.n));

  bool member = true;
  std::string member_detail = "all ±phi_i in " + to_string(c.n) + "·□";
  bool coeffs_ok = true;
  std::string coeff_detail = "m_j = n a_j + min_S <m, e_j> >= 0";
  for (std::size_t j = 0; j < pair.rays.size(); ++j) {
    const Rational limit = Rational(c.n) * pair.coeffs[j];
    Integer smallest(0);
    bool first = true;
    for (std::size_t i = 0; i < d; ++i) {
      const Integer v = pairing(c.basis[i], pair.rays[j]);
      for (const Integer& s : {Integer(v), Integer(-v)}) {
        if (Rational(s) < -limit && member) {
          member = false;
          member_detail = "phi_" + std::to_string(i) + " = " + to_string(c.basis[i]) +
                          " violates ray " + to_string(pair.rays[j]);
        }
        if (first || s < smallest) smallest = s;
        first = false;
      }
    }
    const Rational expected = limit + Rational(smallest);
    if (coeffs_ok && (c.divisor_coeffs[j] != expected || c.divisor_coeffs[j] < 0)) {
      coeffs_ok = false;
      coeff_detail = "coefficient " + std::to_string(j) + " is " + to_string(c.divisor_coeffs[j]) +
                     ", expected " + to_string(expected);
    }
  }
  add("membership", member, member_detail);
  add("coefficients", coeffs_ok, coeff_detail);

  // n·a_E(X, B + D/n) = max_i |<phi_i, e>|, which is >= 1 for every nonzero
  // integer e when the basis is unimodular. Spot-check the bounding box of 2U.
  bool klt = unimodular;
  std::string klt_detail = unimodular ? "mld(X, B + D/n) >= 1/" + to_string(c.n)
                                      : "basis is not unimodular";
  if (klt) {
    std::vector<Integer> lo(d);
    std::vector<Integer> hi(d);
    for (std::size_t k = 0; k < d; ++k) {
      Rational mn(0);
      Rational mx(0);
      for (const auto& v : u.vertices) {
        if (2 * v[k] < mn) mn = 2 * v[k];
        if (2 * v[k] > mx) mx = 2 * v[k];
      }
      lo[k] = ceil(mn);
      hi[k] = floor(mx);
    }
    std::vector<Integer> x = lo;
    while (klt) {
      const LatticeVector e(x);
      if (!e.is_zero()) {
        Integer largest(0);
        for (const auto& phi : c.basis) {
          Integer v = pairing(phi, e);
          if (v < 0) v = -v;
          if (v > largest) largest = v;
        }
        if (largest < 1) {
          klt = false;
          klt_detail = "lattice point " + to_string(e) + " has discrepancy 0";
        }
      }
      std::size_t k = d;
      bool advanced = false;
      while (k > 0) {
        --k;
        if (x[k] < hi[k]) {
          ++x[k];
          for (std::size_t j = k + 1; j < d; ++j) x[j] = lo[j];
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
  }
  add("klt", klt, klt_detail);

  const Rational vol = anticanonical_volume(pair);
  bool volume_ok = c.witness > 0;
  if (volume_ok) volume_ok = vol * power(c.witness, d) >= 1;
  add("volume", volume_ok,
      "vol(-K-B) = " + to_string(vol) + " vs witness^-" + std::to_string(d) + " = " +
          (c.witness > 0 ? to_string(Rational(1 / power(c.witness, d))) : std::string("undefined")));

  if (c.epsilon > 0) {
    const Rational m = mld(pair);
    bool budget_ok = c.epsilon <= m && c.epsilon <= 1;
    std::string detail;
    if (!budget_ok) {
      detail = "epsilon " + to_string(c.epsilon) + " exceeds mld " + to_string(m);
    } else {
      const Rational budget = lambda_budget(d, c.epsilon);
      budget_ok = budget == c.budget && c.witness <= budget;
      detail = "witness " + to_string(c.witness) + " <= lambda(" + std::to_string(d) + ", " +
               to_string(c.epsilon) + ") = " + to_string(budget);
      if (budget != c.budget) detail = "recorded budget " + to_string(c.budget) + " != " + to_string(budget);
    }
    add("budget", budget_ok, detail);
  }
  return report;
}

}  // namespace toric
