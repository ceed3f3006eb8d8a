#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "toric/error.hpp"
#include "toric/toric_pair.hpp"

using namespace toric;
using oracle::q;

namespace {

ToricPair make_pair(std::size_t dim, std::vector<LatticeVector> rays, std::vector<const char*> coeffs) {
  ToricPair p;
  p.dim = dim;
  p.rays = std::move(rays);
  for (const char* c : coeffs) p.coeffs.push_back(q(c));
  return p;
}

const ToricPair kP2 = make_pair(2, {{1, 0}, {0, 1}, {-1, -1}}, {"1", "1", "1"});
const ToricPair kP1Half = make_pair(1, {{1}, {-1}}, {"1/2", "1/2"});
const ToricPair kP1 = make_pair(1, {{1}, {-1}}, {"1", "1"});
const ToricPair kWeighted = make_pair(2, {{1, 0}, {0, 1}, {-1, -2}}, {"1", "1", "1"});

bool has_violation(const ToricPair& p, const std::string& prefix) {
  for (const auto& v : validate(p))
    if (v.rfind(prefix, 0) == 0) return true;
  return false;
}

}  // namespace

TEST(Validate, Examples) {
  EXPECT_TRUE(validate(kP2).empty());
  EXPECT_TRUE(has_violation(make_pair(2, {{2, 0}, {0, 1}, {-1, -1}}, {"1", "1", "1"}),
                            "ray not primitive"));
  EXPECT_TRUE(has_violation(make_pair(2, {{1, 0}, {0, 1}}, {"1", "1"}), "origin not interior"));
  EXPECT_TRUE(has_violation(make_pair(1, {{1}, {-1}}, {"0", "1"}), "coefficient must be in (0,1]"));
  EXPECT_TRUE(has_violation(make_pair(1, {{1}, {-1}}, {"3/2", "1"}), "coefficient must be in (0,1]"));
  EXPECT_TRUE(has_violation(make_pair(1, {{1}, {1}, {-1}}, {"1", "1", "1"}), "duplicate ray"));
  EXPECT_TRUE(has_violation(make_pair(1, {{1}, {-1}}, {"1"}), "ray and coefficient counts differ"));
  EXPECT_THROW(require_valid(make_pair(2, {{1, 0}, {0, 1}}, {"1", "1"})), InputError);
}

TEST(Body, Examples) {
  EXPECT_EQ(body(kP2).hull.vertices, (std::vector<RationalPoint>{{1, 0}, {0, 1}, {-1, -1}}));
  EXPECT_EQ(body(kP1Half).hull.vertices, (std::vector<RationalPoint>{{2}, {-2}}));
  EXPECT_EQ(body(kWeighted).hull.vertices.size(), 3u);
}

TEST(Mld, Examples) {
  EXPECT_EQ(mld(kP2), 1);
  EXPECT_EQ(mld(kP1Half), q("1/2"));
  EXPECT_EQ(mld(kWeighted), 1);
  EXPECT_EQ(log_discrepancy(kWeighted, LatticeVector{0, -1}), 1);
}

TEST(Mld, MatchesBisectionOracle) {
  for (const auto& p : oracle::corpus(30, 100)) {
    const Rational m = mld(p);
    EXPECT_EQ(m, oracle::mld_bisection(body(p).hull)) << p.name;
    EXPECT_GT(m, 0);
    EXPECT_LE(m, 1);
  }
}

TEST(LogDiscrepancy, Examples) {
  EXPECT_EQ(log_discrepancy(kP2, LatticeVector{1, 0}), 1);
  EXPECT_EQ(log_discrepancy(kP1Half, LatticeVector{2}), 1);
  EXPECT_EQ(log_discrepancy(kP2, LatticeVector{1, 1}), 2);
  EXPECT_EQ(log_discrepancy(kP2, LatticeVector{2, -1}), 4);
  EXPECT_THROW(log_discrepancy(kP2, LatticeVector{0, 0}), ContractError);
}

TEST(LogDiscrepancy, RaysAndHomogeneity) {
  std::mt19937_64 rng(31);
  for (const auto& p : oracle::corpus(30, 200)) {
    for (std::size_t i = 0; i < p.rays.size(); ++i) {
      EXPECT_LE(log_discrepancy(p, p.rays[i]), p.coeffs[i]);
    }
    std::vector<Integer> c;
    for (std::size_t k = 0; k < p.dim; ++k) c.emplace_back(oracle::uniform(rng, -3, 3));
    const LatticeVector e(c);
    if (e.is_zero()) continue;
    const long k = oracle::uniform(rng, 2, 5);
    EXPECT_EQ(log_discrepancy(p, Integer(k) * e), k * log_discrepancy(p, e));
  }
}

TEST(Mld, MonotoneInCoefficients) {
  std::mt19937_64 rng(32);
  for (const auto& p : oracle::corpus(30, 300)) {
    ToricPair bigger = p;
    const std::size_t i = rng() % p.rays.size();
    bigger.coeffs[i] = (p.coeffs[i] + 1) / 2;
    ASSERT_TRUE(validate(bigger).empty());
    EXPECT_GE(mld(bigger), mld(p));
  }
}

TEST(MomentPolytope, Examples) {
  const VPolytope square = dual_vertices(moment_polytope(kP2));
  EXPECT_EQ(square.vertices, (std::vector<RationalPoint>{{-1, -1}, {-1, 2}, {2, -1}}));
  const VPolytope segment = dual_vertices(moment_polytope(kP1));
  EXPECT_EQ(segment.vertices, (std::vector<RationalPoint>{{-1}, {1}}));
}

TEST(MomentPolytope, ScalesWithCoefficients) {
  for (const auto& p : oracle::corpus(15, 400)) {
    ToricPair scaled = p;
    for (auto& a : scaled.coeffs) a /= 2;
    const VPolytope a = dual_vertices(moment_polytope(p));
    const VPolytope b = dual_vertices(moment_polytope(scaled));
    EXPECT_EQ(scale(a, q("1/2")).vertices, b.vertices);
  }
}

TEST(MomentPolytope, PolarOfBodyHasSameGauge) {
  std::mt19937_64 rng(33);
  for (const auto& p : oracle::corpus(15, 500)) {
    const VPolytope square = dual_vertices(moment_polytope(p));
    const VPolytope polar = dual_vertices(polar_dual(body(p).hull));
    for (int j = 0; j < 10; ++j) {
      RationalPoint x(p.dim);
      for (auto& c : x) c = oracle::random_rational(rng, 6, 3);
      EXPECT_EQ(gauge(square, x), gauge_lp(polar, x));
    }
  }
}

TEST(AnticanonicalVolume, Examples) {
  EXPECT_EQ(anticanonical_volume(kP2), 9);
  EXPECT_EQ(anticanonical_volume(kP1), 2);
  EXPECT_EQ(anticanonical_volume(kP1Half), 1);
}

TEST(Transform, PreservesInvariants) {
  std::mt19937_64 rng(34);
  for (const auto& p : oracle::corpus(15, 600)) {
    const IntMatrix a = oracle::random_unimodular(p.dim, rng);
    const ToricPair image = transform(p, a);
    ASSERT_TRUE(validate(image).empty());
    EXPECT_EQ(mld(image), mld(p));
    EXPECT_EQ(anticanonical_volume(image), anticanonical_volume(p));
  }
}
