#include <gtest/gtest.h>

#include "oracle.hpp"
#include "toric/error.hpp"
#include "toric/io.hpp"

using namespace toric;
using oracle::q;

namespace {

const char* kP2Text = R"({"dim":2,"rays":[[1,0],[0,1],[-1,-1]],"coeffs":["1","1","1"]})";

bool throws_with(const std::string& text, const std::string& needle) {
  try {
    parse_pair(text);
  } catch (const InputError& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

}  // namespace

TEST(ParsePair, Examples) {
  const ToricPair p2 = parse_pair(kP2Text);
  EXPECT_EQ(p2.dim, 2u);
  EXPECT_EQ(p2.rays.size(), 3u);
  EXPECT_EQ(p2.coeffs, (std::vector<Rational>{1, 1, 1}));

  const ToricPair p1 = parse_pair(R"({"dim":1,"rays":[[1],[-1]],"coeffs":["1/2","2/4"]})");
  EXPECT_EQ(p1.coeffs, (std::vector<Rational>{q("1/2"), q("1/2")}));

  EXPECT_TRUE(throws_with(R"({"dim":1,"rays":[[1],[-1]],"coeffs":["0","1"]})",
                          "coefficient must be in (0,1]"));
}

TEST(ParsePair, RejectsMalformedInput) {
  EXPECT_TRUE(throws_with("{", "malformed JSON"));
  EXPECT_TRUE(throws_with(R"({"dim":1,"rays":[[1],[-1]],"coeffs":[0.5,1]})", "p/q"));
  EXPECT_TRUE(throws_with(R"({"dim":1,"rays":[[1],[-1]],"coeffs":["0.5","1"]})", "not an exact rational"));
  EXPECT_TRUE(throws_with(R"({"dim":1,"rays":[[1.5],[-1]],"coeffs":["1","1"]})", "integer"));
  EXPECT_TRUE(throws_with(R"({"rays":[[1],[-1]],"coeffs":["1","1"]})", "dim"));
  EXPECT_TRUE(throws_with(R"({"dim":2,"rays":[[2,0],[0,1],[-1,-1]],"coeffs":["1","1","1"]})",
                          "ray not primitive"));
  EXPECT_TRUE(throws_with(R"([1,2])", "object"));
  EXPECT_NO_THROW(parse_pair_unchecked(R"({"dim":2,"rays":[[2,0],[0,1]],"coeffs":["1","1"]})"));
}

TEST(EmitPair, RoundTripIsCanonical) {
  for (const auto& p : oracle::corpus(40, 1400, 4)) {
    const std::string text = emit_pair(p);
    const ToricPair back = parse_pair(text);
    EXPECT_EQ(back.dim, p.dim);
    EXPECT_EQ(back.rays, p.rays);
    EXPECT_EQ(back.coeffs, p.coeffs);
    EXPECT_EQ(back.name, p.name);
    EXPECT_EQ(emit_pair(back), text);
  }
}

TEST(EmitPair, KeyOrderIsFixed) {
  ToricPair p = parse_pair(kP2Text);
  p.name = "p2";
  const std::string text = emit_pair(p);
  const auto name = text.find("\"name\"");
  const auto dim = text.find("\"dim\"");
  const auto rays = text.find("\"rays\"");
  const auto coeffs = text.find("\"coeffs\"");
  EXPECT_LT(name, dim);
  EXPECT_LT(dim, rays);
  EXPECT_LT(rays, coeffs);
}

TEST(Certificate, RoundTrip) {
  for (const auto& p : oracle::corpus(20, 1500)) {
    const ComplementCertificate cert = construct_complement(p);
    const std::string text = emit_certificate(cert, true);
    const ComplementCertificate back = parse_certificate(text);
    EXPECT_EQ(emit_certificate(back, true), text);
    EXPECT_EQ(back.basis, cert.basis);
    EXPECT_EQ(back.witness, cert.witness);
    EXPECT_EQ(back.n, cert.n);
    EXPECT_EQ(back.trace.size(), cert.trace.size());
    EXPECT_TRUE(verify_certificate(p, back).passed());
  }
}

TEST(Certificate, VerifiedDocumentsAreRechecked) {
  const ToricPair p2 = parse_pair(kP2Text);
  ComplementCertificate cert = construct_complement(p2);
  cert.divisor_coeffs[0] = 5;
  const std::string claimed = emit_certificate(cert, true);
  EXPECT_THROW(parse_certificate(claimed), InputError);
  EXPECT_NO_THROW(parse_certificate(claimed, false));
  EXPECT_NO_THROW(parse_certificate(emit_certificate(cert, false)));
}

TEST(Certificate, RejectsMissingFields) {
  EXPECT_THROW(parse_certificate(R"({"pair":{"dim":1,"rays":[[1],[-1]],"coeffs":["1","1"]}})"),
               InputError);
}

TEST(RandomPair, Deterministic) {
  const ToricPair a = random_pair(2, 4, 4, 1);
  const ToricPair b = random_pair(2, 4, 4, 1);
  EXPECT_EQ(emit_pair(a), emit_pair(b));
  EXPECT_TRUE(validate(a).empty());

  const ToricPair line = random_pair(1, 2, 4, 7);
  EXPECT_EQ(line.dim, 1u);
  EXPECT_EQ(line.rays.size(), 2u);

  const ToricPair solid = random_pair(3, 5, 3, 9);
  EXPECT_TRUE(validate(solid).empty());
  for (const auto& a : solid.coeffs) {
    EXPECT_GT(a, 0);
    EXPECT_LE(a, 1);
    EXPECT_LE(a.get_den(), 3);
  }
  EXPECT_THROW(random_pair(5, 8, 3, 1), ContractError);
  EXPECT_THROW(random_pair(1, 3, 3, 1), ContractError);
}

TEST(RandomPair, AlwaysValid) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t d = 1 + seed % 4;
    const std::size_t rays = d == 1 ? 2 : d + 1 + seed % 3;
    EXPECT_TRUE(validate(random_pair(d, rays, 5, seed)).empty());
  }
}
