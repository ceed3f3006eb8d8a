#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "toric/error.hpp"
#include "toric/numeric_lattice.hpp"

using namespace toric;
using oracle::q;

namespace {

IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = oracle::uniform(rng, -6, 6);
  return m;
}

bool is_row_hermite(const IntMatrix& h) {
  std::size_t last_pivot = 0;
  bool seen_pivot = false;
  bool zero_rows = false;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t c = 0;
    while (c < h.cols() && h(r, c) == 0) ++c;
    if (c == h.cols()) {
      zero_rows = true;
      continue;
    }
    if (zero_rows) return false;
    if (seen_pivot && c <= last_pivot) return false;
    if (h(r, c) <= 0) return false;
    for (std::size_t above = 0; above < r; ++above) {
      if (h(above, c) < 0 || h(above, c) >= h(r, c)) return false;
    }
    last_pivot = c;
    seen_pivot = true;
  }
  return true;
}

}  // namespace

TEST(Rational, ParsesReducedFractions) {
  EXPECT_EQ(to_string(q("4/6")), "2/3");
  EXPECT_EQ(to_string(q("-3")), "-3");
  EXPECT_EQ(to_string(q("-5/10")), "-1/2");
  EXPECT_THROW(q("5/-10"), InputError);
  EXPECT_THROW(q("0.5"), InputError);
  EXPECT_THROW(q("1/0"), InputError);
  EXPECT_THROW(q(""), InputError);
}

TEST(Rational, FloorCeilAbs) {
  EXPECT_EQ(floor(q("-1/2")), -1);
  EXPECT_EQ(ceil(q("-1/2")), 0);
  EXPECT_EQ(floor(q("7/3")), 2);
  EXPECT_EQ(ceil(q("7/3")), 3);
  EXPECT_EQ(ceil(q("3")), 3);
  EXPECT_EQ(abs(q("-2/5")), q("2/5"));
}

TEST(Rational, SumsMatchCrossMultiplication) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const long a = oracle::uniform(rng, -50, 50);
    const long b = oracle::uniform(rng, 1, 30);
    const long c = oracle::uniform(rng, -50, 50);
    const long d = oracle::uniform(rng, 1, 30);
    const Rational sum = make_rational(Integer(a), Integer(b)) + make_rational(Integer(c), Integer(d));
    EXPECT_EQ(sum.get_num() * (b * d), sum.get_den() * (a * d + c * b));
    Integer g;
    mpz_gcd(g.get_mpz_t(), sum.get_num().get_mpz_t(), sum.get_den().get_mpz_t());
    EXPECT_EQ(g, 1);
    EXPECT_GT(sum.get_den(), 0);
  }
}

TEST(Primitive, Examples) {
  EXPECT_FALSE(is_primitive(LatticeVector{2, 4}));
  EXPECT_TRUE(is_primitive(LatticeVector{3, 5}));
  EXPECT_FALSE(is_primitive(LatticeVector{0, 0}));
  EXPECT_TRUE(is_primitive(DualFunctional{0, -1}));
}

TEST(Hermite, Identity) {
  const auto hf = hermite_normal_form(IntMatrix::identity(2));
  EXPECT_EQ(hf.h, IntMatrix::identity(2));
  EXPECT_EQ(hf.u, IntMatrix::identity(2));
}

TEST(Hermite, ZeroMatrix) {
  const auto hf = hermite_normal_form(IntMatrix(2, 2));
  EXPECT_EQ(hf.h, IntMatrix(2, 2));
  EXPECT_EQ(hf.u, IntMatrix::identity(2));
}

TEST(Hermite, SmallExample) {
  const IntMatrix m{{2, 4}, {1, 3}};
  const auto hf = hermite_normal_form(m);
  EXPECT_EQ(hf.u * m, hf.h);
  EXPECT_EQ(abs(Rational(oracle::cofactor_det({hf.u.row(0), hf.u.row(1)}))), 1);
  EXPECT_TRUE(is_row_hermite(hf.h));
  // det m = 2, so the pivots multiply to 2.
  EXPECT_EQ(hf.h(0, 0) * hf.h(1, 1), 2);
  EXPECT_EQ(hf.h(1, 0), 0);
}

TEST(Hermite, RandomMatricesReconstruct) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 150; ++i) {
    const std::size_t rows = 1 + rng() % 4;
    const std::size_t cols = 1 + rng() % 4;
    const IntMatrix m = random_matrix(rows, cols, rng);
    const auto hf = hermite_normal_form(m);
    ASSERT_EQ(hf.u * m, hf.h);
    std::vector<std::vector<Integer>> u;
    for (std::size_t r = 0; r < rows; ++r) u.push_back(hf.u.row(r));
    const Integer det = oracle::cofactor_det(u);
    ASSERT_TRUE(det == 1 || det == -1);
    ASSERT_TRUE(is_row_hermite(hf.h));
  }
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 4;
    const IntMatrix m = random_matrix(n, n, rng);
    std::vector<std::vector<Integer>> rows;
    for (std::size_t r = 0; r < n; ++r) rows.push_back(m.row(r));
    EXPECT_EQ(determinant(m), oracle::cofactor_det(rows));
  }
}

TEST(Unimodular, InverseRoundTrip) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const std::size_t d = 1 + rng() % 4;
    const IntMatrix a = oracle::random_unimodular(d, rng);
    EXPECT_EQ(a * inverse_unimodular(a), IntMatrix::identity(d));
  }
}

TEST(CompleteToBasis, Examples) {
  const auto b1 = complete_to_basis(DualFunctional{1, 0});
  ASSERT_EQ(b1.size(), 2u);
  EXPECT_EQ(b1[0], (DualFunctional{1, 0}));
  EXPECT_EQ(abs(Rational(oracle::cofactor_det(b1))), 1);

  const auto b2 = complete_to_basis(DualFunctional{2, 3});
  EXPECT_EQ(b2[0], (DualFunctional{2, 3}));
  EXPECT_EQ(abs(Rational(oracle::cofactor_det(b2))), 1);

  const auto b3 = complete_to_basis(DualFunctional{0, 0, 1});
  EXPECT_EQ(b3[0], (DualFunctional{0, 0, 1}));
  EXPECT_EQ(abs(Rational(oracle::cofactor_det(b3))), 1);

  EXPECT_THROW(complete_to_basis(DualFunctional{2, 4}), ContractError);
}

TEST(CompleteToBasis, RandomPrimitive) {
  std::mt19937_64 rng(10);
  int tested = 0;
  while (tested < 100) {
    const std::size_t d = 1 + rng() % 4;
    std::vector<Integer> c;
    for (std::size_t k = 0; k < d; ++k) c.emplace_back(oracle::uniform(rng, -9, 9));
    const DualFunctional phi(c);
    if (!is_primitive(phi)) continue;
    ++tested;
    const auto basis = complete_to_basis(phi);
    ASSERT_EQ(basis.size(), d);
    EXPECT_EQ(basis[0], phi);
    const Integer det = oracle::cofactor_det(basis);
    EXPECT_TRUE(det == 1 || det == -1);
  }
}

TEST(KernelBasis, Examples) {
  const auto k1 = kernel_lattice_basis(DualFunctional{1, 0});
  ASSERT_EQ(k1.size(), 1u);
  EXPECT_TRUE(k1[0] == (LatticeVector{0, 1}) || k1[0] == (LatticeVector{0, -1}));

  const auto k2 = kernel_lattice_basis(DualFunctional{1, 1});
  ASSERT_EQ(k2.size(), 1u);
  EXPECT_TRUE(k2[0] == (LatticeVector{1, -1}) || k2[0] == (LatticeVector{-1, 1}));

  const DualFunctional phi{1, 1, 1};
  const auto k3 = kernel_lattice_basis(phi);
  ASSERT_EQ(k3.size(), 2u);
  for (const auto& b : k3) EXPECT_EQ(pairing(phi, b), 0);
  EXPECT_EQ(oracle::maximal_minor_gcd(k3, 3), 1);

  EXPECT_THROW(kernel_lattice_basis(DualFunctional{2, 2}), ContractError);
}

TEST(KernelBasis, SaturatedAndCompletesWithPreimage) {
  std::mt19937_64 rng(12);
  int tested = 0;
  while (tested < 100) {
    const std::size_t d = 2 + rng() % 3;
    std::vector<Integer> c;
    for (std::size_t k = 0; k < d; ++k) c.emplace_back(oracle::uniform(rng, -7, 7));
    const DualFunctional phi(c);
    if (!is_primitive(phi)) continue;
    ++tested;
    const auto kernel = kernel_lattice_basis(phi);
    ASSERT_EQ(kernel.size(), d - 1);
    for (const auto& b : kernel) ASSERT_EQ(pairing(phi, b), 0);
    ASSERT_EQ(oracle::maximal_minor_gcd(kernel, d), 1);

    const LatticeSplit split = split_lattice(phi);
    EXPECT_EQ(pairing(phi, split.lattice_basis[0]), 1);
    std::vector<LatticeVector> full = kernel;
    full.push_back(split.lattice_basis[0]);
    const Integer det = oracle::cofactor_det(full);
    EXPECT_TRUE(det == 1 || det == -1);

    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        EXPECT_EQ(pairing(split.dual_basis[i], split.lattice_basis[j]), i == j ? 1 : 0);
    EXPECT_EQ(split.dual_basis[0], phi);
  }
}

TEST(LatticeSplit, ExtendAndRestrict) {
  const LatticeSplit split = split_lattice(DualFunctional{2, 3, 5});
  const DualFunctional psi{4, -7};
  const DualFunctional lifted = split.extend_from_kernel(psi);
  EXPECT_EQ(split.restrict_to_kernel(lifted), psi);
  EXPECT_EQ(pairing(lifted, split.lattice_basis[0]), 0);
  const DualFunctional shifted = lifted + Integer(3) * split.phi;
  EXPECT_EQ(split.restrict_to_kernel(shifted), psi);
}

TEST(LinearAlgebra, RankNullspaceSolve) {
  const RationalMatrix m{{1, 2, 3}, {2, 4, 6}};
  EXPECT_EQ(rank(m), 1u);
  const auto ns = nullspace(m, 3);
  EXPECT_EQ(ns.size(), 2u);
  for (const auto& v : ns) EXPECT_EQ(v[0] + 2 * v[1] + 3 * v[2], 0);

  const auto x = solve_square({{0, 1}, {-1, -1}}, {Rational(-1), Rational(-1)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], 2);
  EXPECT_EQ((*x)[1], -1);
  EXPECT_FALSE(solve_square({{1, 1}, {2, 2}}, {Rational(1), Rational(2)}).has_value());
}

TEST(Combinations, CountsAndOrder) {
  std::vector<std::vector<std::size_t>> seen;
  for_each_combination(4, 2, [&](std::span<const std::size_t> idx) {
    seen.emplace_back(idx.begin(), idx.end());
    return true;
  });
  ASSERT_EQ(seen.size(), 6u);
  EXPECT_EQ(seen.front(), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(seen.back(), (std::vector<std::size_t>{2, 3}));
  int calls = 0;
  for_each_combination(5, 0, [&](std::span<const std::size_t>) {
    ++calls;
    return true;
  });
  EXPECT_EQ(calls, 1);
}
