#pragma once

// Exact integers and rationals, integer vectors in N and M = N*, and the
// small amount of integer linear algebra the lattice constructions need.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms. Throws ContractError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p/q" or "p" (optional leading '-'). Rejects decimals and
/// exponents, since a float would silently lose exactness.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
/// Reduced "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);
Rational abs(const Rational& value);

/// Sign of |a| - |b|.
inline int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

/// Integer vector with a tag distinguishing lattice points of N from
/// functionals in M. Equality is coordinate-wise, ordering lexicographic.
template <typename Tag>
class IntegerVector {
 public:
  IntegerVector() = default;
  explicit IntegerVector(std::vector<Integer> coords)
      : coords_(std::move(coords)) {}
  IntegerVector(std::initializer_list<long> coords) {
    coords_.reserve(coords.size());
    for (long c : coords) coords_.emplace_back(c);
  }

  static IntegerVector zero(std::size_t dim) {
    return IntegerVector(std::vector<Integer>(dim, Integer(0)));
  }
  static IntegerVector unit(std::size_t dim, std::size_t axis) {
    auto v = zero(dim);
    v.coords_[axis] = 1;
    return v;
  }

  std::size_t dim() const { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  IntegerVector operator-() const {
    IntegerVector r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
  }
  friend IntegerVector operator+(const IntegerVector& a,
                                 const IntegerVector& b) {
    IntegerVector r = a;
    for (std::size_t i = 0; i < r.dim(); ++i) r.coords_[i] += b.coords_[i];
    return r;
  }
  friend IntegerVector operator-(const IntegerVector& a,
                                 const IntegerVector& b) {
    return a + (-b);
  }
  friend IntegerVector operator*(const Integer& k, const IntegerVector& a) {
    IntegerVector r = a;
    for (auto& c : r.coords_) c *= k;
    return r;
  }

  friend bool operator==(const IntegerVector& a, const IntegerVector& b) {
    return a.coords_ == b.coords_;
  }
  friend std::strong_ordering operator<=>(const IntegerVector& a,
                                          const IntegerVector& b) {
    const std::size_t n = std::min(a.dim(), b.dim());
    for (std::size_t i = 0; i < n; ++i) {
      const int c = cmp(a.coords_[i], b.coords_[i]);
      if (c < 0) return std::strong_ordering::less;
      if (c > 0) return std::strong_ordering::greater;
    }
    return a.dim() <=> b.dim();
  }

 private:
  std::vector<Integer> coords_;
};

struct LatticeTag;
struct DualTag;
using LatticeVector = IntegerVector<LatticeTag>;
using DualFunctional = IntegerVector<DualTag>;

using RationalPoint = std::vector<Rational>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// The standard pairing <phi, e>.
Integer pairing(const DualFunctional& phi, const LatticeVector& e);
/// phi evaluated on a rational point.
Rational evaluate(const DualFunctional& phi, std::span<const Rational> x);
RationalPoint to_rational(const LatticeVector& e);
std::string to_string(const LatticeVector& v);
std::string to_string(const DualFunctional& v);
std::string to_string(std::span<const Rational> point);

/// Non-negative gcd of all coordinates (zero for the zero vector).
Integer content(const std::vector<Integer>& coords);

template <typename Tag>
bool is_primitive(const IntegerVector<Tag>& v) {
  return content(v.coords()) == 1;
}

/// Row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  template <typename Tag>
  static IntMatrix from_rows(const std::vector<IntegerVector<Tag>>& rows,
                             std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::vector<Integer> row(std::size_t r) const;
  std::vector<Integer> column(std::size_t c) const;
  IntMatrix transpose() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Exact determinant (fraction-free Bareiss elimination). Square input only.
Integer determinant(const IntMatrix& m);
Rational determinant(RationalMatrix m);

/// Row-style Hermite normal form: u * m == h with u unimodular, h in row
/// echelon form, pivots positive, entries above each pivot in [0, pivot).
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
};
HermiteForm hermite_normal_form(const IntMatrix& m);

/// Inverse of a matrix with determinant +-1.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Bases of N and M adapted to a primitive functional phi:
///   lattice_basis[0] is a preimage of 1 under phi and lattice_basis[1..]
///   spans the saturated kernel N ∩ phi^⊥;
///   dual_basis is the dual basis of M with dual_basis[0] == phi.
/// <dual_basis[i], lattice_basis[j]> == (i == j).
struct LatticeSplit {
  DualFunctional phi;
  std::vector<LatticeVector> lattice_basis;
  std::vector<DualFunctional> dual_basis;

  /// Kernel coordinates (length d-1) of a point lying in phi^⊥.
  RationalPoint kernel_coordinates(std::span<const Rational> x) const;
  /// Functional on N whose restriction to the kernel has the given
  /// coordinates and which vanishes on lattice_basis[0].
  DualFunctional extend_from_kernel(const DualFunctional& kernel_phi) const;
  /// Restriction of a functional on N to the kernel basis.
  DualFunctional restrict_to_kernel(const DualFunctional& psi) const;
};
LatticeSplit split_lattice(const DualFunctional& phi);

/// A basis of M = Z^d whose first element is phi. phi must be primitive.
std::vector<DualFunctional> complete_to_basis(const DualFunctional& phi);

/// A basis of the saturated sublattice N ∩ phi^⊥ (d-1 vectors).
std::vector<LatticeVector> kernel_lattice_basis(const DualFunctional& phi);

// Exact linear algebra over Q.

std::size_t rank(RationalMatrix m);
/// Basis of {x : m x = 0}; m has `cols` columns (m may have zero rows).
RationalMatrix nullspace(RationalMatrix m, std::size_t cols);
/// Unique solution of a square system, or nullopt when singular.
std::optional<RationalPoint> solve_square(RationalMatrix a, RationalPoint b);

/// Calls fn on every k-subset of {0..n-1}, in lexicographic order. Stops
/// early when fn returns false.
void for_each_combination(
    std::size_t n, std::size_t k,
    const std::function<bool(std::span<const std::size_t>)>& fn);

}  // namespace toric
