#include "toric/numeric_lattice.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "toric/error.hpp"

namespace toric {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ContractError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool parse_integer(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  Integer num;
  Integer den(1);
  const std::string_view num_text = text.substr(0, slash);
  bool ok = parse_integer(num_text, num);
  if (ok && slash != std::string_view::npos) {
    const std::string_view den_text = text.substr(slash + 1);
    ok = !den_text.empty() && den_text[0] != '-' && den_text[0] != '+' &&
         parse_integer(den_text, den);
  }
  if (!ok) {
    throw InputError("not an exact rational: \"" + std::string(text) + "\"");
  }
  if (den == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  return make_rational(num, den);
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& value) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

Integer pairing(const DualFunctional& phi, const LatticeVector& e) {
  if (phi.dim() != e.dim()) throw ContractError("dimension mismatch in pairing");
  Integer sum(0);
  for (std::size_t i = 0; i < phi.dim(); ++i) sum += phi[i] * e[i];
  return sum;
}

Rational evaluate(const DualFunctional& phi, std::span<const Rational> x) {
  if (phi.dim() != x.size()) {
    throw ContractError("dimension mismatch evaluating functional");
  }
  Rational sum(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (phi[i] != 0) sum += Rational(phi[i]) * x[i];
  }
  return sum;
}

RationalPoint to_rational(const LatticeVector& e) {
  RationalPoint p;
  p.reserve(e.dim());
  for (const auto& c : e.coords()) p.emplace_back(c);
  return p;
}

namespace {

template <typename Range>
std::string join_coords(const Range& coords) {
  std::string out = "(";
  bool first = true;
  for (const auto& c : coords) {
    if (!first) out += ",";
    out += to_string(c);
    first = false;
  }
  return out + ")";
}

}  // namespace

std::string to_string(const LatticeVector& v) { return join_coords(v.coords()); }
std::string to_string(const DualFunctional& v) { return join_coords(v.coords()); }
std::string to_string(std::span<const Rational> point) { return join_coords(point); }

Integer content(const std::vector<Integer>& coords) {
  Integer g(0);
  for (const auto& c : coords) g = gcd(g, c);
  return g;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ContractError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Integer> IntMatrix::row(std::size_t r) const {
  return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
}

std::vector<Integer> IntMatrix::column(std::size_t c) const {
  std::vector<Integer> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw ContractError("matrix shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Integer determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw ContractError("determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return Integer(1);
  IntMatrix m = input;
  Integer sign(1);
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return Integer(0);
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

HermiteForm hermite_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(rows);

  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(h(a, c), h(b, c));
    for (std::size_t c = 0; c < rows; ++c) std::swap(u(a, c), u(b, c));
  };
  // row[target] -= q * row[source]
  auto subtract = [&](std::size_t target, std::size_t source, const Integer& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < cols; ++c) h(target, c) -= q * h(source, c);
    for (std::size_t c = 0; c < rows; ++c) u(target, c) -= q * u(source, c);
  };
  auto negate = [&](std::size_t r) {
    for (std::size_t c = 0; c < cols; ++c) h(r, c) = -h(r, c);
    for (std::size_t c = 0; c < rows; ++c) u(r, c) = -u(r, c);
  };

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    // Euclid on the column below pivot_row until one nonzero entry remains.
    while (true) {
      std::size_t best = rows;
      for (std::size_t r = pivot_row; r < rows; ++r) {
        if (h(r, col) == 0) continue;
        if (best == rows || cmpabs(h(r, col), h(best, col)) < 0) best = r;
      }
      if (best == rows) break;
      swap_rows(pivot_row, best);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < rows; ++r) {
        if (h(r, col) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), h(r, col).get_mpz_t(),
                   h(pivot_row, col).get_mpz_t());
        subtract(r, pivot_row, q);
        if (h(r, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(pivot_row, col) == 0) continue;
    if (h(pivot_row, col) < 0) negate(pivot_row);
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(r, col).get_mpz_t(),
                 h(pivot_row, col).get_mpz_t());
      subtract(r, pivot_row, q);
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw ContractError("inverse of non-square matrix");
  // The HNF of a unimodular matrix is the identity, so u is the inverse.
  HermiteForm hf = hermite_normal_form(m);
  if (!(hf.h == IntMatrix::identity(n))) {
    throw ContractError("matrix is not unimodular");
  }
  return hf.u;
}

RationalPoint LatticeSplit::kernel_coordinates(std::span<const Rational> x) const {
  RationalPoint out;
  out.reserve(dual_basis.size() - 1);
  for (std::size_t k = 1; k < dual_basis.size(); ++k) {
    out.push_back(evaluate(dual_basis[k], x));
  }
  return out;
}

DualFunctional LatticeSplit::extend_from_kernel(const DualFunctional& kernel_phi) const {
  const std::size_t d = phi.dim();
  if (kernel_phi.dim() + 1 != d) throw ContractError("kernel functional has wrong dimension");
  auto out = DualFunctional::zero(d);
  for (std::size_t k = 0; k + 1 < d; ++k) {
    out = out + kernel_phi[k] * dual_basis[k + 1];
  }
  return out;
}

DualFunctional LatticeSplit::restrict_to_kernel(const DualFunctional& psi) const {
  std::vector<Integer> coords;
  coords.reserve(lattice_basis.size() - 1);
  for (std::size_t k = 1; k < lattice_basis.size(); ++k) {
    coords.push_back(pairing(psi, lattice_basis[k]));
  }
  return DualFunctional(std::move(coords));
}

LatticeSplit split_lattice(const DualFunctional& phi) {
  if (!is_primitive(phi)) {
    throw ContractError("functional " + to_string(phi) + " is not primitive");
  }
  const std::size_t d = phi.dim();
  IntMatrix column(d, 1);
  for (std::size_t i = 0; i < d; ++i) column(i, 0) = phi[i];
  // u * phi^T = e_1: rows of u are a basis of N with pairings (1,0,...,0).
  const HermiteForm hf = hermite_normal_form(column);
  const IntMatrix inv = inverse_unimodular(hf.u);

  LatticeSplit split;
  split.phi = phi;
  for (std::size_t r = 0; r < d; ++r) split.lattice_basis.emplace_back(hf.u.row(r));
  for (std::size_t c = 0; c < d; ++c) split.dual_basis.emplace_back(inv.column(c));
  return split;
}

std::vector<DualFunctional> complete_to_basis(const DualFunctional& phi) {
  return split_lattice(phi).dual_basis;
}

std::vector<LatticeVector> kernel_lattice_basis(const DualFunctional& phi) {
  if (phi.dim() < 2) throw ContractError("kernel lattice needs dimension >= 2");
  auto basis = split_lattice(phi).lattice_basis;
  basis.erase(basis.begin());
  return basis;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < m[r].size(); ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(RationalMatrix m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  return row_reduce(m, cols).size();
}

RationalMatrix nullspace(RationalMatrix m, std::size_t cols) {
  const auto pivots = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalPoint v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalPoint> solve_square(RationalMatrix a, RationalPoint b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  const auto pivots = row_reduce(a, n);
  if (pivots.size() != n) return std::nullopt;
  RationalPoint x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

void for_each_combination(
    std::size_t n, std::size_t k,
    const std::function<bool(std::span<const std::size_t>)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace toric
