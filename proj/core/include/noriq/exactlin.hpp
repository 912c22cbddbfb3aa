// Exact rational and integer linear algebra.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace noriq {

using Integer = mpz_class;
using Rational = mpq_class;

struct LinAlgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Canonical p/q; throws on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(const std::string& text);
// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix zero(std::size_t rows, std::size_t cols);
  static RatMatrix column(const std::vector<Rational>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<Rational>& entries() const { return a_; }

  std::vector<Rational> col(std::size_t j) const;
  std::vector<Rational> row(std::size_t i) const;
  RatMatrix transpose() const;
  RatMatrix cols_subset(const std::vector<std::size_t>& idx) const;
  RatMatrix rows_subset(const std::vector<std::size_t>& idx) const;
  RatMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const RatMatrix& b);
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator-() const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix scaled(const Rational& s) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  bool operator==(const RatMatrix& o) const;
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

RatMatrix hstack(const RatMatrix& a, const RatMatrix& b);
RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);
RatMatrix block_diag(const std::vector<RatMatrix>& blocks);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  bool operator==(const IntMatrix& o) const;
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }
  IntMatrix transpose() const;
  RatMatrix to_rational() const;
  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> a_;
};

// Throws if any entry is not an integer.
IntMatrix to_integer(const RatMatrix& m);

struct TwistTag {
  int i = 0;
  bool operator==(const TwistTag&) const = default;
};

struct RrefResult {
  RatMatrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

RrefResult rref(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);
bool is_invertible(const RatMatrix& m);
RatMatrix inverse(const RatMatrix& m);
// Solves a*x = b for x; a must have full column rank and b must lie in its column span.
RatMatrix solve_exact(const RatMatrix& a, const RatMatrix& b);

// Column span in reduced column-echelon form; equality is entrywise.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient_dim, const RatMatrix& spanning_columns);

  static Subspace full(std::size_t n);
  static Subspace zero(std::size_t n);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const RatMatrix& basis() const { return basis_; }
  // Row index of the leading entry of each basis column.
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool contains(const std::vector<Rational>& v) const;
  bool contains(const Subspace& o) const;
  // Coordinates of a member vector in the canonical basis.
  std::vector<Rational> coordinates(const std::vector<Rational>& v) const;

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }

 private:
  std::size_t ambient_ = 0;
  RatMatrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const RatMatrix& m);
Subspace image_basis(const RatMatrix& m);
Subspace intersect(const std::vector<Subspace>& subspaces, std::size_t ambient_dim);
Subspace sum(const Subspace& a, const Subspace& b);

// Entry (i*rows_b + k, j*cols_b + l) = a(i,j) * b(k,l).
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);

struct SmithForm {
  IntMatrix U, D, V;  // U * m * V = D
};
SmithForm smith_normal_form(const IntMatrix& m);

// Each solution is one block per entry of block_dims. A constraint (A, B) reads
// A*x = x*B for the block-diagonal unknown x; A and B are square of size sum(block_dims).
using BlockFamily = std::vector<RatMatrix>;
std::vector<BlockFamily> solve_linear_system(
    const std::vector<std::size_t>& block_dims,
    const std::vector<std::pair<RatMatrix, RatMatrix>>& constraints);

// Incremental row reduction used for large sparse homogeneous systems.
class RowReducer {
 public:
  explicit RowReducer(std::size_t ncols) : ncols_(ncols) {}
  // Sparse row: sorted (column, value) pairs. Returns true if the row was independent.
  bool add_row(std::vector<std::pair<std::size_t, Rational>> row);
  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  // Canonical kernel of the accumulated rows.
  Subspace kernel() const;

 private:
  std::size_t ncols_;
  // Each stored row is normalized with leading coefficient 1 at its pivot.
  std::vector<std::vector<std::pair<std::size_t, Rational>>> rows_;
  std::vector<long> pivot_row_;  // column -> stored row index or -1
};

}  // namespace noriq
