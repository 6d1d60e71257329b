#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "thickrep/field.hpp"
#include "thickrep/poly.hpp"
#include "thickrep/random.hpp"

namespace thickrep {

/// Dense row-major matrix over a FieldSpec.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec f, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix from_rows(const FieldSpec& f, const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_rows(const FieldSpec& f, const std::vector<Vector>& rows);
  static Matrix from_columns(const FieldSpec& f, const std::vector<Vector>& cols, std::size_t rows);
  static Matrix from_ints(const FieldSpec& f, const std::vector<std::vector<long long>>& rows);
  static Matrix diagonal(const FieldSpec& f, const Vector& d);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  std::vector<Vector> row_vectors() const;

  Matrix transpose() const;
  Matrix scaled(const Scalar& c) const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;

  /// Vertical concatenation (same column count) and horizontal (same row count).
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix hstack(const Matrix& a, const Matrix& b);
  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix matrix;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Scalar determinant(const Matrix& m);
bool is_invertible(const Matrix& m);
/// Throws Singular.
Matrix inverse(const Matrix& m);
/// Some x with m x = b, or nothing.
bool solve(const Matrix& m, const Vector& b, Vector& x);

/// Subspace of k^n stored as the nonzero rows of its reduced row-echelon basis.
/// Equality is equality of these canonical bases.
class Subspace {
 public:
  Subspace() = default;
  Subspace(FieldSpec f, std::size_t ambient);  // zero subspace

  static Subspace span(const FieldSpec& f, std::size_t ambient, const std::vector<Vector>& vs);
  static Subspace row_space(const Matrix& m);
  static Subspace full(const FieldSpec& f, std::size_t n);
  /// Canonical basis rows taken as given; caller guarantees RREF.
  static Subspace from_canonical(const Matrix& basis);

  const FieldSpec& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_; }
  const Matrix& basis() const noexcept { return basis_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& w) const;

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Order used for every tie-break: by dimension, then canonical basis entries.
bool canonical_less(const Subspace& a, const Subspace& b);

Subspace kernel(const Matrix& m);
/// Column space.
Subspace image(const Matrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool direct_sum_is_ambient(const Subspace& a, const Subspace& b);
/// g(W) for a square g acting on column vectors.
Subspace transform(const Matrix& g, const Subspace& w);

/// det(xI - m) by the division-free Berkowitz recursion.
Poly charpoly(const Matrix& m);
/// Monic generator of {p : p(m) = 0}.
Poly minimal_polynomial(const Matrix& m);

/// Incrementally grown span with membership tests; rows kept fully reduced.
class EchelonBasis {
 public:
  EchelonBasis(FieldSpec f, std::size_t ambient) : field_(f), ambient_(ambient) {}
  /// Adds v; returns true when the span grew.
  bool add(const Vector& v);
  bool contains(const Vector& v) const;
  std::size_t dim() const noexcept { return rows_.size(); }
  Subspace subspace() const;
  /// The reduced rows in insertion order.
  const std::vector<Vector>& rows() const noexcept { return rows_; }

 private:
  Vector reduce(Vector v) const;

  FieldSpec field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Uniform over F_q; over Q small integers in [-bound, bound].
Scalar random_scalar(const FieldSpec& f, Rng& rng, long long bound = 3);
Vector random_vector(const FieldSpec& f, std::size_t n, Rng& rng, long long bound = 3);
Matrix random_matrix(const FieldSpec& f, std::size_t rows, std::size_t cols, Rng& rng, long long bound = 3);
Matrix random_invertible(const FieldSpec& f, std::size_t n, Rng& rng, long long bound = 3);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace thickrep
