#pragma once

// Exact linear algebra over the rationals.
//
// Subspaces are always stored by their reduced row echelon basis, so two
// Subspace values describe the same set exactly when they compare equal.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "leibniz/error.hpp"

namespace leibniz {

using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);

/// Dense row-major matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  /// Every row must have `cols` entries.
  static Matrix from_rows(std::size_t cols, std::span<const Vector> rows);
  static Matrix from_columns(std::size_t rows, std::span<const Vector> cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;
  Scalar trace() const;

  Vector apply(const Vector& v) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Unique reduced row echelon form of `m`.
RowEchelon rref(Matrix m);

class Subspace {
 public:
  /// The zero subspace of k^n.
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace full(std::size_t ambient_dim);
  static Subspace span(std::size_t ambient_dim, std::span<const Vector> vectors);
  /// Row span of `rows`.
  static Subspace row_space(const Matrix& rows);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_dim_; }

  const Matrix& basis() const noexcept { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of `v` relative to basis(); absent when v is not in the subspace.
  std::optional<Vector> coordinates(const Vector& v) const;
  /// v minus its component along the basis pivots; zero iff v is contained.
  Vector residual(const Vector& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_dim_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {v : m v = 0}.
Subspace kernel_basis(const Matrix& m);

struct AffineSolution {
  Vector particular;
  Subspace homogeneous;
};

/// Solutions of A x = b. The particular solution has every free variable set
/// to zero; an inconsistent system gives nullopt.
std::optional<AffineSolution> solve_affine(const Matrix& a, const Vector& b);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersection(const Subspace& u, const Subspace& v);
bool subspace_contains(const Subspace& u, const Vector& v);

/// Square matrix acting on coordinates; column j is the image of basis vector j.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(Matrix m);

  static LinearMap zero(std::size_t dim);
  static LinearMap identity(std::size_t dim);

  std::size_t dim() const noexcept { return matrix_.rows(); }
  const Matrix& matrix() const noexcept { return matrix_; }

  Vector operator()(const Vector& v) const { return matrix_.apply(v); }
  Subspace image_of(const Subspace& u) const;
  bool is_zero() const { return matrix_.is_zero(); }

  friend bool operator==(const LinearMap&, const LinearMap&) = default;
  friend LinearMap operator+(const LinearMap& a, const LinearMap& b) {
    return LinearMap(a.matrix_ + b.matrix_);
  }
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b) {
    return LinearMap(a.matrix_ - b.matrix_);
  }
  friend LinearMap operator*(const LinearMap& a, const LinearMap& b) {
    return LinearMap(a.matrix_ * b.matrix_);
  }
  friend LinearMap operator*(const Scalar& s, const LinearMap& a) { return LinearMap(s * a.matrix_); }

 private:
  Matrix matrix_;
};

/// Smallest k with d^k = 0, or nullopt when d^dim != 0.
std::optional<std::size_t> nilpotency_index(const LinearMap& d);

/// exp(d) = sum_{i<k} d^i / i!. Throws Errc::NotNilpotent when d^dim != 0.
LinearMap exp_nilpotent(const LinearMap& d);

/// Canonical text of a rational: "p" for integers, "p/q" otherwise.
std::string to_string(const Scalar& s);

}  // namespace leibniz
