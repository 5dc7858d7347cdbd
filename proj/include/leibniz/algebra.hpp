#pragma once

// Left Leibniz algebras given by structure constants on an ordered basis.
//
// The product is b_i b_j = sum_k c(i, j, k) b_k and the defining law is
// a(bc) = (ab)c + b(ac), i.e. every left multiplication is a derivation.

#include <cstddef>
#include <string>
#include <vector>

#include "leibniz/exactlin.hpp"

namespace leibniz {

class StructureTable {
 public:
  explicit StructureTable(std::size_t dim = 0) : dim_(dim), c_(dim * dim * dim) {}

  std::size_t dim() const noexcept { return dim_; }

  Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
  const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }

  /// Coordinates of b_i b_j.
  Vector product_of_basis(std::size_t i, std::size_t j) const;
  void set_product(std::size_t i, std::size_t j, const Vector& value);

  friend bool operator==(const StructureTable&, const StructureTable&) = default;

 private:
  std::size_t dim_;
  std::vector<Scalar> c_;
};

struct Violation {
  std::size_t a, b, c;
  Vector lhs;  // a(bc)
  Vector rhs;  // (ab)c + b(ac)
};

struct ViolationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Every violated basis triple, in lexicographic (a, b, c) order.
ViolationReport check_left_leibniz(const StructureTable& table);

class LeibnizAlgebra {
 public:
  /// Validates the left Leibniz identity; throws Errc::LeibnizViolation.
  LeibnizAlgebra(std::vector<std::string> labels, StructureTable table);
  LeibnizAlgebra() : LeibnizAlgebra({}, StructureTable(0), NoCheck{}) {}

  /// Skips validation. Used for structures that are Leibniz by construction
  /// (quotients, subalgebras) and by `validate`, which reports violations.
  static LeibnizAlgebra unchecked(std::vector<std::string> labels, StructureTable table);

  std::size_t dim() const noexcept { return table_.dim(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const StructureTable& table() const noexcept { return table_; }

  Vector basis_product(std::size_t i, std::size_t j) const { return table_.product_of_basis(i, j); }

  friend bool operator==(const LeibnizAlgebra&, const LeibnizAlgebra&) = default;

 private:
  struct NoCheck {};
  LeibnizAlgebra(std::vector<std::string> labels, StructureTable table, NoCheck);

  std::vector<std::string> labels_;
  StructureTable table_;
};

/// Default labels b0, b1, ...
std::vector<std::string> default_labels(std::size_t dim, const std::string& prefix = "b");

Vector product(const LeibnizAlgebra& alg, const Vector& x, const Vector& y);
ViolationReport check_left_leibniz(const LeibnizAlgebra& alg);
/// Antisymmetric structure constants (with the Leibniz law this gives Jacobi).
bool is_lie(const LeibnizAlgebra& alg);

/// d_a(x) = a x.
LinearMap left_multiplication(const LeibnizAlgebra& alg, const Vector& a);
/// x -> x a.
LinearMap right_multiplication(const LeibnizAlgebra& alg, const Vector& a);

Subspace subspace_product(const LeibnizAlgebra& alg, const Subspace& u, const Subspace& v);
bool is_subalgebra(const LeibnizAlgebra& alg, const Subspace& u);
bool is_left_ideal(const LeibnizAlgebra& alg, const Subspace& u);
bool is_ideal(const LeibnizAlgebra& alg, const Subspace& u);

struct Quotient {
  LeibnizAlgebra algebra;
  Matrix projection;  // quotient_dim x dim
  Matrix section;     // dim x quotient_dim, picks the non-pivot coordinates
};

/// A / I on the non-pivot coordinates of I in index order. Throws Errc::NotAnIdeal.
Quotient quotient(const LeibnizAlgebra& alg, const Subspace& ideal);

struct Restriction {
  LeibnizAlgebra algebra;
  Matrix inclusion;  // dim x sub_dim, columns are the canonical basis of U
};

/// The subalgebra U as an algebra on its canonical basis. Throws Errc::NotASubalgebra.
Restriction restrict_to(const LeibnizAlgebra& alg, const Subspace& u);

/// Rewrites the algebra in the basis given by the columns of `change`
/// (which must be invertible). Throws Errc::Precondition otherwise.
LeibnizAlgebra change_basis(const LeibnizAlgebra& alg, const Matrix& change);

/// Image of a subspace of a subalgebra/quotient coordinate space under a
/// rectangular map (e.g. Restriction::inclusion or Quotient::section).
Subspace map_subspace(const Matrix& map, const Subspace& u);
/// Preimage of U under the quotient projection: ideal + section(U).
Subspace preimage(const Quotient& q, const Subspace& ideal, const Subspace& u);

/// Stable digest of the labels and table (FNV-1a over a canonical text form).
std::string digest(const LeibnizAlgebra& alg);

}  // namespace leibniz
