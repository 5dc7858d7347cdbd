#pragma once

#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Span of all squares x x, computed as span{b_i b_j + b_j b_i : i <= j}.
Subspace leibniz_kernel(const LeibnizAlgebra& alg);

struct DerivedSeries {
  /// terms[0] = U, terms[i+1] = terms[i] terms[i]; stops at 0 or when it stabilizes.
  std::vector<Subspace> terms;
  bool reaches_zero() const { return !terms.empty() && terms.back().is_zero(); }
};

/// Throws Errc::NotASubalgebra.
DerivedSeries derived_series(const LeibnizAlgebra& alg, const Subspace& u);
bool is_soluble(const LeibnizAlgebra& alg, const Subspace& u);

struct BilinearForm {
  Matrix gram;

  std::size_t dim() const { return gram.rows(); }
  Scalar operator()(const Vector& x, const Vector& y) const;
  bool is_nondegenerate() const;
  Scalar determinant() const;
};

/// gram(i, j) = trace(d_{b_i} d_{b_j}). Throws Errc::NotLie.
BilinearForm killing_form(const LeibnizAlgebra& alg);

/// Largest soluble ideal. Reduces to the Lie quotient by the Leibniz kernel
/// and takes the Killing-orthogonal complement of its derived algebra there.
Subspace soluble_radical(const LeibnizAlgebra& alg);

/// Lie with nondegenerate Killing form. The zero algebra counts as semisimple.
bool is_semisimple(const LeibnizAlgebra& alg);

}  // namespace leibniz
