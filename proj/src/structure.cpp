#include "leibniz/structure.hpp"

namespace leibniz {

Subspace leibniz_kernel(const LeibnizAlgebra& alg) {
  const std::size_t n = alg.dim();
  std::vector<Vector> symmetrized;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) symmetrized.push_back(alg.basis_product(i, j) + alg.basis_product(j, i));
  return Subspace::span(n, symmetrized);
}

DerivedSeries derived_series(const LeibnizAlgebra& alg, const Subspace& u) {
  if (!is_subalgebra(alg, u)) throw Error(Errc::NotASubalgebra, "derived series of a non-subalgebra");
  DerivedSeries series;
  series.terms.push_back(u);
  // Dimensions strictly drop until the series stabilizes, so dim + 1 steps suffice.
  for (std::size_t step = 0; step <= alg.dim() && !series.terms.back().is_zero(); ++step) {
    Subspace next = subspace_product(alg, series.terms.back(), series.terms.back());
    const bool stable = next == series.terms.back();
    series.terms.push_back(std::move(next));
    if (stable) break;
  }
  return series;
}

bool is_soluble(const LeibnizAlgebra& alg, const Subspace& u) { return derived_series(alg, u).reaches_zero(); }

Scalar BilinearForm::operator()(const Vector& x, const Vector& y) const {
  const Vector gy = gram.apply(y);
  Scalar s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * gy[i];
  return s;
}

bool BilinearForm::is_nondegenerate() const { return rref(gram).rank == dim(); }

Scalar BilinearForm::determinant() const {
  // Fraction-carrying Gaussian elimination; exact over Q.
  Matrix m = gram;
  const std::size_t n = m.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (sgn(m(r, c)) == 0) continue;
      const Scalar f = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

BilinearForm killing_form(const LeibnizAlgebra& alg) {
  if (!is_lie(alg)) throw Error(Errc::NotLie, "Killing form needs a Lie algebra");
  const std::size_t n = alg.dim();
  std::vector<Matrix> ad;
  ad.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ad.push_back(left_multiplication(alg, unit_vector(n, i)).matrix());
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      // trace(ad_i ad_j) without forming the product
      Scalar t = 0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
          const Scalar& a = ad[i](r, k);
          if (sgn(a) != 0) t += a * ad[j](k, r);
        }
      gram(i, j) = t;
      gram(j, i) = t;
    }
  }
  return BilinearForm{std::move(gram)};
}

Subspace soluble_radical(const LeibnizAlgebra& alg) {
  const std::size_t n = alg.dim();
  const Subspace kernel = leibniz_kernel(alg);
  const Quotient q = quotient(alg, kernel);
  const std::size_t m = q.algebra.dim();
  const Subspace all = Subspace::full(m);
  const Subspace derived = subspace_product(q.algebra, all, all);
  const BilinearForm kappa = killing_form(q.algebra);
  // x is orthogonal to the derived algebra iff (rows of derived) * gram * x = 0.
  const Matrix constraints = derived.basis() * kappa.gram;
  const Subspace lie_radical = kernel_basis(constraints);
  const Subspace result = preimage(q, kernel, lie_radical);
  if (result.ambient_dim() != n) throw Error(Errc::DimensionMismatch, "radical ambient dimension");
  return result;
}

bool is_semisimple(const LeibnizAlgebra& alg) {
  if (!is_lie(alg)) return false;
  return killing_form(alg).is_nondegenerate();
}

}  // namespace leibniz
