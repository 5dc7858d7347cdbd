#pragma once

// Test-only builders and oracles. Nothing here calls the routines under test
// on the path it is used to check.

#include <array>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/levi.hpp"
#include "leibniz/random.hpp"

namespace leibniz::testing {

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> rs;
  std::size_t cols = 0;
  for (const auto& r : rows) {
    rs.push_back(vec(r));
    cols = r.size();
  }
  return Matrix::from_rows(cols, rs);
}

inline Subspace span(std::size_t n, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> rs;
  for (const auto& r : rows) rs.push_back(vec(r));
  return Subspace::span(n, rs);
}

/// a a = b, every other product zero (dim 2).
inline LeibnizAlgebra square_algebra() {
  StructureTable t(2);
  t(0, 0, 1) = 1;
  return LeibnizAlgebra({"a", "b"}, std::move(t));
}

inline LeibnizAlgebra abelian(std::size_t n) { return LeibnizAlgebra(default_labels(n), StructureTable(n)); }

/// [x, y] = y.
inline LeibnizAlgebra two_dim_nonabelian() {
  StructureTable t(2);
  t(0, 1, 1) = 1;
  t(1, 0, 1) = -1;
  return LeibnizAlgebra({"x", "y"}, std::move(t));
}

/// sl2 (e, h, f) as a direct sum with a one-dimensional centre z.
inline LeibnizAlgebra gl2_like() {
  StructureTable t(4);
  t(1, 0, 0) = 2;
  t(0, 1, 0) = -2;
  t(1, 2, 2) = -2;
  t(2, 1, 2) = 2;
  t(0, 2, 1) = 1;
  t(2, 0, 1) = -1;
  return LeibnizAlgebra({"e", "h", "f", "z"}, std::move(t));
}

/// sl2 on its two-dimensional natural module: e, h, f as 2x2 matrices.
inline ModuleAction sl2_natural() {
  ModuleAction act;
  act.acting_dim = 3;
  act.space_dim = 2;
  act.rho = {LinearMap(Matrix::from_rows(2, std::vector<Vector>{vec({0, 1}), vec({0, 0})})),
             LinearMap(Matrix::from_rows(2, std::vector<Vector>{vec({1, 0}), vec({0, -1})})),
             LinearMap(Matrix::from_rows(2, std::vector<Vector>{vec({0, 0}), vec({1, 0})}))};
  return act;
}

inline ModuleAction zero_action(std::size_t acting, std::size_t space) {
  ModuleAction act;
  act.acting_dim = acting;
  act.space_dim = space;
  act.rho.assign(acting, LinearMap::zero(space));
  return act;
}

/// Lie semidirect sum S + V with V abelian: [s, m] = rho(s) m = -[m, s].
inline LeibnizAlgebra lie_semidirect(const LeibnizAlgebra& s, const ModuleAction& act) {
  const std::size_t m = s.dim();
  const std::size_t p = act.space_dim;
  StructureTable t(m + p);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) t(i, j, k) = s.table()(i, j, k);
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t k = 0; k < p; ++k) {
        t(i, m + j, m + k) = act.rho[i].matrix()(k, j);
        t(m + j, i, m + k) = -act.rho[i].matrix()(k, j);
      }
  }
  std::vector<std::string> labels = s.labels();
  for (std::size_t j = 0; j < p; ++j) labels.push_back("v" + std::to_string(j));
  return LeibnizAlgebra(std::move(labels), std::move(t));
}

/// sl2 acting on the Heisenberg algebra: natural module on (p, q), trivially
/// on the centre z, with [p, q] = z. The radical is not abelian.
inline LeibnizAlgebra sl2_heisenberg(const LeibnizAlgebra& sl2) {
  StructureTable t(6);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) t(i, j, k) = sl2.table()(i, j, k);
  const ModuleAction nat = sl2_natural();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        t(i, 3 + j, 3 + k) = nat.rho[i].matrix()(k, j);
        t(3 + j, i, 3 + k) = -nat.rho[i].matrix()(k, j);
      }
  t(3, 4, 5) = 1;
  t(4, 3, 5) = -1;
  return LeibnizAlgebra({"e", "h", "f", "p", "q", "z"}, std::move(t));
}

/// Direct sum A + B, A's basis first.
inline LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
  const std::size_t m = a.dim(), n = a.dim() + b.dim();
  StructureTable t(n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) t(i, j, k) = a.table()(i, j, k);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < b.dim(); ++k) t(m + i, m + j, m + k) = b.table()(i, j, k);
  std::vector<std::string> labels = a.labels();
  for (const auto& l : b.labels()) labels.push_back(l);
  return LeibnizAlgebra(std::move(labels), std::move(t));
}

/// Random invertible integer matrix: a product of unit triangular factors
/// with a random permutation, so invertibility is by construction.
inline Matrix random_unimodular(Rng& rng, std::size_t n) {
  Matrix lower = Matrix::identity(n), upper = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      lower(i, j) = rng.small_int(-2, 2);
      upper(j, i) = rng.small_int(-2, 2);
    }
  Matrix perm(n, n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[static_cast<std::size_t>(rng.small_int(0, static_cast<long>(i) - 1))]);
  for (std::size_t i = 0; i < n; ++i) perm(i, order[i]) = 1;
  return perm * lower * upper;
}

/// Brute-force trace of ad x ad y for sl2 computed from 2x2 matrices, with no
/// use of structure constants: ad is obtained by expanding commutators.
inline Scalar sl2_killing_oracle(std::size_t x, std::size_t y) {
  using M2 = std::array<std::array<long, 2>, 2>;
  const std::array<M2, 3> basis = {M2{{{0, 1}, {0, 0}}}, M2{{{1, 0}, {0, -1}}}, M2{{{0, 0}, {1, 0}}}};
  auto comm = [](const M2& a, const M2& b) {
    M2 r{};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) r[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
    return r;
  };
  // coordinates of a traceless matrix in (e, h, f)
  auto coords = [](const M2& m) { return std::array<long, 3>{m[0][1], m[0][0], m[1][0]}; };
  long trace = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto inner = coords(comm(basis[y], basis[k]));
    M2 w{};
    for (std::size_t c = 0; c < 3; ++c)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) w[i][j] += inner[c] * basis[c][i][j];
    trace += coords(comm(basis[x], w))[k];
  }
  return trace;
}

}  // namespace leibniz::testing
