#include "leibniz/constructions.hpp"

#include <array>
#include <stdexcept>

#include "leibniz/structure.hpp"

namespace leibniz {

namespace {

using Mat3 = std::array<std::array<long, 3>, 3>;

Mat3 commutator(const Mat3& a, const Mat3& b) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
  return r;
}

LeibnizAlgebra make_sl2() {
  StructureTable t(3);
  // e = 0, h = 1, f = 2
  t(1, 0, 0) = 2;
  t(0, 1, 0) = -2;
  t(1, 2, 2) = -2;
  t(2, 1, 2) = 2;
  t(0, 2, 1) = 1;
  t(2, 0, 1) = -1;
  return LeibnizAlgebra({"e", "h", "f"}, std::move(t));
}

LeibnizAlgebra make_so3() {
  StructureTable t(3);
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    const std::size_t k = (i + 2) % 3;
    t(i, j, k) = 1;
    t(j, i, k) = -1;
  }
  return LeibnizAlgebra({"x", "y", "z"}, std::move(t));
}

LeibnizAlgebra make_sl3() {
  auto unit = [](int i, int j) {
    Mat3 m{};
    m[i][j] = 1;
    return m;
  };
  auto diff = [](Mat3 a, const Mat3& b) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a[i][j] -= b[i][j];
    return a;
  };
  const std::array<Mat3, 8> basis = {unit(0, 1), unit(1, 2), unit(0, 2), diff(unit(0, 0), unit(1, 1)),
                                     diff(unit(1, 1), unit(2, 2)), unit(1, 0), unit(2, 1), unit(2, 0)};
  // diag(a, b - a, -b) = a h1 + b h2
  auto coords = [](const Mat3& m) {
    Vector v(8);
    v[0] = m[0][1];
    v[1] = m[1][2];
    v[2] = m[0][2];
    v[3] = m[0][0];
    v[4] = -m[2][2];
    v[5] = m[1][0];
    v[6] = m[2][1];
    v[7] = m[2][0];
    return v;
  };
  StructureTable t(8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) t.set_product(i, j, coords(commutator(basis[i], basis[j])));
  return LeibnizAlgebra({"e1", "e2", "e3", "h1", "h2", "f1", "f2", "f3"}, std::move(t));
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"sl2", "sl3", "so3"};
  return names;
}

LeibnizAlgebra simple_algebra(std::string_view name) {
  if (name == "sl2") return make_sl2();
  if (name == "so3") return make_so3();
  if (name == "sl3") return make_sl3();
  throw Error(Errc::UnknownName, "no catalog algebra named '" + std::string(name) + "'");
}

ModuleAction adjoint_module(const LeibnizAlgebra& alg) {
  if (!is_lie(alg)) throw Error(Errc::NotLie, "adjoint module of a non-Lie algebra");
  ModuleAction act;
  act.acting_dim = alg.dim();
  act.space_dim = alg.dim();
  for (std::size_t i = 0; i < alg.dim(); ++i) act.rho.push_back(left_multiplication(alg, unit_vector(alg.dim(), i)));
  return act;
}

LeibnizAlgebra split_extension_zero_right(const LeibnizAlgebra& s, const ModuleAction& act) {
  if (act.acting_dim != s.dim()) throw Error(Errc::Precondition, "action is for an algebra of another dimension");
  if (!is_lie(s)) throw Error(Errc::Precondition, "acting algebra must be Lie");
  if (!is_left_module(s, act)) throw Error(Errc::Precondition, "action violates the left module law");
  const std::size_t m = s.dim();
  const std::size_t p = act.space_dim;
  StructureTable t(m + p);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) t(i, j, k) = s.table()(i, j, k);
    const Matrix& rho = act.rho[i].matrix();
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t k = 0; k < p; ++k) t(i, m + j, m + k) = rho(k, j);
  }
  std::vector<std::string> labels = s.labels();
  for (std::size_t j = 0; j < p; ++j) labels.push_back(p == m ? s.labels()[j] + "'" : "m" + std::to_string(j));
  return LeibnizAlgebra(std::move(labels), std::move(t));
}

Subspace diagonal_complement(const CounterexampleBundle& bundle, const Scalar& lambda) {
  const std::size_t m = bundle.block_dim;
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < m; ++i) {
    Vector v(2 * m);
    v[i] = 1;
    v[m + i] = lambda;
    rows.push_back(std::move(v));
  }
  return Subspace::span(2 * m, rows);
}

CounterexampleBundle counterexample(std::string_view name) {
  const LeibnizAlgebra s = simple_algebra(name);
  const std::size_t m = s.dim();
  const std::size_t n = 2 * m;
  CounterexampleBundle b;
  b.algebra = split_extension_zero_right(s, adjoint_module(s));
  b.block_dim = m;
  std::vector<Vector> first, second;
  for (std::size_t i = 0; i < m; ++i) {
    first.push_back(unit_vector(n, i));
    second.push_back(unit_vector(n, m + i));
  }
  b.first_block = Subspace::span(n, first);
  b.kernel = Subspace::span(n, second);
  b.prime_map = Matrix(n, n);
  for (std::size_t i = 0; i < m; ++i) b.prime_map(m + i, i) = 1;
  b.diagonal = diagonal_complement(b, 1);

  auto fail = [&](const std::string& what) {
    throw std::logic_error("counterexample(" + std::string(name) + "): " + what);
  };
  if (leibniz_kernel(b.algebra) != b.kernel) fail("Leibniz kernel is not the second block");
  if (!verify_levi(b.algebra, b.first_block).all()) fail("first block is not a Levi complement");
  if (!verify_levi(b.algebra, b.diagonal).all()) fail("diagonal is not a Levi complement");
  if (b.first_block == b.diagonal) fail("complements coincide");
  // (s, s')(t, t') = (st, (st)')
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Vector x = unit_vector(n, i) + b.prime_map.apply(unit_vector(n, i));
      const Vector y = unit_vector(n, j) + b.prime_map.apply(unit_vector(n, j));
      Vector st(n);
      for (std::size_t k = 0; k < m; ++k) st[k] = s.table()(i, j, k);
      if (product(b.algebra, x, y) != st + b.prime_map.apply(st)) fail("diagonal product law");
    }
  }
  return b;
}

std::vector<Matrix> equivariant_hom_basis(const ModuleAction& from, const ModuleAction& to) {
  if (from.acting_dim != to.acting_dim || from.rho.size() != to.rho.size())
    throw Error(Errc::Precondition, "modules for different acting algebras");
  const std::size_t p1 = from.space_dim;
  const std::size_t p2 = to.space_dim;
  // Unknown phi(a, b) at index a * p1 + b; equation (x, a, c):
  // sum_b phi(a, b) rho1_x(b, c) - sum_d rho2_x(a, d) phi(d, c) = 0
  Matrix system(from.rho.size() * p2 * p1, p2 * p1);
  std::size_t row = 0;
  for (std::size_t x = 0; x < from.rho.size(); ++x) {
    const Matrix& r1 = from.rho[x].matrix();
    const Matrix& r2 = to.rho[x].matrix();
    for (std::size_t a = 0; a < p2; ++a) {
      for (std::size_t c = 0; c < p1; ++c, ++row) {
        for (std::size_t b = 0; b < p1; ++b) system(row, a * p1 + b) += r1(b, c);
        for (std::size_t d = 0; d < p2; ++d) system(row, d * p1 + c) -= r2(a, d);
      }
    }
  }
  const Subspace solutions = kernel_basis(system);
  std::vector<Matrix> out;
  for (std::size_t s = 0; s < solutions.dim(); ++s) {
    Matrix phi(p2, p1);
    for (std::size_t a = 0; a < p2; ++a)
      for (std::size_t b = 0; b < p1; ++b) phi(a, b) = solutions.basis()(s, a * p1 + b);
    out.push_back(std::move(phi));
  }
  return out;
}

}  // namespace leibniz
