#include "leibniz/algebra.hpp"

#include <cstdint>
#include <cstdio>
#include <utility>

namespace leibniz {

namespace {

void require_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw Error(Errc::DimensionMismatch,
                std::string(what) + " has length " + std::to_string(got) + ", expected " + std::to_string(want));
  }
}

// sum_k coeffs[k] * rows[k]
Vector combine(const Vector& coeffs, const std::vector<Vector>& rows, std::size_t n) {
  Vector out(n);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (sgn(coeffs[k]) == 0) continue;
    for (std::size_t m = 0; m < n; ++m) {
      if (sgn(rows[k][m]) != 0) out[m] += coeffs[k] * rows[k][m];
    }
  }
  return out;
}

}  // namespace

Vector StructureTable::product_of_basis(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = (*this)(i, j, k);
  return v;
}

void StructureTable::set_product(std::size_t i, std::size_t j, const Vector& value) {
  require_dim(value.size(), dim_, "product value");
  for (std::size_t k = 0; k < dim_; ++k) (*this)(i, j, k) = value[k];
}

ViolationReport check_left_leibniz(const StructureTable& table) {
  const std::size_t n = table.dim();
  // products[i * n + j] = b_i b_j
  std::vector<Vector> products;
  products.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) products.push_back(table.product_of_basis(i, j));

  auto left_of = [&](std::size_t a) {
    std::vector<Vector> rows(n);
    for (std::size_t k = 0; k < n; ++k) rows[k] = products[a * n + k];
    return rows;
  };
  std::vector<std::vector<Vector>> left(n);  // left[a][k] = b_a b_k
  for (std::size_t a = 0; a < n; ++a) left[a] = left_of(a);
  std::vector<std::vector<Vector>> right(n);  // right[c][k] = b_k b_c
  for (std::size_t c = 0; c < n; ++c) {
    right[c].resize(n);
    for (std::size_t k = 0; k < n; ++k) right[c][k] = products[k * n + c];
  }

  ViolationReport report;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        Vector lhs = combine(products[b * n + c], left[a], n);
        Vector rhs = combine(products[a * n + b], right[c], n) + combine(products[a * n + c], left[b], n);
        if (lhs != rhs) report.violations.push_back({a, b, c, std::move(lhs), std::move(rhs)});
      }
    }
  }
  return report;
}

LeibnizAlgebra::LeibnizAlgebra(std::vector<std::string> labels, StructureTable table, NoCheck)
    : labels_(std::move(labels)), table_(std::move(table)) {
  require_dim(labels_.size(), table_.dim(), "label list");
}

LeibnizAlgebra::LeibnizAlgebra(std::vector<std::string> labels, StructureTable table)
    : LeibnizAlgebra(std::move(labels), std::move(table), NoCheck{}) {
  const ViolationReport report = leibniz::check_left_leibniz(table_);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw Error(Errc::LeibnizViolation, "left Leibniz identity fails on (" + labels_[v.a] + ", " +
                                            labels_[v.b] + ", " + labels_[v.c] + ")");
  }
}

LeibnizAlgebra LeibnizAlgebra::unchecked(std::vector<std::string> labels, StructureTable table) {
  return LeibnizAlgebra(std::move(labels), std::move(table), NoCheck{});
}

std::vector<std::string> default_labels(std::size_t dim, const std::string& prefix) {
  std::vector<std::string> out;
  out.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

Vector product(const LeibnizAlgebra& alg, const Vector& x, const Vector& y) {
  const std::size_t n = alg.dim();
  require_dim(x.size(), n, "left factor");
  require_dim(y.size(), n, "right factor");
  const StructureTable& t = alg.table();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = t(i, j, k);
        if (sgn(c) != 0) out[k] += w * c;
      }
    }
  }
  return out;
}

ViolationReport check_left_leibniz(const LeibnizAlgebra& alg) { return check_left_leibniz(alg.table()); }

bool is_lie(const LeibnizAlgebra& alg) {
  const std::size_t n = alg.dim();
  const StructureTable& t = alg.table();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (t(i, j, k) != -t(j, i, k)) return false;
  return true;
}

LinearMap left_multiplication(const LeibnizAlgebra& alg, const Vector& a) {
  const std::size_t n = alg.dim();
  require_dim(a.size(), n, "multiplier");
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector col = product(alg, a, unit_vector(n, j));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return LinearMap(std::move(m));
}

LinearMap right_multiplication(const LeibnizAlgebra& alg, const Vector& a) {
  const std::size_t n = alg.dim();
  require_dim(a.size(), n, "multiplier");
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector col = product(alg, unit_vector(n, j), a);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return LinearMap(std::move(m));
}

Subspace subspace_product(const LeibnizAlgebra& alg, const Subspace& u, const Subspace& v) {
  require_dim(u.ambient_dim(), alg.dim(), "left subspace");
  require_dim(v.ambient_dim(), alg.dim(), "right subspace");
  std::vector<Vector> products;
  const auto us = u.basis_vectors();
  const auto vs = v.basis_vectors();
  for (const auto& x : us)
    for (const auto& y : vs) products.push_back(product(alg, x, y));
  return Subspace::span(alg.dim(), products);
}

namespace {

bool products_inside(const LeibnizAlgebra& alg, const Subspace& left, const Subspace& right,
                     const Subspace& target) {
  const auto ls = left.basis_vectors();
  const auto rs = right.basis_vectors();
  for (const auto& x : ls)
    for (const auto& y : rs)
      if (!target.contains(product(alg, x, y))) return false;
  return true;
}

}  // namespace

bool is_subalgebra(const LeibnizAlgebra& alg, const Subspace& u) {
  require_dim(u.ambient_dim(), alg.dim(), "subspace");
  return products_inside(alg, u, u, u);
}

bool is_left_ideal(const LeibnizAlgebra& alg, const Subspace& u) {
  require_dim(u.ambient_dim(), alg.dim(), "subspace");
  return products_inside(alg, Subspace::full(alg.dim()), u, u);
}

bool is_ideal(const LeibnizAlgebra& alg, const Subspace& u) {
  require_dim(u.ambient_dim(), alg.dim(), "subspace");
  const Subspace all = Subspace::full(alg.dim());
  return products_inside(alg, all, u, u) && products_inside(alg, u, all, u);
}

Quotient quotient(const LeibnizAlgebra& alg, const Subspace& ideal) {
  if (!is_ideal(alg, ideal)) throw Error(Errc::NotAnIdeal, "quotient requires a two-sided ideal");
  const std::size_t n = alg.dim();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ideal.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> kept;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) kept.push_back(c);
  const std::size_t q = kept.size();

  Matrix section(n, q);
  for (std::size_t t = 0; t < q; ++t) section(kept[t], t) = 1;
  Matrix projection(q, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vector r = ideal.residual(unit_vector(n, j));
    for (std::size_t t = 0; t < q; ++t) projection(t, j) = r[kept[t]];
  }

  StructureTable table(q);
  std::vector<std::string> labels;
  for (std::size_t s = 0; s < q; ++s) {
    labels.push_back(alg.labels()[kept[s]]);
    for (std::size_t t = 0; t < q; ++t)
      table.set_product(s, t, projection.apply(alg.basis_product(kept[s], kept[t])));
  }
  return Quotient{LeibnizAlgebra::unchecked(std::move(labels), std::move(table)), std::move(projection),
                  std::move(section)};
}

Restriction restrict_to(const LeibnizAlgebra& alg, const Subspace& u) {
  if (!is_subalgebra(alg, u)) throw Error(Errc::NotASubalgebra, "restriction requires a subalgebra");
  const std::size_t m = u.dim();
  const auto basis = u.basis_vectors();
  StructureTable table(m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t s = 0; s < m; ++s) table.set_product(r, s, *u.coordinates(product(alg, basis[r], basis[s])));
  return Restriction{LeibnizAlgebra::unchecked(default_labels(m, "u"), std::move(table)), u.basis().transpose()};
}

LeibnizAlgebra change_basis(const LeibnizAlgebra& alg, const Matrix& change) {
  const std::size_t n = alg.dim();
  if (change.rows() != n || change.cols() != n)
    throw Error(Errc::DimensionMismatch, "basis change must be square of the algebra dimension");
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = change(i, j);
    aug(i, n + i) = 1;
  }
  const RowEchelon e = rref(std::move(aug));
  if (e.rank < n || (n > 0 && e.pivots[n - 1] != n - 1))
    throw Error(Errc::Precondition, "basis change is singular");
  Matrix inverse(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inverse(i, j) = e.reduced(i, n + j);

  std::vector<Vector> cols(n);
  for (std::size_t i = 0; i < n; ++i) cols[i] = change.column(i);
  StructureTable table(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table.set_product(i, j, inverse.apply(product(alg, cols[i], cols[j])));
  return LeibnizAlgebra::unchecked(default_labels(n, "v"), std::move(table));
}

Subspace map_subspace(const Matrix& map, const Subspace& u) {
  if (map.cols() != u.ambient_dim()) throw Error(Errc::DimensionMismatch, "map does not act on subspace");
  std::vector<Vector> images;
  for (std::size_t i = 0; i < u.dim(); ++i) images.push_back(map.apply(u.basis_vector(i)));
  return Subspace::span(map.rows(), images);
}

Subspace preimage(const Quotient& q, const Subspace& ideal, const Subspace& u) {
  return subspace_sum(ideal, map_subspace(q.section, u));
}

std::string digest(const LeibnizAlgebra& alg) {
  std::string text = "dim " + std::to_string(alg.dim()) + "\n";
  for (const auto& l : alg.labels()) text += l + "\n";
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = alg.table()(i, j, k);
        if (sgn(c) != 0)
          text += std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(k) + " " + to_string(c) + "\n";
      }
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace leibniz
