#include "leibniz/exactlin.hpp"

#include <utility>

namespace leibniz {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotNilpotent: return "NotNilpotent";
    case Errc::NotAnIdeal: return "NotAnIdeal";
    case Errc::NotASubalgebra: return "NotASubalgebra";
    case Errc::NotLie: return "NotLie";
    case Errc::NotReducedCase: return "NotReducedCase";
    case Errc::NoSolution: return "NoSolution";
    case Errc::UnknownName: return "UnknownName";
    case Errc::InvarianceFailed: return "InvarianceFailed";
    case Errc::NotDistinct: return "NotDistinct";
    case Errc::LeibnizViolation: return "LeibnizViolation";
    case Errc::Precondition: return "Precondition";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

void require_same(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(Errc::DimensionMismatch,
                std::string(what) + " (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Vectors

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same(a.size(), b.size(), "vector sum");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  require_same(a.size(), b.size(), "vector difference");
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::span<const Vector> rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same(rows[r].size(), cols, "matrix row length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require_same(cols[c].size(), rows, "matrix column length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  Vector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : entries_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Scalar Matrix::trace() const {
  require_same(rows_, cols_, "trace of non-square matrix");
  Scalar t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  require_same(v.size(), cols_, "matrix-vector product");
  Vector r(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(v[c]) == 0) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, c);
      if (sgn(a) != 0) r[i] += a * v[c];
    }
  }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same(a.rows_, b.rows_, "matrix sum rows");
  require_same(a.cols_, b.cols_, "matrix sum cols");
  Matrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) r.entries_[i] = a.entries_[i] + b.entries_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same(a.rows_, b.rows_, "matrix difference rows");
  require_same(a.cols_, b.cols_, "matrix difference cols");
  Matrix r(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.entries_.size(); ++i) r.entries_[i] = a.entries_[i] - b.entries_[i];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same(a.cols_, b.rows_, "matrix product");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (sgn(y) != 0) r(i, j) += x * y;
      }
    }
  }
  return r;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix r = m;
  for (auto& x : r.entries_) x *= s;
  return r;
}

// ---------------------------------------------------------------------------
// Row reduction

RowEchelon rref(Matrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != lead) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(lead, j));
    }
    const Scalar inv = 1 / m(lead, c);
    for (std::size_t j = c; j < cols; ++j) m(lead, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || sgn(m(r, c)) == 0) continue;
      const Scalar f = m(r, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(m(lead, j)) != 0) m(r, j) -= f * m(lead, j);
      }
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.rank = lead;
  out.reduced = std::move(m);
  return out;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::full(std::size_t ambient_dim) {
  return row_space(Matrix::identity(ambient_dim));
}

Subspace Subspace::span(std::size_t ambient_dim, std::span<const Vector> vectors) {
  return row_space(Matrix::from_rows(ambient_dim, vectors));
}

Subspace Subspace::row_space(const Matrix& rows) {
  RowEchelon e = rref(rows);
  Subspace s(rows.cols());
  Matrix basis(e.rank, rows.cols());
  for (std::size_t r = 0; r < e.rank; ++r)
    for (std::size_t c = 0; c < rows.cols(); ++c) basis(r, c) = e.reduced(r, c);
  s.basis_ = std::move(basis);
  s.pivots_ = std::move(e.pivots);
  return s;
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

Vector Subspace::residual(const Vector& v) const {
  require_same(v.size(), ambient_dim_, "subspace membership");
  Vector w = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    const Scalar f = w[pivots_[r]];
    if (sgn(f) == 0) continue;
    for (std::size_t c = 0; c < ambient_dim_; ++c) {
      if (sgn(basis_(r, c)) != 0) w[c] -= f * basis_(r, c);
    }
  }
  return w;
}

bool Subspace::contains(const Vector& v) const { return leibniz::is_zero(residual(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_same(other.ambient_dim_, ambient_dim_, "subspace inclusion");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_vector(i))) return false;
  }
  return true;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector c(dim());
  for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
  return c;
}

Subspace kernel_basis(const Matrix& m) {
  const RowEchelon e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> vectors;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < e.rank; ++r) v[e.pivots[r]] = -e.reduced(r, f);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(n, vectors);
}

std::optional<AffineSolution> solve_affine(const Matrix& a, const Vector& b) {
  require_same(a.rows(), b.size(), "affine system right-hand side");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const RowEchelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  Vector x(n);
  for (std::size_t r = 0; r < e.rank; ++r) x[e.pivots[r]] = e.reduced(r, n);
  return AffineSolution{std::move(x), kernel_basis(a)};
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  require_same(u.ambient_dim(), v.ambient_dim(), "subspace sum");
  std::vector<Vector> all = u.basis_vectors();
  for (auto& x : v.basis_vectors()) all.push_back(std::move(x));
  return Subspace::span(u.ambient_dim(), all);
}

Subspace subspace_intersection(const Subspace& u, const Subspace& v) {
  require_same(u.ambient_dim(), v.ambient_dim(), "subspace intersection");
  const std::size_t n = u.ambient_dim();
  const std::size_t p = u.dim();
  const std::size_t q = v.dim();
  // Columns are the basis vectors of U followed by those of -V; a kernel
  // vector (a, b) gives a common element sum a_i u_i = sum b_j v_j.
  Matrix stacked(n, p + q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t c = 0; c < n; ++c) stacked(c, i) = u.basis()(i, c);
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t c = 0; c < n; ++c) stacked(c, p + j) = -v.basis()(j, c);
  const Subspace ker = kernel_basis(stacked);
  std::vector<Vector> common;
  for (std::size_t k = 0; k < ker.dim(); ++k) {
    Vector w(n);
    for (std::size_t i = 0; i < p; ++i) {
      const Scalar& a = ker.basis()(k, i);
      if (sgn(a) == 0) continue;
      for (std::size_t c = 0; c < n; ++c) w[c] += a * u.basis()(i, c);
    }
    common.push_back(std::move(w));
  }
  return Subspace::span(n, common);
}

bool subspace_contains(const Subspace& u, const Vector& v) { return u.contains(v); }

// ---------------------------------------------------------------------------
// LinearMap

LinearMap::LinearMap(Matrix m) : matrix_(std::move(m)) {
  require_same(matrix_.rows(), matrix_.cols(), "linear map must be square");
}

LinearMap LinearMap::zero(std::size_t dim) { return LinearMap(Matrix(dim, dim)); }

LinearMap LinearMap::identity(std::size_t dim) { return LinearMap(Matrix::identity(dim)); }

Subspace LinearMap::image_of(const Subspace& u) const {
  require_same(u.ambient_dim(), dim(), "image of subspace");
  std::vector<Vector> images;
  for (std::size_t i = 0; i < u.dim(); ++i) images.push_back((*this)(u.basis_vector(i)));
  return Subspace::span(dim(), images);
}

std::optional<std::size_t> nilpotency_index(const LinearMap& d) {
  const std::size_t n = d.dim();
  if (n == 0) return 0;
  LinearMap power = LinearMap::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * d;
    if (power.is_zero()) return k;
  }
  return std::nullopt;
}

LinearMap exp_nilpotent(const LinearMap& d) {
  const auto k = nilpotency_index(d);
  if (!k) throw Error(Errc::NotNilpotent, "d^dim is nonzero");
  LinearMap sum = LinearMap::identity(d.dim());
  LinearMap term = LinearMap::identity(d.dim());
  for (std::size_t i = 1; i < *k; ++i) {
    term = Scalar(1, static_cast<unsigned long>(i)) * (term * d);
    sum = sum + term;
  }
  return sum;
}

}  // namespace leibniz
