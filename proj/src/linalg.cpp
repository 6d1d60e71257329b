#include "thickrep/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "modp.hpp"

namespace thickrep {

namespace {

void require_field(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) throw Error(Errc::FieldMismatch, a.to_string() + " vs " + b.to_string());
}

// RREF over F_p on raw residues; much faster than going through Scalar.
RrefResult rref_prime(const Matrix& m) {
  const FieldSpec& f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::int64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i * cols + j] = static_cast<std::int64_t>(m(i, j).code());
  RrefResult out;
  out.rank = modp::rref(a, rows, cols, f.characteristic(), &out.pivots);
  out.matrix = Matrix(f, rows, cols);
  for (std::size_t i = 0; i < out.rank; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (a[i * cols + j] != 0) out.matrix(i, j) = Scalar::from_code(f, static_cast<std::uint64_t>(a[i * cols + j]));
  return out;
}

RrefResult rref_generic(const Matrix& m) {
  RrefResult out;
  out.matrix = m;
  Matrix& a = out.matrix;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
    const Scalar s = a(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= s;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Scalar t = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= t * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

}  // namespace

Matrix::Matrix(FieldSpec f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(Errc::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < cols; ++j) {
      require_field(f, rows[i][j].field());
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, const std::vector<Vector>& rows) {
  if (rows.empty()) throw Error(Errc::DimensionMismatch, "no rows; column count unknown");
  return from_rows(f, rows, rows[0].size());
}

Matrix Matrix::from_columns(const FieldSpec& f, const std::vector<Vector>& cols, std::size_t rows) {
  return from_rows(f, cols, rows).transpose();
}

Matrix Matrix::from_ints(const FieldSpec& f, const std::vector<std::vector<long long>>& rows) {
  if (rows.empty()) return Matrix(f, 0, 0);
  Matrix m(f, rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw Error(Errc::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = Scalar(f, rows[i][j]);
  }
  return m;
}

Matrix Matrix::diagonal(const FieldSpec& f, const Vector& d) {
  Matrix m(f, d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix out = *this;
  for (Scalar& x : out.data_) x *= c;
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw Error(Errc::DimensionMismatch, "matrix-vector size mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero()) out[i] += a * v[j];
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw Error(Errc::DimensionMismatch, "vstack column mismatch");
  require_field(a.field_, b.field_);
  Matrix out(a.field_, a.rows_ + b.rows_, a.cols_);
  std::copy(a.data_.begin(), a.data_.end(), out.data_.begin());
  std::copy(b.data_.begin(), b.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(a.data_.size()));
  return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw Error(Errc::DimensionMismatch, "hstack row mismatch");
  require_field(a.field_, b.field_);
  Matrix out(a.field_, a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) out(i, a.cols_ + j) = b(i, j);
  }
  return out;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  Matrix out(field_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product size mismatch");
  require_field(a.field_, b.field_);
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::DimensionMismatch, "matrix sum size mismatch");
  require_field(a.field_, b.field_);
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::DimensionMismatch, "matrix difference size mismatch");
  require_field(a.field_, b.field_);
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

RrefResult rref(const Matrix& m) {
  if (m.field().kind() == FieldKind::PrimeField) return rref_prime(m);
  return rref_generic(m);
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::NotSquare, "determinant of a non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Scalar det = Scalar::one(m.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c).is_zero()) ++piv;
    if (piv == n) return Scalar::zero(m.field());
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    const Scalar inv = a(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c).is_zero()) continue;
      const Scalar t = a(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) a(i, j) -= t * a(c, j);
    }
  }
  return det;
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::NotSquare, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const RrefResult r = rref(Matrix::hstack(m, Matrix::identity(m.field(), n)));
  if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) throw Error(Errc::Singular, "matrix is singular");
  std::vector<std::size_t> rows(n), cols(n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i] = i;
    cols[i] = n + i;
  }
  return r.matrix.submatrix(rows, cols);
}

bool solve(const Matrix& m, const Vector& b, Vector& x) {
  if (b.size() != m.rows()) throw Error(Errc::DimensionMismatch, "right-hand side size mismatch");
  Matrix bcol(m.field(), m.rows(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) bcol(i, 0) = b[i];
  const RrefResult r = rref(Matrix::hstack(m, bcol));
  if (r.rank > 0 && r.pivots[r.rank - 1] == m.cols()) return false;
  x = zero_vector(m.field(), m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.matrix(i, m.cols());
  return true;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(FieldSpec f, std::size_t ambient) : ambient_(ambient), basis_(f, 0, ambient) {}

Subspace Subspace::row_space(const Matrix& m) {
  RrefResult r = rref(m);
  Subspace s;
  s.ambient_ = m.cols();
  std::vector<std::size_t> keep(r.rank), all(m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) keep[i] = i;
  for (std::size_t j = 0; j < m.cols(); ++j) all[j] = j;
  s.basis_ = r.matrix.submatrix(keep, all);
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::span(const FieldSpec& f, std::size_t ambient, const std::vector<Vector>& vs) {
  if (vs.empty()) return Subspace(f, ambient);
  return row_space(Matrix::from_rows(f, vs, ambient));
}

Subspace Subspace::full(const FieldSpec& f, std::size_t n) { return row_space(Matrix::identity(f, n)); }

Subspace Subspace::from_canonical(const Matrix& basis) {
  Subspace s;
  s.ambient_ = basis.cols();
  s.basis_ = basis;
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::size_t j = 0;
    while (j < basis.cols() && basis(i, j).is_zero()) ++j;
    s.pivots_.push_back(j);
  }
  return s;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw Error(Errc::AmbientMismatch, "vector length differs from ambient dimension");
  // Reduce against the RREF basis using its pivots; v is inside iff nothing remains.
  Vector r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!basis_(i, j).is_zero()) r[j] -= c * basis_(i, j);
  }
  return is_zero_vector(r);
}

bool Subspace::contains(const Subspace& w) const {
  if (w.ambient_ != ambient_) throw Error(Errc::AmbientMismatch, "ambient dimensions differ");
  if (w.dim() > dim()) return false;
  for (std::size_t i = 0; i < w.dim(); ++i)
    if (!contains(w.basis_.row(i))) return false;
  return true;
}

std::string Subspace::to_string() const { return "span" + basis_.to_string(); }

bool canonical_less(const Subspace& a, const Subspace& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.ambient_dim(); ++j) {
      const Scalar& x = a.basis()(i, j);
      const Scalar& y = b.basis()(i, j);
      if (x == y) continue;
      return canonical_less(x, y);
    }
  return false;
}

Subspace kernel(const Matrix& m) {
  const RrefResult r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(m.field(), n);
    v[free] = Scalar::one(m.field());
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.matrix(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field(), n, basis);
}

Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(Errc::AmbientMismatch, "ambient dimensions differ");
  return Subspace::row_space(Matrix::vstack(a.basis(), b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(Errc::AmbientMismatch, "ambient dimensions differ");
  const FieldSpec& f = a.field();
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace(f, n);
  // x = sum s_i a_i = sum t_j b_j  <=>  (s, t) in ker [A^T | -B^T].
  const Matrix lhs = Matrix::hstack(a.basis().transpose(), b.basis().transpose().scaled(-Scalar::one(f)));
  const Subspace k = kernel(lhs);
  std::vector<Vector> vs;
  for (std::size_t r = 0; r < k.dim(); ++r) {
    Vector x = zero_vector(f, n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const Scalar& s = k.basis()(r, i);
      if (s.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) x[j] += s * a.basis()(i, j);
    }
    vs.push_back(std::move(x));
  }
  return Subspace::span(f, n, vs);
}

bool direct_sum_is_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error(Errc::AmbientMismatch, "ambient dimensions differ");
  if (a.dim() + b.dim() != a.ambient_dim()) return false;
  return rank(Matrix::vstack(a.basis(), b.basis())) == a.ambient_dim();
}

Subspace transform(const Matrix& g, const Subspace& w) {
  if (!g.is_square() || g.cols() != w.ambient_dim())
    throw Error(Errc::AmbientMismatch, "matrix does not act on the subspace ambient");
  if (w.is_zero()) return w;
  return Subspace::row_space(w.basis() * g.transpose());
}

Poly charpoly(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::NotSquare, "charpoly of a non-square matrix");
  const FieldSpec& f = m.field();
  const std::size_t n = m.rows();
  // Coefficients high degree first.
  std::vector<Scalar> poly{Scalar::one(f)};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C.
    std::vector<Scalar> t{Scalar::one(f), -m(r, r)};
    Vector col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Scalar s = Scalar::zero(f);
      for (std::size_t i = 0; i < r; ++i) s += m(r, i) * col[i];
      t.push_back(-s);
      Vector next(r, Scalar::zero(f));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * col[j];
      col = std::move(next);
    }
    std::vector<Scalar> out(r + 2, Scalar::zero(f));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) out[i] += t[i - j] * poly[j];
    poly = std::move(out);
  }
  std::reverse(poly.begin(), poly.end());
  return Poly(f, std::move(poly));
}

Poly minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::NotSquare, "minimal polynomial of a non-square matrix");
  const FieldSpec& f = m.field();
  const std::size_t n = m.rows();
  auto flat = [n](const Matrix& a) {
    Vector v;
    v.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v.push_back(a(i, j));
    return v;
  };
  std::vector<Vector> powers{flat(Matrix::identity(f, n))};
  Matrix power = Matrix::identity(f, n);
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * m;
    const Vector target = flat(power);
    Vector coeffs;
    if (solve(Matrix::from_columns(f, powers, n * n), target, coeffs)) {
      std::vector<Scalar> cs;
      for (const Scalar& c : coeffs) cs.push_back(-c);
      cs.push_back(Scalar::one(f));
      return Poly(f, std::move(cs));
    }
    powers.push_back(target);
  }
  return charpoly(m);  // unreachable by Cayley-Hamilton
}

// ---------------------------------------------------------------------------

Vector EchelonBasis::reduce(Vector v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar c = v[pivots_[i]];
    if (c.is_zero()) continue;
    const Vector& r = rows_[i];
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!r[j].is_zero()) v[j] -= c * r[j];
  }
  return v;
}

bool EchelonBasis::add(const Vector& v) {
  if (v.size() != ambient_) throw Error(Errc::DimensionMismatch, "vector length differs from ambient dimension");
  Vector r = reduce(v);
  std::size_t piv = 0;
  while (piv < ambient_ && r[piv].is_zero()) ++piv;
  if (piv == ambient_) return false;
  const Scalar inv = r[piv].inverse();
  for (Scalar& x : r) x *= inv;
  for (Vector& old : rows_) {
    const Scalar c = old[piv];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!r[j].is_zero()) old[j] -= c * r[j];
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(piv);
  return true;
}

bool EchelonBasis::contains(const Vector& v) const { return is_zero_vector(reduce(v)); }

Subspace EchelonBasis::subspace() const { return Subspace::span(field_, ambient_, rows_); }

// ---------------------------------------------------------------------------

Scalar random_scalar(const FieldSpec& f, Rng& rng, long long bound) {
  if (f.is_finite()) return Scalar::from_code(f, draw_below(rng, f.order()));
  return Scalar(f, draw_between(rng, -bound, bound));
}

Vector random_vector(const FieldSpec& f, std::size_t n, Rng& rng, long long bound) {
  Vector v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(f, rng, bound));
  return v;
}

Matrix random_matrix(const FieldSpec& f, std::size_t rows, std::size_t cols, Rng& rng, long long bound) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(f, rng, bound);
  return m;
}

Matrix random_invertible(const FieldSpec& f, std::size_t n, Rng& rng, long long bound) {
  for (;;) {
    Matrix m = random_matrix(f, n, n, rng, bound);
    if (is_invertible(m)) return m;
  }
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace thickrep
