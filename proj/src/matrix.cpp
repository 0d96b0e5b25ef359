#include "meshkit/matrix.hpp"

#include <cstddef>
#include <sstream>
#include <utility>

#include "meshkit/errors.hpp"

namespace meshkit {

Matrix::Matrix(GroundField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(GroundField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(GroundField field, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Matrix Matrix::from_entries(GroundField field, std::size_t rows, std::size_t cols, const Vec& entries) {
  if (entries.size() != rows * cols) throw DimMismatch("expected " + std::to_string(rows * cols) + " entries");
  Matrix m(field, rows, cols);
  for (std::size_t k = 0; k < entries.size(); ++k) m.data_[k] = field.zero() + entries[k];
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw DimMismatch("row length");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
}

void Matrix::append_row(const Vec& v) {
  if (v.size() != cols_) throw DimMismatch("row length");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimMismatch("matrix sum shapes");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimMismatch("matrix difference shapes");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw DimMismatch("product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " and " +
                      std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += x * b(k, j);
    }
  return c;
}

Matrix operator*(const Scalar& c, Matrix a) {
  for (auto& x : a.data_) x *= c;
  return a;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t k = 0; k < a.data_.size(); ++k)
    if (!(a.data_[k] == b.data_[k])) return false;
  return true;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& block) {
  if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_) throw DimMismatch("block out of range");
  for (std::size_t i = 0; i < block.rows_; ++i)
    for (std::size_t j = 0; j < block.cols_; ++j) (*this)(r0 + i, c0 + j) = block(i, j);
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw DimMismatch("block out of range");
  Matrix b(field_, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

std::string Matrix::dump() const {
  std::ostringstream os;
  os << rows_ << " x " << cols_ << ";";
  for (const auto& x : data_) os << ' ' << x.str();
  return os.str();
}

Vec zero_vec(const GroundField& f, std::size_t n) { return Vec(n, f.zero()); }

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec& axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (y.size() != x.size()) throw DimMismatch("axpy lengths");
  if (a.is_zero()) return y;
  for (std::size_t k = 0; k < y.size(); ++k)
    if (!x[k].is_zero()) y[k] += a * x[k];
  return y;
}

namespace {

constexpr std::size_t kParallelWork = 2048;

Echelon reduce_impl(Matrix m, bool parallel) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    m.swap_rows(p, r);
    const Scalar inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
    const auto n = static_cast<std::ptrdiff_t>(rows);
    const bool wide = parallel && rows * (cols - c) >= kParallelWork;
#pragma omp parallel for schedule(static) if (wide)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (ui == r || m(ui, c).is_zero()) continue;
      const Scalar factor = m(ui, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(ui, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Echelon e;
  e.rref = m.block(0, 0, r, cols);
  e.pivots = std::move(pivots);
  return e;
}

}  // namespace

Echelon row_reduce(Matrix m) { return reduce_impl(std::move(m), true); }
Echelon row_reduce_serial(Matrix m) { return reduce_impl(std::move(m), false); }

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

Kernel kernel(const Matrix& m) {
  const GroundField f = m.field();
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  Kernel k;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) k.free_columns.push_back(c);
  k.basis = Matrix(f, k.free_columns.size(), m.cols());
  for (std::size_t b = 0; b < k.free_columns.size(); ++b) {
    const std::size_t fc = k.free_columns[b];
    k.basis(b, fc) = f.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) k.basis(b, e.pivots[r]) = -e.rref(r, fc);
  }
  return k;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimMismatch("solve: right-hand side length");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
  Echelon e = row_reduce(aug);
  Vec x = zero_vec(m.field(), m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.rref(r, m.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(m.field(), n));
  Echelon e = row_reduce(aug);
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.rref.block(0, n, n, n);
}

Subspace::Subspace(GroundField field, std::size_t ambient) : field_(field), ambient_(ambient) {
  ech_.rref = Matrix(field, 0, ambient);
}

Subspace Subspace::full(GroundField field, std::size_t ambient) {
  Subspace s(field, ambient);
  s.ech_.rref = Matrix::identity(field, ambient);
  for (std::size_t c = 0; c < ambient; ++c) s.ech_.pivots.push_back(c);
  return s;
}

Subspace Subspace::span(GroundField field, std::size_t ambient, const std::vector<Vec>& vectors) {
  Subspace s(field, ambient);
  if (vectors.empty()) return s;
  s.ech_ = row_reduce(Matrix::from_rows(field, ambient, vectors));
  return s;
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != ambient_) throw DimMismatch("subspace ambient dimension");
  for (std::size_t r = 0; r < ech_.pivots.size(); ++r) {
    const std::size_t c = ech_.pivots[r];
    if (v[c].is_zero()) continue;
    const Scalar a = -v[c];
    for (std::size_t j = c; j < ambient_; ++j)
      if (!ech_.rref(r, j).is_zero()) v[j] += a * ech_.rref(r, j);
  }
  return v;
}

bool Subspace::contains(const Subspace& o) const {
  for (std::size_t r = 0; r < o.dim(); ++r)
    if (!contains(o.ech_.rref.row(r))) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& o) const {
  if (ambient_ != o.ambient_) throw DimMismatch("subspace sum");
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < dim(); ++r) rows.push_back(ech_.rref.row(r));
  for (std::size_t r = 0; r < o.dim(); ++r) rows.push_back(o.ech_.rref.row(r));
  return span(field_, ambient_, rows);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.ech_.pivots == b.ech_.pivots && a.ech_.rref == b.ech_.rref;
}

std::vector<Vec> Subspace::complement_in(const Subspace& larger) const {
  std::vector<Vec> out;
  Subspace cur = *this;
  for (std::size_t r = 0; r < larger.dim(); ++r) {
    Vec v = larger.ech_.rref.row(r);
    if (cur.contains(v)) continue;
    out.push_back(v);
    cur = cur + span(field_, ambient_, {v});
  }
  return out;
}

}  // namespace meshkit
