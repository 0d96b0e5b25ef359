#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "meshkit/field.hpp"

namespace meshkit {

using Vec = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(GroundField field, std::size_t rows, std::size_t cols);

  static Matrix identity(GroundField field, std::size_t n);
  static Matrix from_rows(GroundField field, std::size_t cols, const std::vector<Vec>& rows);
  // Row-major entries.
  static Matrix from_entries(GroundField field, std::size_t rows, std::size_t cols, const Vec& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const GroundField& field() const { return field_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  const Vec& entries() const { return data_; }
  void set_row(std::size_t i, const Vec& v);
  void append_row(const Vec& v);
  void swap_rows(std::size_t a, std::size_t b);

  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, Matrix a);
  friend bool operator==(const Matrix& a, const Matrix& b);

  // Block placement helpers.
  void set_block(std::size_t r0, std::size_t c0, const Matrix& block);
  Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

  // "rows x cols; e00 e01 ..."
  std::string dump() const;

 private:
  GroundField field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Vec zero_vec(const GroundField& f, std::size_t n);
bool is_zero(const Vec& v);
Vec& axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a x

// Reduced row echelon form with pivot columns. Row reduction is the parallel
// kernel; row_reduce_serial is the reference implementation.
struct Echelon {
  Matrix rref;  // only the nonzero rows are kept
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

Echelon row_reduce(Matrix m);
Echelon row_reduce_serial(Matrix m);

std::size_t rank(const Matrix& m);
// Rows form a basis of {x : m x = 0}; each basis vector is 1 at its own free
// column and 0 at the other free columns.
struct Kernel {
  Matrix basis;
  std::vector<std::size_t> free_columns;
};
Kernel kernel(const Matrix& m);
// Particular solution of m x = b (free variables zero), if consistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);

// A subspace of F^n kept as an RREF basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(GroundField field, std::size_t ambient);
  static Subspace full(GroundField field, std::size_t ambient);
  static Subspace span(GroundField field, std::size_t ambient, const std::vector<Vec>& vectors);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return ech_.pivots.size(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  const Matrix& basis() const { return ech_.rref; }
  const std::vector<std::size_t>& pivots() const { return ech_.pivots; }
  const GroundField& field() const { return field_; }

  // v minus its component along the pivots: zero iff v lies in the subspace.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return meshkit::is_zero(reduce(v)); }
  bool contains(const Subspace& o) const;
  Subspace operator+(const Subspace& o) const;
  friend bool operator==(const Subspace& a, const Subspace& b);

  // Vectors from `larger`'s basis, in order, completing this to `larger`.
  std::vector<Vec> complement_in(const Subspace& larger) const;

 private:
  GroundField field_;
  std::size_t ambient_ = 0;
  Echelon ech_;
};

}  // namespace meshkit
