#pragma once

#include <cstddef>
#include <vector>

#include "coalglab/scalar.hpp"

namespace coalglab {

struct RrefResult;

// Dense row-major matrix over the session field. Everything here is a value;
// operations return fresh matrices.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

  static Matrix identity(Field f, std::size_t n);
  static Matrix from_rows(Field f, const std::vector<std::vector<Scalar>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix operator*(const Scalar& s) const;
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  // Kronecker product with lexicographic (left-major) index pairing:
  // entry ((i*b.rows+k), (j*b.cols+l)) = a(i,j) * b(k,l). This pairing is the
  // library-wide convention for all tensor coordinates.
  Matrix kronecker(const Matrix& b) const;

  std::vector<Scalar> row(std::size_t r) const;
  void set_row(std::size_t r, const std::vector<Scalar>& v);
  Matrix rows_slice(std::size_t begin, std::size_t end) const;
  static Matrix vstack(const Matrix& a, const Matrix& b);

  RrefResult rref() const;

  // Basis of the right null space {v : A v = 0}, returned as rows in RREF.
  Matrix kernel_basis() const;

  // Solve A x = b; returns true and writes x when consistent.
  bool solve(const std::vector<Scalar>& b, std::vector<Scalar>& x) const;

  bool invertible() const;
  Matrix inverse() const;

  Scalar trace() const;

  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // A v

 private:
  Field field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> e_;
};

struct RrefResult {
  Matrix mat;
  std::vector<std::size_t> pivots;  // pivot columns, increasing
  std::size_t rank = 0;
};

// v as a 1 x n (row) or n x 1 (column) matrix.
Matrix row_matrix(Field f, const std::vector<Scalar>& v);

}  // namespace coalglab
