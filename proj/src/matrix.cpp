#include "coalglab/matrix.hpp"

#include <algorithm>

namespace coalglab {

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<Scalar>>& rows) {
  std::size_t nc = rows.empty() ? 0 : rows[0].size();
  Matrix m(f, rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw input_error("Matrix: ragged rows");
    for (std::size_t c = 0; c < nc; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw input_error("Matrix: shape mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw input_error("Matrix: shape mismatch");
  Matrix r = a;
  for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& s : r.e_) s = -s;
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw input_error("Matrix: product shape mismatch");
  Matrix r(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Matrix Matrix::operator*(const Scalar& s) const {
  Matrix r = *this;
  for (auto& x : r.e_) x *= s;
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.e_ == b.e_;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(field_, rows_);
}

Matrix Matrix::kronecker(const Matrix& b) const {
  Matrix r(field_, rows_ * b.rows_, cols_ * b.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& aij = at(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l) {
          const Scalar& bkl = b.at(k, l);
          if (!bkl.is_zero()) r.at(i * b.rows_ + k, j * b.cols_ + l) = aij * bkl;
        }
    }
  return r;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  return std::vector<Scalar>(e_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                             e_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::set_row(std::size_t r, const std::vector<Scalar>& v) {
  if (v.size() != cols_) throw input_error("Matrix: row size mismatch");
  for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

Matrix Matrix::rows_slice(std::size_t begin, std::size_t end) const {
  Matrix r(field_, end - begin, cols_);
  for (std::size_t i = begin; i < end; ++i)
    for (std::size_t c = 0; c < cols_; ++c) r.at(i - begin, c) = at(i, c);
  return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ == 0) return b;
  if (b.rows_ == 0) return a;
  if (a.cols_ != b.cols_) throw input_error("Matrix: vstack width mismatch");
  Matrix r(a.field_, a.rows_ + b.rows_, a.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t c = 0; c < a.cols_; ++c) r.at(i, c) = a.at(i, c);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t c = 0; c < b.cols_; ++c) r.at(a.rows_ + i, c) = b.at(i, c);
  return r;
}

RrefResult Matrix::rref() const {
  RrefResult out;
  out.mat = *this;
  Matrix& m = out.mat;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t piv = rows_;
    for (std::size_t r = rank; r < rows_; ++r)
      if (!m.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv == rows_) continue;
    if (piv != rank)
      for (std::size_t c = 0; c < cols_; ++c) std::swap(m.at(piv, c), m.at(rank, c));
    Scalar inv = m.at(rank, col).inverse();
    for (std::size_t c = col; c < cols_; ++c) m.at(rank, c) *= inv;
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == rank || m.at(r, col).is_zero()) continue;
      Scalar f = m.at(r, col);
      for (std::size_t c = col; c < cols_; ++c) m.at(r, c) -= f * m.at(rank, c);
    }
    out.pivots.push_back(col);
    ++rank;
  }
  out.rank = rank;
  return out;
}

Matrix Matrix::kernel_basis() const {
  RrefResult rr = rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(field_, free_cols.size(), cols_);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t f = free_cols[k];
    basis.at(k, f) = Scalar::one(field_);
    for (std::size_t i = 0; i < rr.rank; ++i) basis.at(k, rr.pivots[i]) = -rr.mat.at(i, f);
  }
  return basis.rref().mat;  // canonical form
}

bool Matrix::solve(const std::vector<Scalar>& b, std::vector<Scalar>& x) const {
  if (b.size() != rows_) throw input_error("Matrix: solve rhs size mismatch");
  Matrix aug(field_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  RrefResult rr = aug.rref();
  for (std::size_t p : rr.pivots)
    if (p == cols_) return false;  // inconsistent
  x.assign(cols_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) x[rr.pivots[i]] = rr.mat.at(i, cols_);
  return true;
}

bool Matrix::invertible() const {
  return rows_ == cols_ && rref().rank == rows_;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw input_error("Matrix: inverse of non-square");
  Matrix aug(field_, rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = Scalar::one(field_);
  }
  RrefResult rr = aug.rref();
  if (rr.rank != rows_ || rr.pivots.back() >= cols_)
    throw std::domain_error("Matrix: singular");
  Matrix inv(field_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = rr.mat.at(i, cols_ + j);
  return inv;
}

Scalar Matrix::trace() const {
  Scalar t = Scalar::zero(field_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw input_error("Matrix: apply size mismatch");
  std::vector<Scalar> r(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

Matrix row_matrix(Field f, const std::vector<Scalar>& v) {
  Matrix m(f, 1, v.size());
  for (std::size_t c = 0; c < v.size(); ++c) m.at(0, c) = v[c];
  return m;
}

}  // namespace coalglab
