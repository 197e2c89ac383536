#pragma once

#include <cstddef>
#include <vector>

#include "certalg/error.hpp"
#include "certalg/field.hpp"

namespace certalg {

// Dense matrix over an exact field. Row-major storage, immutable in spirit:
// mutating helpers are private to the elimination routines.
template <class K>
class DenseMatrix {
 public:
  using Elem = typename K::Elem;

  DenseMatrix() : field_(), rows_(0), cols_(0) {}
  DenseMatrix(K field, size_t rows, size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols),
        data_(rows * cols, field_.zero()) {}

  static DenseMatrix identity(K field, size_t n) {
    DenseMatrix m(field, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = m.field_.one();
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const K& field() const { return field_; }

  Elem& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const Elem& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
    for (size_t i = 0; i < data_.size(); ++i)
      if (!field_.eq(data_[i], o.data_[i])) return false;
    return true;
  }
  bool operator!=(const DenseMatrix& o) const { return !(*this == o); }

  DenseMatrix operator*(const DenseMatrix& o) const {
    if (cols_ != o.rows_ || field_ != o.field_) throw ArityMismatch("matrix product");
    DenseMatrix r(field_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t k = 0; k < cols_; ++k) {
        const Elem& a = at(i, k);
        if (field_.is_zero(a)) continue;
        for (size_t j = 0; j < o.cols_; ++j)
          r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, o.at(k, j)));
      }
    return r;
  }

  DenseMatrix operator+(const DenseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ArityMismatch("matrix sum");
    DenseMatrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.add(r.data_[i], o.data_[i]);
    return r;
  }

  DenseMatrix scaled(const Elem& c) const {
    DenseMatrix r = *this;
    for (auto& v : r.data_) v = field_.mul(v, c);
    return r;
  }

  DenseMatrix transpose() const {
    DenseMatrix r(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!field_.is_zero(v)) return false;
    return true;
  }

  // True when this == c * Id for some c (c may be zero only if the matrix is 0).
  bool is_scalar(Elem* c_out = nullptr) const {
    if (rows_ != cols_ || rows_ == 0) return false;
    const Elem c = at(0, 0);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) {
        const Elem want = (i == j) ? c : field_.zero();
        if (!field_.eq(at(i, j), want)) return false;
      }
    if (c_out) *c_out = c;
    return true;
  }

  // Reduced row echelon form; returns pivot column indices.
  std::vector<size_t> rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
      size_t sel = row;
      while (sel < rows_ && field_.is_zero(at(sel, col))) ++sel;
      if (sel == rows_) continue;
      if (sel != row)
        for (size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(row, j));
      const Elem pinv = field_.inv(at(row, col));
      for (size_t j = col; j < cols_; ++j) at(row, j) = field_.mul(at(row, j), pinv);
      for (size_t i = 0; i < rows_; ++i) {
        if (i == row || field_.is_zero(at(i, col))) continue;
        const Elem f = at(i, col);
        for (size_t j = col; j < cols_; ++j)
          at(i, j) = field_.sub(at(i, j), field_.mul(f, at(row, j)));
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  size_t rank() const {
    DenseMatrix m = *this;
    return m.rref().size();
  }

  // Basis of the right kernel { v : M v = 0 }, in reduced echelon form: one
  // vector per free column, with a 1 in that column and zeros in the other
  // free columns. Deterministic.
  std::vector<std::vector<Elem>> kernel() const {
    DenseMatrix m = *this;
    const std::vector<size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Elem>> basis;
    for (size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Elem> v(cols_, field_.zero());
      v[free] = field_.one();
      for (size_t r = 0; r < pivots.size(); ++r)
        v[pivots[r]] = field_.neg(m.at(r, free));
      basis.push_back(std::move(v));
    }
    return basis;
  }

  Elem det() const {
    if (rows_ != cols_) throw ArityMismatch("determinant of non-square matrix");
    DenseMatrix m = *this;
    Elem d = field_.one();
    size_t row = 0;
    for (size_t col = 0; col < cols_; ++col) {
      size_t sel = row;
      while (sel < rows_ && field_.is_zero(m.at(sel, col))) ++sel;
      if (sel == rows_) return field_.zero();
      if (sel != row) {
        for (size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(row, j));
        d = field_.neg(d);
      }
      d = field_.mul(d, m.at(row, col));
      const Elem pinv = field_.inv(m.at(row, col));
      for (size_t i = row + 1; i < rows_; ++i) {
        if (field_.is_zero(m.at(i, col))) continue;
        const Elem f = field_.mul(m.at(i, col), pinv);
        for (size_t j = col; j < cols_; ++j)
          m.at(i, j) = field_.sub(m.at(i, j), field_.mul(f, m.at(row, j)));
      }
      ++row;
    }
    return d;
  }

  DenseMatrix inverse() const {
    if (rows_ != cols_) throw ArityMismatch("inverse of non-square matrix");
    DenseMatrix aug(field_, rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
      for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, cols_ + i) = field_.one();
    }
    auto pivots = aug.rref();
    if (pivots.size() != rows_ || pivots.back() >= cols_)
      throw ZeroInverse();
    DenseMatrix r(field_, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r.at(i, j) = aug.at(i, cols_ + j);
    return r;
  }

  std::vector<Elem> apply(const std::vector<Elem>& v) const {
    if (v.size() != cols_) throw ArityMismatch("matrix-vector product");
    std::vector<Elem> r(rows_, field_.zero());
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j)
        r[i] = field_.add(r[i], field_.mul(at(i, j), v[j]));
    return r;
  }

 private:
  K field_;
  size_t rows_, cols_;
  std::vector<Elem> data_;
};

}  // namespace certalg
