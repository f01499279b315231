#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "s3d/common.hpp"

namespace s3d {

// Dense row-major matrix. Invariant: data().size() == rows()*cols() and all
// entries finite after every public kernel operation.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(Count rows, Count cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(Count rows, Count cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    require(data_.size() == rows_ * cols_, "matrix data length must equal rows*cols");
  }

  static Matrix identity(Count n) {
    Matrix m(n, n);
    for (Count i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  Count rows() const { return rows_; }
  Count cols() const { return cols_; }
  Count size() const { return data_.size(); }

  T& at(Count r, Count c) { return data_[r * cols_ + c]; }
  const T& at(Count r, Count c) const { return data_[r * cols_ + c]; }

  std::span<T> row(Count r) { return std::span<T>(data_.data() + r * cols_, cols_); }
  std::span<const T> row(Count r) const {
    return std::span<const T>(data_.data() + r * cols_, cols_);
  }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  bool all_finite() const {
    for (const T& x : data_)
      if (!std::isfinite(static_cast<double>(x))) return false;
    return true;
  }

  bool operator==(const Matrix& other) const = default;

 private:
  Count rows_ = 0;
  Count cols_ = 0;
  std::vector<T> data_;
};

// Visibility masks for attention: vis.at(query, key) != 0 means visible.
struct BoolMatrix {
  Count rows = 0;
  Count cols = 0;
  std::vector<std::uint8_t> data;

  BoolMatrix() = default;
  BoolMatrix(Count r, Count c) : rows(r), cols(c), data(r * c, 0) {}

  std::uint8_t& at(Count r, Count c) { return data[r * cols + c]; }
  std::uint8_t at(Count r, Count c) const { return data[r * cols + c]; }
};

// Standard matrix product with fixed left-to-right accumulation over the inner
// dimension, so results are bit-reproducible across runs.
template <typename T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
  require(a.cols() == b.rows(), "matmul: inner dimensions differ");
  Matrix<T> c(a.rows(), b.cols());
  for (Count i = 0; i < a.rows(); ++i) {
    for (Count k = 0; k < a.cols(); ++k) {
      const T aik = a.at(i, k);
      for (Count j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  }
  if (!c.all_finite()) throw NumericError("matmul: non-finite result");
  return c;
}

// Row vector times matrix; same accumulation order as matmul.
template <typename T>
void vec_mat(std::span<const T> a, const Matrix<T>& w, std::span<T> out) {
  require(a.size() == w.rows(), "vec_mat: length mismatch");
  require(out.size() == w.cols(), "vec_mat: output length mismatch");
  for (Count j = 0; j < out.size(); ++j) out[j] = T(0);
  for (Count k = 0; k < w.rows(); ++k) {
    const T ak = a[k];
    for (Count j = 0; j < w.cols(); ++j) out[j] += ak * w.at(k, j);
  }
}

template <typename T>
std::vector<T> vec_mat(std::span<const T> a, const Matrix<T>& w) {
  std::vector<T> out(w.cols());
  vec_mat(a, w, std::span<T>(out));
  return out;
}

template <typename T>
T dot(std::span<const T> a, std::span<const T> b) {
  T acc = T(0);
  for (Count i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace s3d
