#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ehrkit/rational.hpp"

namespace ehrkit {

// Dense row-major matrix value type. Operations return fresh values; nothing
// mutates a matrix after it has been handed out.
template <typename T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_) throw Error("Mat: entry count mismatch");
  }
  Mat(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error("Mat: ragged rows");
      for (const auto& x : r) a_.push_back(x);
    }
  }

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols() != b.rows()) throw Error("Mat: product shape mismatch");
    Mat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a.at(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols(); ++j)
          c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return c;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  std::vector<T> apply(const std::vector<T>& x) const {
    if (x.size() != cols_) throw Error("Mat: apply length mismatch");
    std::vector<T> y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
    return y;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> a_;
};

using IntMatrix = Mat<Int>;
using RatMatrix = Mat<Rat>;

// Exact determinant of a square integer matrix (Bareiss fraction-free
// elimination).
Int determinant(const IntMatrix& m);

// Exact determinant over the rationals.
Rat determinant(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);

RatMatrix to_rational(const IntMatrix& m);

}  // namespace ehrkit
