#pragma once

#include "sopq/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace sopq {

/// Dense matrix of rationals. Entries are stored row-major; indices in the
/// public API of the Lie-algebra layers are 1-based (matching the usual
/// matrix conventions), while this low-level container is 0-based.
class Mat {
public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

  static Mat identity(std::size_t n)
  {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  /// Single-entry matrix with value 1 at 0-based (row, col).
  static Mat unit(std::size_t n, std::size_t row, std::size_t col)
  {
    Mat m(n, n);
    m.at(row, col) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const
  {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  bool is_square() const { return rows_ == cols_; }

  Rational trace() const
  {
    require(is_square(), "trace of non-square matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  Mat transposed() const
  {
    Mat m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
  }

  Mat operator+(const Mat& o) const
  {
    require_same_shape(o);
    Mat m = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] += o.data_[k];
    return m;
  }

  Mat operator-(const Mat& o) const
  {
    require_same_shape(o);
    Mat m = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] -= o.data_[k];
    return m;
  }

  Mat operator-() const
  {
    Mat m = *this;
    for (auto& v : m.data_) v = -v;
    return m;
  }

  Mat operator*(const Mat& o) const
  {
    require(cols_ == o.rows_, "matrix product shape mismatch");
    Mat m(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rational& a = at(r, k);
        if (a == 0) continue;
        for (std::size_t c = 0; c < o.cols_; ++c) {
          const Rational& b = o.at(k, c);
          if (b != 0) m.at(r, c) += a * b;
        }
      }
    return m;
  }

  Mat operator*(const Rational& s) const
  {
    Mat m = *this;
    for (auto& v : m.data_) v *= s;
    return m;
  }

  Mat& operator+=(const Mat& o)
  {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }

  bool operator==(const Mat& o) const
  {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  /// Row-major flattening; the repo-wide convention for all span operations.
  std::vector<Rational> flatten() const { return data_; }

  static Mat from_flat(std::size_t rows, std::size_t cols, std::vector<Rational> flat)
  {
    require(flat.size() == rows * cols, "flat size mismatch");
    Mat m(rows, cols);
    m.data_ = std::move(flat);
    return m;
  }

private:
  static void require(bool ok, const char* msg)
  {
    if (!ok) throw std::invalid_argument(msg);
  }
  void require_same_shape(const Mat& o) const
  {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

inline Mat operator*(const Rational& s, const Mat& m) { return m * s; }

/// Matrix commutator XY - YX, the Lie bracket used throughout.
inline Mat bracket(const Mat& x, const Mat& y)
{
  if (!x.is_square() || x.rows() != y.rows() || y.rows() != y.cols())
    throw std::invalid_argument("bracket requires square matrices of equal size");
  return x * y - y * x;
}

} // namespace sopq
