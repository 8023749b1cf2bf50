#pragma once

#include <optional>
#include <string>
#include <vector>

#include "delooping/scalar.hpp"

namespace dl {

// Dense row-major matrix. Vectors are rows and maps act on the right, so a
// linear map V -> W with dim V = r and dim W = c is an r x c matrix.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, Field f = Field());

  static Mat identity(std::size_t n, Field f = Field());
  static Mat from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols, Field f = Field());
  static Mat vstack(const Mat& a, const Mat& b);
  static Mat hstack(const Mat& a, const Mat& b);
  static Mat block_diag(const Mat& a, const Mat& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Scalar& s) const;
  Mat transpose() const;
  Mat row(std::size_t r) const;
  Mat select_rows(const std::vector<std::size_t>& idx) const;
  Mat select_cols(const std::vector<std::size_t>& idx) const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);

  bool is_zero() const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }
  Scalar trace() const;
  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

struct Rref {
  Mat reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

Rref rref(const Mat& m);
std::size_t rank(const Mat& m);
// Rows spanning {v : v * m = 0}.
Mat kernel_basis(const Mat& m);
// X with X * a = b, or nothing when the rows of b are not in the row space of a.
std::optional<Mat> solve(const Mat& a, const Mat& b);
// Nonzero rows of the reduced echelon form of m.
Mat row_basis(const Mat& m);
std::optional<Mat> inverse(const Mat& m);
// Coordinates of the rows of b with respect to the independent rows of basis.
// Throws when some row is outside the span.
Mat coordinates(const Mat& basis, const Mat& b);

}  // namespace dl
