#include "delooping/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace dl {

Mat::Mat(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, f.zero()) {}

Mat Mat::identity(std::size_t n, Field f) {
  Mat m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols, Field f) {
  Mat m(rows.size(), cols, f);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = f.zero() + rows[r][c];
  }
  return m;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
  if (a.cols_ != b.cols_) throw std::invalid_argument("vstack: column mismatch");
  Mat m(a.rows_ + b.rows_, a.cols_, a.field_);
  std::copy(a.data_.begin(), a.data_.end(), m.data_.begin());
  std::copy(b.data_.begin(), b.data_.end(), m.data_.begin() + a.data_.size());
  return m;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
  Mat m(a.rows_, a.cols_ + b.cols_, a.field_);
  m.set_block(0, 0, a);
  m.set_block(0, a.cols_, b);
  return m;
}

Mat Mat::block_diag(const Mat& a, const Mat& b) {
  Mat m(a.rows_ + b.rows_, a.cols_ + b.cols_, a.field_);
  m.set_block(0, 0, a);
  m.set_block(a.rows_, a.cols_, b);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Mat m(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      const Scalar na = -a;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (b.is_zero()) continue;
        m(i, j).submul(na, b);
      }
    }
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Mat m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  Mat m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
  return m;
}

Mat Mat::scaled(const Scalar& s) const {
  Mat m = *this;
  for (auto& x : m.data_)
    if (!x.is_zero()) x *= s;
  return m;
}

Mat Mat::transpose() const {
  Mat m(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Mat Mat::row(std::size_t r) const { return block(r, 0, 1, cols_); }

Mat Mat::select_rows(const std::vector<std::size_t>& idx) const {
  Mat m(idx.size(), cols_, field_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
  return m;
}

Mat Mat::select_cols(const std::vector<std::size_t>& idx) const {
  Mat m(rows_, idx.size(), field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
  return m;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("matrix block out of range");
  Mat m(nr, nc, field_);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("matrix block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

bool Mat::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::operator==(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

Scalar Mat::trace() const {
  Scalar t = field_.zero();
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ',';
      os << (*this)(i, j).str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

Rref rref(const Mat& m) {
  Rref out;
  out.reduced = m;
  Mat& a = out.reduced;
  const std::size_t R = a.rows(), C = a.cols();
  std::size_t r = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t p = R;
    for (std::size_t i = r; i < R; ++i)
      if (!a(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p == R) continue;
    if (p != r)
      for (std::size_t j = c; j < C; ++j) std::swap(a(p, j), a(r, j));
    Scalar inv = a(r, c).inverse();
    nz.clear();
    for (std::size_t j = c; j < C; ++j)
      if (!a(r, j).is_zero()) {
        if (!inv.is_one()) a(r, j) *= inv;
        nz.push_back(j);
      }
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (std::size_t j : nz) a(i, j).submul(f, a(r, j));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Mat kernel_basis(const Mat& m) {
  // v * m = 0  <=>  m^T v^T = 0
  Field f = m.field();
  Rref rr = rref(m.transpose());
  const std::size_t n = m.rows();
  std::vector<bool> is_pivot(n, false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free.push_back(j);
  Mat k(free.size(), n, f);
  for (std::size_t t = 0; t < free.size(); ++t) {
    k(t, free[t]) = f.one();
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) k(t, rr.pivots[i]) = -rr.reduced(i, free[t]);
  }
  return k;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("solve: column mismatch");
  Field f = a.field();
  const std::size_t r = a.rows(), s = b.rows();
  Mat aug = Mat::hstack(a.transpose(), b.transpose());
  Rref rr = rref(aug);
  for (auto p : rr.pivots)
    if (p >= r) return std::nullopt;
  Mat x(s, r, f);
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    for (std::size_t j = 0; j < s; ++j) x(j, rr.pivots[i]) = rr.reduced(i, r + j);
  return x;
}

Mat row_basis(const Mat& m) {
  Rref rr = rref(m);
  return rr.reduced.block(0, 0, rr.rank, m.cols());
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto x = solve(m, Mat::identity(m.rows(), m.field()));
  if (!x) return std::nullopt;
  return x;
}

Mat coordinates(const Mat& basis, const Mat& b) {
  auto x = solve(basis, b);
  if (!x) throw std::invalid_argument("coordinates: vector outside the span");
  return *x;
}

}  // namespace dl
