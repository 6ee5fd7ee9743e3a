#include "fabius/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fabius {

namespace {

[[noreturn]] void out_of_range(const char* what, std::size_t i) {
  throw std::out_of_range(std::string(what) + ": index " + std::to_string(i) + " out of range");
}

}  // namespace

Rational& RationalVector::operator()(std::size_t j) {
  if (j == 0 || j > entries_.size()) out_of_range("RationalVector", j);
  return entries_[j - 1];
}

const Rational& RationalVector::operator()(std::size_t j) const {
  if (j == 0 || j > entries_.size()) out_of_range("RationalVector", j);
  return entries_[j - 1];
}

bool RationalVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return x.is_zero(); });
}

RationalVector operator-(const RationalVector& lhs, const RationalVector& rhs) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("RationalVector: length mismatch");
  std::vector<Rational> out(lhs.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = lhs.entries_[j] - rhs.entries_[j];
  return RationalVector(std::move(out));
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("RationalMatrix: empty shape");
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : RationalMatrix(rows.size(), rows.size() == 0 ? 0 : rows.begin()->size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("RationalMatrix: ragged rows");
    std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
    ++r;
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix out(n, n);
  for (std::size_t k = 1; k <= n; ++k) out(k, k) = Rational(1);
  return out;
}

RationalMatrix RationalMatrix::row_matrix(const RationalVector& row) {
  RationalMatrix out(1, row.size());
  std::copy(row.entries().begin(), row.entries().end(), out.data_.begin());
  return out;
}

RationalMatrix RationalMatrix::stack(const RationalMatrix& top, const RationalMatrix& bottom) {
  if (top.cols_ != bottom.cols_) throw std::invalid_argument("RationalMatrix::stack: column mismatch");
  RationalMatrix out(top.rows_ + bottom.rows_, top.cols_);
  std::copy(top.data_.begin(), top.data_.end(), out.data_.begin());
  std::copy(bottom.data_.begin(), bottom.data_.end(),
            out.data_.begin() + static_cast<std::ptrdiff_t>(top.data_.size()));
  return out;
}

Rational& RationalMatrix::operator()(std::size_t r, std::size_t c) {
  if (r == 0 || r > rows_) out_of_range("RationalMatrix row", r);
  if (c == 0 || c > cols_) out_of_range("RationalMatrix col", c);
  return data_[(r - 1) * cols_ + (c - 1)];
}

const Rational& RationalMatrix::operator()(std::size_t r, std::size_t c) const {
  if (r == 0 || r > rows_) out_of_range("RationalMatrix row", r);
  if (c == 0 || c > cols_) out_of_range("RationalMatrix col", c);
  return data_[(r - 1) * cols_ + (c - 1)];
}

RationalVector RationalMatrix::row(std::size_t r) const {
  if (r == 0 || r > rows_) out_of_range("RationalMatrix row", r);
  const auto first = data_.begin() + static_cast<std::ptrdiff_t>((r - 1) * cols_);
  return RationalVector(std::vector<Rational>(first, first + static_cast<std::ptrdiff_t>(cols_)));
}

RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs) {
  if (lhs.cols_ != rhs.rows_) throw std::invalid_argument("RationalMatrix: product shape mismatch");
  RationalMatrix out(lhs.rows_, rhs.cols_);
  for (std::size_t r = 0; r < lhs.rows_; ++r) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Rational& a = lhs.data_[r * lhs.cols_ + k];
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        out.data_[r * out.cols_ + c] += a * rhs.data_[k * rhs.cols_ + c];
      }
    }
  }
  return out;
}

RationalVector operator*(const RationalMatrix& lhs, const RationalVector& rhs) {
  if (lhs.cols_ != rhs.size()) throw std::invalid_argument("RationalMatrix: vector length mismatch");
  std::vector<Rational> out(lhs.rows_);
  for (std::size_t r = 0; r < lhs.rows_; ++r) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) out[r] += lhs.data_[r * lhs.cols_ + k] * rhs.entries()[k];
  }
  return RationalVector(std::move(out));
}

}  // namespace fabius
