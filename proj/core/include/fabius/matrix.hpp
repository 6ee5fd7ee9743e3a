#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "fabius/rational.hpp"

namespace fabius {

// Dense vector of Rationals with 1-based element access.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t length) : entries_(length) {}
  explicit RationalVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  RationalVector(std::initializer_list<Rational> entries) : entries_(entries) {}

  std::size_t size() const { return entries_.size(); }

  // 1-based; throws std::out_of_range.
  Rational& operator()(std::size_t j);
  const Rational& operator()(std::size_t j) const;

  const std::vector<Rational>& entries() const { return entries_; }
  bool is_zero() const;

  friend RationalVector operator-(const RationalVector& lhs, const RationalVector& rhs);
  friend bool operator==(const RationalVector&, const RationalVector&) = default;

 private:
  std::vector<Rational> entries_;
};

// Dense row-major matrix of Rationals with 1-based (row, col) access.
class RationalMatrix {
 public:
  // Zero matrix; throws std::invalid_argument for an empty shape.
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  // A single row.
  static RationalMatrix row_matrix(const RationalVector& row);
  // `top` placed above `bottom`; column counts must match.
  static RationalMatrix stack(const RationalMatrix& top, const RationalMatrix& bottom);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  // 1-based; throws std::out_of_range.
  Rational& operator()(std::size_t r, std::size_t c);
  const Rational& operator()(std::size_t r, std::size_t c) const;

  RationalVector row(std::size_t r) const;

  // Throws std::invalid_argument on a shape mismatch.
  friend RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs);
  friend RationalVector operator*(const RationalMatrix& lhs, const RationalVector& rhs);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

}  // namespace fabius
