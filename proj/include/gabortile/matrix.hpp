#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "gabortile/rational.hpp"

namespace gabortile {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}
  /// Row-major literal, e.g. {{1, 0}, {Rat(1, 2), 2}}.
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix diagonal(const RatVec& diag);
  static RatMatrix from_rows(const std::vector<RatVec>& rows);
  static RatMatrix from_columns(const std::vector<RatVec>& cols);
  /// [[tl, tr], [bl, br]] from four equally sized square blocks.
  static RatMatrix blocks(const RatMatrix& tl, const RatMatrix& tr,
                          const RatMatrix& bl, const RatMatrix& br);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RatVec row(std::size_t r) const;
  RatVec column(std::size_t c) const;
  RatVec diagonal_entries() const;

  /// Sub-block [r0, r0+nr) x [c0, c0+nc).
  RatMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  RatMatrix select_rows(const std::vector<std::size_t>& idx) const;

  RatMatrix transpose() const;
  Rat determinant() const;
  /// Throws Error(SingularMatrix).
  RatMatrix inverse() const;
  RatMatrix inverse_transpose() const { return inverse().transpose(); }

  bool is_integer() const;
  bool is_zero() const;
  bool is_lower_triangular() const;
  bool is_diagonal() const;
  bool is_symmetric() const;
  /// Exactly one nonzero per row and column (a scaled permutation).
  bool is_monomial() const;

  /// lcm of the denominators of all entries.
  Int common_denominator() const;

  RatMatrix operator*(const RatMatrix& o) const;
  RatVec operator*(const RatVec& v) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix operator-() const;
  RatMatrix scaled(const Rat& s) const;

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

RatVec mul_int(const RatMatrix& m, const IntVec& v);

}  // namespace gabortile
