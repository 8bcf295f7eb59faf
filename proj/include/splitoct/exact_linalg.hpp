#pragma once

#include <cstddef>
#include <vector>

#include "splitoct/rational.hpp"

namespace splitoct {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Appends a row; its length must equal cols().
  void append_row(const std::vector<Rational>& row);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form by Gauss-Jordan elimination over the rationals.
RowEchelon reduce(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Basis of {v : m v = 0}, one vector per free column; the free coordinate
/// of each basis vector is 1.
std::vector<std::vector<Rational>> null_space(const RationalMatrix& m);

}  // namespace splitoct
