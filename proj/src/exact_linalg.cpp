#include "splitoct/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace splitoct {

void RationalMatrix::append_row(const std::vector<Rational>& row) {
  if (row.size() != cols_) throw std::invalid_argument("row length does not match column count");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

RowEchelon reduce(RationalMatrix m) {
  RowEchelon out;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
    std::size_t found = pivot_row;
    while (found < m.rows() && is_zero(m(found, col))) ++found;
    if (found == m.rows()) continue;
    if (found != pivot_row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(found, c), m(pivot_row, c));

    const Rational inv = 1 / m(pivot_row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(pivot_row, c) *= inv;

    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || is_zero(m(r, col))) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(pivot_row, c);
    }
    out.pivot_columns.push_back(col);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return reduce(m).pivot_columns.size(); }

std::vector<std::vector<Rational>> null_space(const RationalMatrix& m) {
  const RowEchelon rref = reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rref.pivot_columns) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < rref.pivot_columns.size(); ++r) v[rref.pivot_columns[r]] = -rref.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace splitoct
