#include "genarcs/linalg.hpp"

#include <utility>

namespace genarcs {

std::vector<std::size_t> row_reduce(const Field& field, FqMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    const FieldElement scale = field.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = field.mul(scale, m(row, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const FieldElement factor = field.neg(m(i, col));
      for (std::size_t j = col; j < m.cols(); ++j)
        m(i, j) = field.add(m(i, j), field.mul(factor, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const Field& field, FqMatrix m) { return row_reduce(field, m).size(); }

std::vector<std::vector<FieldElement>> nullspace(const Field& field, FqMatrix m) {
  const auto pivots = row_reduce(field, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(m.cols());
    v[free] = Field::one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = field.neg(m(i, free));
    // The first nonzero entry is either a pivot or `free`; rescale to 1.
    for (auto x : v) {
      if (x.is_zero()) continue;
      const FieldElement s = field.inv(x);
      for (auto& y : v) y = field.mul(s, y);
      break;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace genarcs
