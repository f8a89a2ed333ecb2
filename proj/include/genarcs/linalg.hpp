// Small dense linear algebra over GF(q): row reduction, rank, nullspace.

#ifndef GENARCS_LINALG_HPP
#define GENARCS_LINALG_HPP

#include <cstddef>
#include <vector>

#include "genarcs/gf.hpp"

namespace genarcs {

/// Row-major matrix over a field; rows() x cols().
class FqMatrix {
 public:
  FqMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  FieldElement operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_, cols_;
  std::vector<FieldElement> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(const Field& field, FqMatrix& m);

std::size_t rank(const Field& field, FqMatrix m);

/// Basis of {x : m x = 0}, each vector scaled so its first nonzero entry is 1.
std::vector<std::vector<FieldElement>> nullspace(const Field& field, FqMatrix m);

}  // namespace genarcs

#endif  // GENARCS_LINALG_HPP
