#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "diamond/scalar.hpp"

namespace diamond {

/// Row-sparse matrix over an exact field.
class SparseMatrix {
 public:
  SparseMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), cols_(cols), rows_(rows) {}

  Field field() const { return field_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  /// Adds `value` to entry (row, col).
  void add(std::size_t row, std::size_t col, const Scalar& value);
  Scalar at(std::size_t row, std::size_t col) const;
  const std::map<std::size_t, Scalar>& row(std::size_t r) const { return rows_.at(r); }

  bool is_zero() const;

  /// this * other.
  SparseMatrix multiply(const SparseMatrix& other) const;

 private:
  Field field_;
  std::size_t cols_;
  std::vector<std::map<std::size_t, Scalar>> rows_;
};

/// Exact rank. Over the rationals rows are scaled to primitive integer rows
/// and eliminated fraction-free (content removed after each update); over
/// F_p plain Gaussian elimination is used.
std::size_t exact_rank(const SparseMatrix& m);

}  // namespace diamond
