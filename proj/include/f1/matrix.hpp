#pragma once

#include <vector>

#include "f1/arith.hpp"

namespace f1 {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries);
  static IntegerMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

struct SmithForm {
  std::size_t rank = 0;
  /// Nonzero diagonal entries d1 | d2 | ..., all positive.
  std::vector<Integer> invariant_factors;
};

SmithForm smith_rank(IntegerMatrix m);

}  // namespace f1
