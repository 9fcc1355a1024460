#include "f1/matrix.hpp"

#include <utility>

namespace f1 {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw DomainError("matrix entry count mismatch");
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t target, std::size_t source,
                                     const Integer& factor) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntegerMatrix::add_col_multiple(std::size_t target, std::size_t source,
                                     const Integer& factor) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
}

namespace {

// Moves the smallest nonzero |entry| of the trailing block to (t,t).
bool pivot_smallest(IntegerMatrix& m, std::size_t t) {
  bool found = false;
  std::size_t br = t;
  std::size_t bc = t;
  Integer best;
  for (std::size_t i = t; i < m.rows(); ++i) {
    for (std::size_t j = t; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      Integer a = abs(m(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        br = i;
        bc = j;
      }
    }
  }
  if (!found) return false;
  m.swap_rows(t, br);
  m.swap_cols(t, bc);
  return true;
}

}  // namespace

SmithForm smith_rank(IntegerMatrix m) {
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < limit; ++t) {
    if (!pivot_smallest(m, t)) break;
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (m(i, t) == 0) continue;
        Integer q = m(i, t) / m(t, t);  // truncating
        m.add_row_multiple(i, t, -q);
        if (m(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (m(t, j) == 0) continue;
        Integer q = m(t, j) / m(t, t);
        m.add_col_multiple(j, t, -q);
        if (m(t, j) != 0) dirty = true;
      }
      if (!dirty) {
        // Divisibility of the remaining block by the pivot.
        bool fixed = true;
        for (std::size_t i = t + 1; i < m.rows() && fixed; ++i) {
          for (std::size_t j = t + 1; j < m.cols(); ++j) {
            Integer r = m(i, j) % m(t, t);
            if (r != 0) {
              m.add_row_multiple(t, i, 1);
              fixed = false;
              break;
            }
          }
        }
        if (fixed) break;
      }
      pivot_smallest(m, t);
    }
    diag.push_back(abs(m(t, t)));
  }
  return {diag.size(), diag};
}

}  // namespace f1
