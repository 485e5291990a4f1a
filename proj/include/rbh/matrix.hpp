#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rbh/rational.hpp"

namespace rbh {

using QVec = std::vector<Rational>;

// Sparse row-major matrix over Q. Absent entries are zero; zeros are never
// stored. Immutable use after assembly is the expected pattern.
class SparseMatrix {
 public:
  SparseMatrix() : rows_(0), cols_(0) {}
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void set(int r, int c, const Rational& v) {
    check_index(r, c);
    if (v == 0)
      data_[r].erase(c);
    else
      data_[r][c] = v;
  }
  void add(int r, int c, const Rational& v) {
    check_index(r, c);
    auto it = data_[r].find(c);
    if (it == data_[r].end()) {
      if (v != 0) data_[r].emplace(c, v);
    } else {
      it->second += v;
      if (it->second == 0) data_[r].erase(it);
    }
  }
  Rational get(int r, int c) const {
    check_index(r, c);
    auto it = data_[r].find(c);
    return it == data_[r].end() ? Rational(0) : it->second;
  }
  const std::map<int, Rational>& row(int r) const { return data_[r]; }

  QVec apply(const QVec& x) const;       // m * x
  SparseMatrix transpose() const;
  long nnz() const;

 private:
  void check_index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
      throw std::out_of_range("SparseMatrix index");
  }
  int rows_, cols_;
  std::vector<std::map<int, Rational>> data_;
};

int rank(const SparseMatrix& m);

// Basis of the null space; size == cols - rank.
std::vector<QVec> kernel_basis(const SparseMatrix& m);

// Some x with m*x == b, or nullopt when b is outside the column space.
std::optional<QVec> solve(const SparseMatrix& m, const QVec& b);

// Row-space basis (echelon rows) of the matrix whose rows are `rows`.
std::vector<QVec> row_space_basis(const std::vector<QVec>& rows, int cols);

// Indices into `candidates` whose classes form a basis of
// span(candidates + span_rows) / span(span_rows).
std::vector<int> independent_over(const std::vector<QVec>& span_rows,
                                  const std::vector<QVec>& candidates, int cols);

}  // namespace rbh
