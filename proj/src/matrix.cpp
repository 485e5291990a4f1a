#include "rbh/matrix.hpp"

#include <algorithm>

namespace rbh {

QVec SparseMatrix::apply(const QVec& x) const {
  if ((int)x.size() != cols_) throw std::invalid_argument("apply: size mismatch");
  QVec y(rows_, Rational(0));
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) y[r] += v * x[c];
  return y;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) t.set(c, r, v);
  return t;
}

long SparseMatrix::nnz() const {
  long n = 0;
  for (const auto& row : data_) n += (long)row.size();
  return n;
}

namespace {

using Row = std::map<int, Rational>;

// Gaussian elimination working state. Pivots are picked Markowitz-style:
// shortest remaining row, then the entry whose column is least populated.
struct Elim {
  std::vector<Row> rows;
  std::vector<int> pivot_col;  // per eliminated row, in elimination order
  std::vector<int> pivot_row;
  std::vector<char> done;

  explicit Elim(const SparseMatrix& m) {
    rows.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    done.assign(rows.size(), 0);
  }

  // Reduces to a fully reduced form: each pivot row keeps its pivot column as
  // the only pivot-column entry, so kernel/solve read coordinates directly.
  void run(int ncols) {
    std::vector<int> col_count(ncols, 0);
    while (true) {
      for (auto& c : col_count) c = 0;
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (!done[r])
          for (const auto& [c, v] : rows[r])
            if (c < ncols) ++col_count[c];
      int best = -1;
      std::size_t best_size = 0;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (done[r]) continue;
        bool has_real_col = false;
        for (const auto& [c, v] : rows[r])
          if (c < ncols) has_real_col = true;
        if (!has_real_col) continue;
        if (best < 0 || rows[r].size() < best_size) {
          best = (int)r;
          best_size = rows[r].size();
        }
      }
      if (best < 0) break;
      int pc = -1;
      for (const auto& [c, v] : rows[best])
        if (c < ncols && (pc < 0 || col_count[c] < col_count[pc])) pc = c;
      done[best] = 1;
      pivot_col.push_back(pc);
      pivot_row.push_back(best);
      const Rational pv = rows[best].at(pc);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if ((int)r == best) continue;
        auto it = rows[r].find(pc);
        if (it == rows[r].end()) continue;
        Rational factor = it->second / pv;
        rows[r].erase(it);
        for (const auto& [c, v] : rows[best]) {
          if (c == pc) continue;
          auto jt = rows[r].find(c);
          if (jt == rows[r].end()) {
            rows[r].emplace(c, -factor * v);
          } else {
            jt->second -= factor * v;
            if (jt->second == 0) rows[r].erase(jt);
          }
        }
      }
    }
  }
};

}  // namespace

int rank(const SparseMatrix& m) {
  Elim e(m);
  e.run(m.cols());
  return (int)e.pivot_col.size();
}

std::vector<QVec> kernel_basis(const SparseMatrix& m) {
  Elim e(m);
  e.run(m.cols());
  std::vector<char> is_pivot(m.cols(), 0);
  for (int c : e.pivot_col) is_pivot[c] = 1;
  std::vector<QVec> basis;
  for (int free_c = 0; free_c < m.cols(); ++free_c) {
    if (is_pivot[free_c]) continue;
    QVec v(m.cols(), Rational(0));
    v[free_c] = 1;
    // Each eliminated row r has a single pivot entry left among pivot columns;
    // rows were fully reduced against each other, so back substitution is direct.
    for (std::size_t k = 0; k < e.pivot_row.size(); ++k) {
      const Row& row = e.rows[e.pivot_row[k]];
      int pc = e.pivot_col[k];
      auto it = row.find(free_c);
      if (it != row.end()) v[pc] = -it->second / row.at(pc);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve(const SparseMatrix& m, const QVec& b) {
  if ((int)b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
  // Augment with an extra column holding b, then eliminate on the original
  // columns only. A leftover entry in the augmented column is inconsistency.
  SparseMatrix aug(m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (const auto& [c, v] : m.row(r)) aug.set(r, c, v);
    if (b[r] != 0) aug.set(r, m.cols(), b[r]);
  }
  Elim e(aug);
  e.run(m.cols());  // never pivot on the augmented column
  QVec x(m.cols(), Rational(0));
  for (std::size_t k = 0; k < e.pivot_row.size(); ++k) {
    const Row& row = e.rows[e.pivot_row[k]];
    int pc = e.pivot_col[k];
    auto it = row.find(m.cols());
    if (it != row.end()) x[pc] = it->second / row.at(pc);
  }
  for (std::size_t r = 0; r < e.rows.size(); ++r)
    if (!e.done[r] && !e.rows[r].empty()) return std::nullopt;
  return x;
}

std::vector<QVec> row_space_basis(const std::vector<QVec>& rows, int cols) {
  SparseMatrix m((int)rows.size(), cols);
  for (int r = 0; r < (int)rows.size(); ++r)
    for (int c = 0; c < cols; ++c)
      if (rows[r][c] != 0) m.set(r, c, rows[r][c]);
  Elim e(m);
  e.run(cols);
  std::vector<QVec> basis;
  for (int pr : e.pivot_row) {
    QVec v(cols, Rational(0));
    for (const auto& [c, val] : e.rows[pr]) v[c] = val;
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

// Incremental echelon reducer keyed by pivot column.
struct Reducer {
  std::map<int, QVec> rows;  // pivot col -> normalized row

  // Reduces v in place; returns the pivot column if a nonzero tail remains.
  std::optional<int> reduce(QVec& v) const {
    for (const auto& [pc, row] : rows) {
      if (v[pc] == 0) continue;
      Rational f = v[pc];
      for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * row[c];
    }
    for (std::size_t c = 0; c < v.size(); ++c)
      if (v[c] != 0) return (int)c;
    return std::nullopt;
  }
  bool insert(QVec v) {
    auto pc = reduce(v);
    if (!pc) return false;
    Rational pval = v[*pc];
    for (auto& x : v) x /= pval;
    // Keep stored rows mutually reduced so one sweep in reduce() suffices.
    for (auto& [opc, row] : rows) {
      if (row[*pc] == 0) continue;
      Rational f = row[*pc];
      for (std::size_t c = 0; c < v.size(); ++c) row[c] -= f * v[c];
    }
    rows.emplace(*pc, std::move(v));
    return true;
  }
};

}  // namespace

std::vector<int> independent_over(const std::vector<QVec>& span_rows,
                                  const std::vector<QVec>& candidates, int cols) {
  Reducer red;
  for (const auto& r : span_rows) {
    if ((int)r.size() != cols) throw std::invalid_argument("independent_over");
    red.insert(r);
  }
  std::vector<int> picked;
  for (int i = 0; i < (int)candidates.size(); ++i)
    if (red.insert(candidates[i])) picked.push_back(i);
  return picked;
}

}  // namespace rbh
