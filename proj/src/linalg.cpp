#include "fcone/cone.hpp"

#include <stdexcept>

namespace fcone {

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

std::size_t rank(const RationalMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::vector<Integer>> a(R, std::vector<Integer>(C));
  for (std::size_t r = 0; r < R; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < C; ++c) l = boost::multiprecision::lcm(l, denominator(m(r, c)));
    for (std::size_t c = 0; c < C; ++c) a[r][c] = numerator(m(r, c)) * (l / denominator(m(r, c)));
  }
  Integer prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t p = row;
    while (p < R && a[p][col] == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[row]);
    for (std::size_t i = row + 1; i < R; ++i) {
      for (std::size_t j = col + 1; j < C; ++j) {
        a[i][j] = (a[row][col] * a[i][j] - a[i][col] * a[row][j]) / prev;
      }
      a[i][col] = 0;
    }
    prev = a[row][col];
    ++row;
  }
  return row;
}

std::size_t rank(const std::vector<RationalVector>& rows, std::size_t cols) {
  return rank(RationalMatrix::from_rows(rows, cols));
}

namespace {

/// Incremental row echelon basis over Q.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t cols) : cols_(cols) {}

  /// Reduces v against the basis; inserts it and returns true if independent.
  bool insert(RationalVector v) {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      const Rational& f = v[pivots_[k]];
      if (f.is_zero()) continue;
      Rational factor = f;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (!basis_[k][c].is_zero()) v[c] -= factor * basis_[k][c];
      }
    }
    std::size_t p = 0;
    while (p < cols_ && v[p].is_zero()) ++p;
    if (p == cols_) return false;
    Rational lead = v[p];
    for (auto& x : v) x /= lead;
    basis_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

 private:
  std::size_t cols_;
  std::vector<RationalVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& a, std::size_t limit_cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < limit_cols && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
    }
    Rational lead = a(row, col);
    for (std::size_t c = 0; c < a.cols(); ++c) a(row, c) /= lead;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      Rational f = a(i, col);
      for (std::size_t c = 0; c < a.cols(); ++c) {
        if (!a(row, c).is_zero()) a(i, c) -= f * a(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> independent_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  EchelonBasis basis(cols);
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged rows");
    if (basis.insert(rows[r])) out.push_back(r);
    if (out.size() == cols) break;
  }
  return out;
}

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  RationalMatrix a = m;
  auto pivots = rref(a, a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> out;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(a.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a(k, free);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length mismatch");
  RationalMatrix a(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) a(r, c) = m(r, c);
    a(r, m.cols()) = b[r];
  }
  auto pivots = rref(a, m.cols());
  for (std::size_t r = pivots.size(); r < a.rows(); ++r) {
    if (!a(r, m.cols()).is_zero()) return std::nullopt;
  }
  RationalVector x(m.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = a(k, m.cols());
  return x;
}

}  // namespace fcone
