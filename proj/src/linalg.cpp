#include "orbitlab/linalg.hpp"

#include "orbitlab/errors.hpp"

namespace orbitlab {

namespace {

// In-place reduction to RREF; returns the pivot column of each pivot row.
std::vector<std::size_t> reduce(ScalarMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pick = row;
    while (pick < m.rows() && m(pick, col).is_zero()) ++pick;
    if (pick == m.rows()) continue;
    if (pick != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pick, c), m(row, c));
    }
    const Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

void ScalarMatrix::append_row(const ScalarVector& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw DomainError("row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix shape mismatch");
  ScalarMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

ScalarVector operator*(const ScalarMatrix& a, const ScalarVector& x) {
  if (a.cols() != x.size()) throw DomainError("matrix-vector shape mismatch");
  ScalarVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a(i, k).is_zero() && !x[k].is_zero()) out[i] += a(i, k) * x[k];
    }
  }
  return out;
}

std::vector<ScalarVector> nullspace(const ScalarMatrix& a) {
  ScalarMatrix m = a;
  const auto pivots = reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<ScalarVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ScalarVector x(m.cols());
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -m(r, free);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t rank(const ScalarMatrix& a) {
  ScalarMatrix m = a;
  return reduce(m).size();
}

}  // namespace orbitlab
