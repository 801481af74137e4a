#pragma once

#include <cstddef>
#include <vector>

#include "orbitlab/scalar.hpp"

namespace orbitlab {

using ScalarVector = std::vector<Scalar>;

// Dense row-major matrix over Q(i, sqrt2, sqrt5).
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  ScalarMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void append_row(const ScalarVector& row);

  friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarVector operator*(const ScalarMatrix& a, const ScalarVector& x);

/// Basis of {x : A x = 0} from the reduced row echelon form; one vector per
/// free column, with a 1 in that column.
std::vector<ScalarVector> nullspace(const ScalarMatrix& a);

std::size_t rank(const ScalarMatrix& a);

}  // namespace orbitlab
