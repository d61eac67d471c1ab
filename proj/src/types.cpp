#include "loccdist/types.hpp"

namespace loccdist {

const ToleranceConfig& default_tolerance() {
  static const ToleranceConfig config{};
  return config;
}

Vector unit_vector(Index dim, Index i) {
  if (dim <= 0) throw std::invalid_argument("unit_vector: dim must be positive");
  if (i < 0 || i >= dim) throw std::out_of_range("unit_vector: index out of range");
  Vector v = Vector::Zero(dim);
  v(i) = 1.0;
  return v;
}

Matrix matrix_unit(Index rows, Index cols, Index i, Index j) {
  if (rows <= 0 || cols <= 0)
    throw std::invalid_argument("matrix_unit: dimensions must be positive");
  if (i < 0 || i >= rows || j < 0 || j >= cols)
    throw std::out_of_range("matrix_unit: index out of range");
  Matrix m = Matrix::Zero(rows, cols);
  m(i, j) = 1.0;
  return m;
}

}  // namespace loccdist
