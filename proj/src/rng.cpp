#include "loccdist/rng.hpp"

#include <cmath>
#include <numbers>

namespace loccdist {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer applied to the combined word
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  // 53 random bits into [0, 1)
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

std::uint64_t Rng::integer() { return engine_(); }

Matrix random_gaussian_matrix(Index rows, Index cols, Rng& rng) {
  Matrix g(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) g(i, j) = rng.complex_normal();
  return g;
}

Matrix random_unitary(Index dim, Rng& rng) {
  const Matrix g = random_gaussian_matrix(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // fold the R diagonal phases into Q so the distribution is Haar
  for (Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= (mag > 0.0) ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

Vector random_unit_vector(Index dim, Rng& rng) {
  Vector v(dim);
  for (Index i = 0; i < dim; ++i) v(i) = rng.complex_normal();
  const double n = v.norm();
  if (n == 0.0) return unit_vector(dim, 0);
  return v / n;
}

Matrix random_psd(Index dim, Rng& rng) {
  const Matrix g = random_gaussian_matrix(dim, dim, rng);
  return g * g.adjoint();
}

}  // namespace loccdist
