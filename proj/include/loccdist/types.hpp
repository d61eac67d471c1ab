// Core scalar/matrix aliases, tolerance knobs, and error types shared by
// every loccdist module. All dense linear algebra is Eigen-backed.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace loccdist {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Numerical acceptance thresholds used repo-wide.
//   equality_atol:     Frobenius-norm scale for "equal up to roundoff"
//   independence_rtol: singular-value ratio below which vectors count as
//                      linearly dependent
//   psd_eig_floor:     most negative eigenvalue still accepted as PSD noise
struct ToleranceConfig {
  double equality_atol = 1e-9;
  double independence_rtol = 1e-8;
  double psd_eig_floor = -1e-10;
};

const ToleranceConfig& default_tolerance();

// Standard basis constructors: e_i and E_{i,j} = e_i e_j^*.
Vector unit_vector(Index dim, Index i);
Matrix matrix_unit(Index rows, Index cols, Index i, Index j);

// Thrown when the pair scan finds no commutator above the acceptance
// threshold; carries the best value seen so callers can diagnose.
class CertificateSearchError : public std::runtime_error {
 public:
  CertificateSearchError(const std::string& what, double max_norm)
      : std::runtime_error(what), max_commutator_norm(max_norm) {}
  double max_commutator_norm;
};

// Thrown when two realizations do not describe the same channel.
class ChannelMismatchError : public std::runtime_error {
 public:
  ChannelMismatchError(const std::string& what, double distance)
      : std::runtime_error(what), choi_distance(distance) {}
  double choi_distance;
};

// Thrown when the environment-unitary recovery leaves a residual above
// tolerance; carries the residual.
class RecoveryError : public std::runtime_error {
 public:
  RecoveryError(const std::string& what, double r)
      : std::runtime_error(what), residual(r) {}
  double residual;
};

}  // namespace loccdist
