// Dense complex kernels and the vec calculus the rest of the library is
// built on.
//
// Convention, fixed once here: vec stacks rows, so vec(M)[i*cols + j] =
// M(i,j) and vec(E_{i,j}) = e_i (x) e_j. Under this convention
// (A (x) B^T) vec(X) = vec(A X B) for all conformable A, X, B.

#pragma once

#include "loccdist/types.hpp"

#include <vector>

namespace loccdist {

Vector vec(const Matrix& m);

// Inverse of vec; throws std::invalid_argument on a length mismatch.
Matrix unvec(const Vector& v, Index rows, Index cols);

Matrix kron(const Matrix& a, const Matrix& b);

// u = sum_k coefficients[k] * left[k] (x) right[k], coefficients descending.
// All min(dim_a, dim_b) coefficients are reported, including zeros.
struct SchmidtDecomposition {
  RealVector coefficients;
  std::vector<Vector> left;
  std::vector<Vector> right;

  Index rank(double rtol) const;
};

// Phase convention: in each left vector the first entry with magnitude
// above equality_atol is made real positive. Coefficient ties (within
// equality_atol) are broken by ordering left vectors lexicographically by
// (real, imaginary) entry pairs.
SchmidtDecomposition schmidt_decompose(
    const Vector& u, Index dim_a, Index dim_b,
    const ToleranceConfig& tol = default_tolerance());

// Trace over the trailing factor of A (x) B; m must be square with side
// dim_a * dim_b.
Matrix partial_trace_b(const Matrix& m, Index dim_a, Index dim_b);

// ||Gram - I||_F for a list of equal-dimension vectors.
double orthonormality_residual(const std::vector<Vector>& vectors);

// Extends an orthonormal prefix to a full orthonormal basis of C^dim.
// Completion is deterministic: each round picks the standard basis vector
// with the largest residual against the span built so far (ties to the
// lowest index).
std::vector<Vector> orthonormal_complete(
    const std::vector<Vector>& prefix, Index dim,
    const ToleranceConfig& tol = default_tolerance());

}  // namespace loccdist
