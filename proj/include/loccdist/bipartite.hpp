// Bipartite structures: coefficient-matrix vectors, the maximally entangled
// direction, the projectors P and Q, and orthonormal bases of the traceless
// subspace ran(Q).

#pragma once

#include "loccdist/types.hpp"
#include "loccdist/vec_calculus.hpp"

#include <cstdint>
#include <vector>

namespace loccdist {

struct BipartiteSpace {
  Index dim_a = 0;
  Index dim_b = 0;

  Index total() const { return dim_a * dim_b; }
  bool is_square() const { return dim_a == dim_b; }
  // side of the square case; throws if dim_a != dim_b
  Index side() const;

  friend bool operator==(const BipartiteSpace&, const BipartiteSpace&) = default;
};

// A vector u in A (x) B stored as its dim_a x dim_b coefficient matrix,
// u = vec(coeff).
struct BipartiteVector {
  BipartiteSpace space;
  Matrix coeff;

  static BipartiteVector from_vector(BipartiteSpace space, const Vector& u);
  Vector as_vector() const { return vec(coeff); }
  double norm() const { return coeff.norm(); }
  bool is_unit(const ToleranceConfig& tol = default_tolerance()) const;

  // number of singular values above independence_rtol * largest
  Index schmidt_rank(const ToleranceConfig& tol = default_tolerance()) const;
  SchmidtDecomposition schmidt(const ToleranceConfig& tol = default_tolerance()) const;
};

// vec(I_n)/sqrt(n), the canonical maximally entangled direction.
Vector max_entangled_vector(Index n);

// P = v v^*, Q = I - P for v the maximally entangled direction.
struct MaxEntProjectors {
  Index n = 0;
  Matrix p;
  Matrix q;
  BipartiteVector v;
};

MaxEntProjectors make_projectors(Index n);

// Orthonormal basis of ran(Q) as vec of a traceless-matrix basis:
// off-diagonal units E_{i,j} (row-major scan, i != j) first, then the
// diagonal combinations (E_{0,0}+...+E_{k-1,k-1} - k E_{k,k})/sqrt(k(k+1)).
std::vector<BipartiteVector> gen_q_basis(Index n);

// gen_q_basis rotated by a Haar-style random (n^2-1)-dimensional unitary
// derived from the seed; deterministic per seed.
std::vector<BipartiteVector> random_q_basis(Index n, std::uint64_t seed);

}  // namespace loccdist
