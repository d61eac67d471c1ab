// Constructive converse for 2x2: every subspace of C^2 (x) C^2 admits an
// orthonormal basis of the same span in which, for three-dimensional
// subspaces, at least two members are product states.

#pragma once

#include "loccdist/bipartite.hpp"
#include "loccdist/types.hpp"

#include <vector>

namespace loccdist {

struct TaggedBasis {
  std::vector<BipartiteVector> vectors;
  std::vector<bool> product_flags;  // Schmidt rank 1 within tolerance

  Index product_count() const;
};

// Second Schmidt coefficient below this marks a product state.
inline constexpr double k_product_schmidt_tol = 1e-10;

// Cases by subspace dimension m:
//   m = 0, 1, 2: input returned unchanged
//   m = 3: complement vector u is Schmidt-decomposed as
//          s1 x1 (x) y1 + s2 x2 (x) y2; output { v, x1 (x) y2, x2 (x) y1 }
//          with v completing the orthonormal set inside the subspace
//   m = 4: standard product basis
// Throws on a non-orthonormal input or wrong ambient dimension.
TaggedBasis distinguishable_basis_2x2(const std::vector<BipartiteVector>& subspace,
                                      const ToleranceConfig& tol = default_tolerance());

struct ConstructionReport {
  double orthonormality_residual = 0.0;
  // max over inputs of the residual after reconstructing in the output basis
  double span_residual = 0.0;
  Index product_count = 0;
  bool product_requirement_met = true;  // >= 2 products when m == 3
  bool ok = false;
};

// Checks the construction without throwing; failures are reported.
ConstructionReport verify_construction(const std::vector<BipartiteVector>& subspace,
                                       const TaggedBasis& basis,
                                       const ToleranceConfig& tol = default_tolerance());

}  // namespace loccdist
