// Non-commutation certificates for rank-one separable measurements on the
// traceless subspace, plus the falsification harness that sweeps bases and
// measurements looking for (never-occurring) perfect hits.

#pragma once

#include "loccdist/measurement.hpp"
#include "loccdist/types.hpp"

#include <cstdint>
#include <vector>

namespace loccdist {

// Scale-free acceptance threshold for a non-commuting pair; empirical, the
// existence argument gives no magnitude.
inline constexpr double k_commutator_accept = 1e-6;

// |sum of squared cross overlaps - n| tolerance for the trace identity.
inline constexpr double k_trace_identity_tol = 1e-8;

// Witness that the Q-compressed elements of outcomes i and j fail to
// commute. commutator_norm is ||K_i K_j - K_j K_i||_F normalized by
// ||K_i||_F ||K_j||_F.
struct Certificate {
  Index i = 0;
  Index j = 0;
  Complex overlap;  // q_overlap(m, i, j)
  double commutator_norm = 0.0;
};

// (a_i^* (x) b_i^T) Q (a_j (x) conj(b_j)): the inner product of the two
// measurement directions after projecting out the maximally entangled
// component. Computed in closed form:
//   <a_i,a_j><b_j,b_i> - (1/n)<a_i,b_i><b_j,a_j>.
Complex q_overlap(const RankOneSeparableMeasurement& m, Index i, Index j);

// K_i = Q (a_i a_i^* (x) conj(b_i) b_i^T) Q.
Matrix compressed_element(const RankOneSeparableMeasurement& m, Index i);

// The two completeness consequences every valid measurement satisfies:
//   sum_i <a_i,b_i> a_i b_i^* = I   and   sum_i |<a_i,b_i>|^2 = n.
struct IdentityReport {
  double sum_sq_overlaps = 0.0;
  double map_residual = 0.0;
  bool violation = false;
};

IdentityReport identity_report(const RankOneSeparableMeasurement& m,
                               const ToleranceConfig& tol = default_tolerance());

// Scans all outcome pairs and returns the one maximizing the normalized
// commutator norm of the Q-compressed elements. Requires n >= 3 and
// pairwise linearly independent directions (run merge_proportional first).
// Throws CertificateSearchError if nothing clears k_commutator_accept.
Certificate find_noncommuting_pair(const RankOneSeparableMeasurement& m,
                                   const ToleranceConfig& tol = default_tolerance());

// Off-diagonal structure of the compressed elements in the basis
// {u_1,...,u_{n^2-1}, v}: a perfectly distinguishing measurement would
// force every off-diagonal entry to vanish, so the maxima quantify failure.
struct DiagonalizationReport {
  RealVector max_off_diagonal_per_outcome;
  double max_off_diagonal = 0.0;
  // largest magnitude in the appended maximally-entangled row/column
  double max_v_entry = 0.0;
};

DiagonalizationReport diagonalization_report(
    const std::vector<BipartiteVector>& basis, const RankOneSeparableMeasurement& m,
    const Partition& p, const ToleranceConfig& tol = default_tolerance());

struct HarnessRecord {
  std::uint64_t basis_seed = 0;
  std::uint64_t measurement_seed = 0;
  double mean_diagonal = 0.0;
  double min_diagonal = 0.0;
  double max_off_diagonal = 0.0;
  bool perfect = false;
};

struct HarnessSummary {
  Index n = 0;
  std::vector<HarnessRecord> records;
  Index perfect_hits = 0;
  double max_mean_diagonal = 0.0;
  double min_mean_diagonal = 0.0;
};

// For every (basis seed, measurement seed) pair: random basis of ran(Q),
// sampled one-round measurement (merged), best partition (exhaustive under
// the assignment cap, greedy otherwise), confusion evaluated. A perfect
// hit would contradict the impossibility result and signals an
// implementation bug; hits are counted, never asserted away.
HarnessSummary theorem_harness(Index n, const std::vector<std::uint64_t>& basis_seeds,
                               const std::vector<std::uint64_t>& measurement_seeds,
                               const ToleranceConfig& tol = default_tolerance());

// Sanity control: the full-space standard product basis measured by the
// matching product measurement registers a perfect hit, proving the
// harness can detect success.
DistinguishabilityReport theorem_harness_control(
    Index n, const ToleranceConfig& tol = default_tolerance());

}  // namespace loccdist
