// Separable and rank-one separable measurements, outcome partitions, and the
// perfect-distinguishability check.
//
// Sign convention, used everywhere: the element attached to a local pair
// (a, b) is  a a^* (x) conj(b) b^T,  the rank-one projector onto the
// direction a (x) conj(b). Under vec this acts as
// vec(M) -> vec(a a^* M b b^*). Mixing this with the unconjugated form
// silently breaks every overlap formula downstream, so b is stored such
// that Bob's measured vector is conj(b).
//
// POVM weights are carried in the vector norms; a and b need not be unit.

#pragma once

#include "loccdist/bipartite.hpp"
#include "loccdist/types.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace loccdist {

struct LocalPair {
  Vector a;
  Vector b;
};

struct RankOneSeparableMeasurement {
  BipartiteSpace space;
  std::vector<LocalPair> pairs;

  Index size() const { return static_cast<Index>(pairs.size()); }
  // a_i (x) conj(b_i)
  Vector direction(Index i) const;
  // direction(i) direction(i)^*
  Matrix element(Index i) const;

  // Validating constructor: throws if the elements do not sum to the
  // identity within equality_atol.
  static RankOneSeparableMeasurement checked(
      BipartiteSpace space, std::vector<LocalPair> pairs,
      const ToleranceConfig& tol = default_tolerance());
};

// Frobenius norm of (sum of elements - identity). Throws on dimension
// mismatch among the pairs or an empty pair list.
double validate(const RankOneSeparableMeasurement& m);

// General separable measurement with PSD local factors (A_i, B_i).
struct SeparableMeasurement {
  BipartiteSpace space;
  std::vector<std::pair<Matrix, Matrix>> elements;
};

double validate(const SeparableMeasurement& m);

// Disjoint outcome classes covering {0,...,N-1}; classes may be empty.
struct Partition {
  std::vector<std::vector<Index>> classes;

  Index num_classes() const { return static_cast<Index>(classes.size()); }
  Index num_outcomes() const;
  // throws unless classes are disjoint and cover {0,...,n_outcomes-1}
  void validate(Index n_outcomes) const;
  // class index of an outcome
  Index class_of(Index outcome) const;

  static Partition single_class(Index n_outcomes);
  static Partition singletons(Index n_outcomes);
};

struct RefineResult {
  RankOneSeparableMeasurement measurement;
  Partition partition;
};

// Spectral refinement: each A_i (x) B_i is split into rank-one fragments
// via eigendecompositions of the local factors; fragments inherit the
// class of their parent outcome. Eigenvalues below 1e-12 x max are dropped.
RefineResult refine_to_rank_one(const SeparableMeasurement& m, const Partition& p,
                                const ToleranceConfig& tol = default_tolerance());

struct MergeResult {
  RankOneSeparableMeasurement measurement;
  Partition partition;
  // proportional outcome pairs (original indices) in different classes;
  // these cannot be merged without changing distinguishing semantics
  std::vector<std::pair<Index, Index>> conflicts;
};

// Merges outcomes whose directions a_i (x) conj(b_i) are proportional
// (smallest singular value of the two-column matrix below
// independence_rtol x largest) and that sit in the same class; the merged
// pair preserves the summed element. Cross-class proportional pairs are
// reported, not merged.
MergeResult merge_proportional(const RankOneSeparableMeasurement& m, const Partition& p,
                               const ToleranceConfig& tol = default_tolerance());

struct DistinguishabilityReport {
  // confusion(k, l) = u_k^* (sum over class l) u_k
  RealMatrix confusion;
  bool perfect = false;
  double max_off_diagonal = 0.0;
  double min_diagonal = 0.0;
  // |<u_k, direction_i>|^2 for every state/outcome pair
  RealMatrix state_outcome_overlap;
  // max overlap over (k, i) with outcome i outside class k
  double max_cross_class_overlap = 0.0;

  double mean_diagonal() const { return confusion.diagonal().mean(); }
};

// Evaluates the confusion matrix of a basis against a measurement under a
// partition; perfect iff |confusion - I|_max < equality_atol. Throws if the
// basis is not orthonormal or the class count differs from the basis size.
DistinguishabilityReport check_perfect(
    const std::vector<BipartiteVector>& basis, const RankOneSeparableMeasurement& m,
    const Partition& p, const ToleranceConfig& tol = default_tolerance());

// One-round conditional measurement: Alice measures the orthonormal basis
// given by the columns of alice_basis; Bob, on outcome s, measures the
// orthonormal basis given by the columns of bob_bases[s].
RankOneSeparableMeasurement conditional_measurement(
    const Matrix& alice_basis, const std::vector<Matrix>& bob_bases,
    const ToleranceConfig& tol = default_tolerance());

// Both parties measure the standard basis: pairs (e_s, e_t).
RankOneSeparableMeasurement product_measurement(Index n);

// Haar-random Alice basis with Haar-random conditional Bob bases;
// deterministic per seed. N = n^2 outcomes, valid by construction.
RankOneSeparableMeasurement sample_one_round_measurement(Index n, std::uint64_t seed);

// Assigns each outcome i to the class argmax_k |<u_k, direction_i>|^2
// (ties to the lowest class). Over all outcome->class assignments this
// maximizes the mean confusion diagonal, so a perfect partition exists iff
// the greedy one is perfect.
Partition greedy_partition(const std::vector<BipartiteVector>& basis,
                           const RankOneSeparableMeasurement& m);

struct PartitionSearchResult {
  Partition best;          // maximizes the mean confusion diagonal
  bool any_perfect = false;
  std::uint64_t assignments = 0;
};

// Enumerates every outcome->class assignment when m^N <= cap; returns
// nullopt above the cap.
std::optional<PartitionSearchResult> exhaustive_best_partition(
    const std::vector<BipartiteVector>& basis, const RankOneSeparableMeasurement& m,
    std::uint64_t cap = 1'000'000,
    const ToleranceConfig& tol = default_tolerance());

}  // namespace loccdist
