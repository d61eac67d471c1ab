// Channels as isometry realizations Phi(X) = tr_B U X U^*, their Choi
// matrices, environment-unitary equivalence of realizations, and the
// suboptimal-corrected-capacity witness built on the traceless subspace.

#pragma once

#include "loccdist/measurement.hpp"
#include "loccdist/types.hpp"

#include <cstdint>
#include <vector>

namespace loccdist {

// Realizations describing the same channel must have Choi matrices within
// this Frobenius distance.
inline constexpr double k_choi_match_tol = 1e-8;

// Residual bound for the recovered environment unitary.
inline constexpr double k_recovery_tol = 1e-8;

struct ChannelRealization {
  // (n_a * n_b) x d_x isometry; output factor A first, environment B second
  Matrix isometry;
  Index d_x = 0;
  Index n_a = 0;
  Index n_b = 0;

  static ChannelRealization checked(Matrix isometry, Index d_x, Index n_a, Index n_b,
                                    const ToleranceConfig& tol = default_tolerance());
};

struct ChoiMatrix {
  Matrix j;  // (n_a * d_x) x (n_a * d_x), Hermitian PSD, trace d_x when TP
};

struct BasisChoice {
  enum class Kind { canonical, random };
  Kind kind = Kind::canonical;
  std::uint64_t seed = 0;

  static BasisChoice canonical() { return {Kind::canonical, 0}; }
  static BasisChoice random(std::uint64_t seed) { return {Kind::random, seed}; }
};

// Isometry whose columns are an orthonormal basis of ran(Q): d_x = n^2 - 1,
// range contained in ran(Q). Throws for n < 2; n = 2 is allowed but the
// suboptimality statement needs n >= 3.
ChannelRealization build_counterexample_channel(
    Index n, const BasisChoice& basis = BasisChoice::canonical());

// Phi(X) = tr_B(U X U^*).
Matrix apply_channel(const ChannelRealization& r, const Matrix& x);

// Computed two ways as a built-in self check: the sum formula
// J = sum_{i,j} Phi(E_{i,j}) (x) E_{i,j} and the purification formula
// tr over the environment factor of vec(U) vec(U)^*; the two must agree.
ChoiMatrix choi(const ChannelRealization& r,
                const ToleranceConfig& tol = default_tolerance());

// Given two realizations of the same channel, returns the environment
// unitary W with ||A - (I (x) W) B|| < k_recovery_tol. Throws
// ChannelMismatchError if the Choi matrices differ, RecoveryError if the
// residual stays above tolerance.
Matrix recover_environment_unitary(const ChannelRealization& a,
                                   const ChannelRealization& b,
                                   const ToleranceConfig& tol = default_tolerance());

// Lifts an orthonormal input basis through the isometry and delegates to
// check_perfect. For the counterexample channel no witness is ever perfect.
DistinguishabilityReport corrected_capacity_witness(
    const ChannelRealization& r, const std::vector<Vector>& input_basis,
    const RankOneSeparableMeasurement& m, const Partition& p,
    const ToleranceConfig& tol = default_tolerance());

struct WitnessSweepRecord {
  std::uint64_t measurement_seed = 0;
  double mean_diagonal = 0.0;
  bool perfect = false;
};

struct WitnessSweepSummary {
  Index trials = 0;
  Index perfect_hits = 0;
  double max_mean_diagonal = 0.0;
  std::vector<WitnessSweepRecord> records;
};

// Standard input basis lifted through r, checked against `trials` sampled
// one-round measurements with greedy partitions. Requires a square A/B
// split (the sampler is square-only).
WitnessSweepSummary witness_sweep(const ChannelRealization& r, Index trials,
                                  std::uint64_t seed,
                                  const ToleranceConfig& tol = default_tolerance());

}  // namespace loccdist
