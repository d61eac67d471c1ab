// Stochastic search for the best one-round separable strategy
// distinguishing a given orthonormal family. Every reported value is an
// achievability lower bound: one-round conditional measurements are LOCC-
// realizable by construction.

#pragma once

#include "loccdist/measurement.hpp"
#include "loccdist/types.hpp"

#include <cstdint>
#include <vector>

namespace loccdist {

struct SearchConfig {
  // hill-climb budget per trial; 0 disables refinement
  Index refine_steps = 200;
  double step_radians = 0.05;
  double cooling = 0.9;
  Index cooling_interval = 20;
  // 0 = auto (LOCC_CERT_THREADS, then hardware)
  int threads = 0;
};

struct SearchResult {
  double best_probability = 0.0;
  RankOneSeparableMeasurement best_measurement;
  Partition best_partition;
  Index trials = 0;
  std::uint64_t seed = 0;
};

// Per trial: sample a one-round conditional measurement, evaluate it under
// the greedy partition, then hill-climb Alice's basis (small random
// rotations accepted on improvement, geometric cooling) with Bob's
// conditional bases rebuilt as the square-root-measurement response each
// step. Trials are independent and reduced by max with ties to the lower
// trial index, so the result is deterministic per (seed, trials) and
// monotone nondecreasing in trials.
SearchResult estimate_success(const std::vector<BipartiteVector>& basis, Index trials,
                              std::uint64_t seed, const SearchConfig& config = {},
                              const ToleranceConfig& tol = default_tolerance());

}  // namespace loccdist
