// Minimal deterministic fan-out for seed sweeps: work items are indexed,
// results land in index order, so the reduction never depends on thread
// scheduling.

#pragma once

#include <Eigen/Core>

#include <functional>

namespace loccdist {

// Effective worker count: `requested` if positive, else LOCC_CERT_THREADS,
// else hardware concurrency; always at least 1.
int thread_budget(int requested = 0);

void parallel_for(Eigen::Index count, const std::function<void(Eigen::Index)>& body,
                  int threads = 0);

}  // namespace loccdist
