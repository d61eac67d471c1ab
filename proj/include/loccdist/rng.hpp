// Seeded randomness with a fully pinned bit stream: mt19937_64 plus a
// hand-rolled Box-Muller, so outputs depend only on the seed and not on
// standard-library distribution internals.

#pragma once

#include "loccdist/types.hpp"

#include <cstdint>
#include <random>

namespace loccdist {

// splitmix64 finalizer; derives independent substream seeds from (seed, stream).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // uniform in [0, 1)
  double uniform();
  // standard normal (Box-Muller)
  double normal();
  // complex with independent standard normal real/imaginary parts
  Complex complex_normal();
  std::uint64_t integer();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

Matrix random_gaussian_matrix(Index rows, Index cols, Rng& rng);

// Haar-distributed unitary: QR of a complex Gaussian matrix with the R
// diagonal phases folded into Q.
Matrix random_unitary(Index dim, Rng& rng);

Vector random_unit_vector(Index dim, Rng& rng);

// G G^* for Gaussian G; generic full-rank PSD test input.
Matrix random_psd(Index dim, Rng& rng);

}  // namespace loccdist
