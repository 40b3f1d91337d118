#pragma once

#include <cstdint>

namespace pitse {

// Counter-style splittable RNG built on the splitmix64 step function.
// Every consumer derives an independent substream from (seed, stream, index),
// so outputs are reproducible bit-for-bit regardless of evaluation order.
class Rng {
  public:
    explicit Rng(std::uint64_t state) : state_(state) {}

    std::uint64_t next_u64();

    // Uniform on [0, 1).
    double uniform();
    double uniform(double lo, double hi);

    // Standard normal via Box-Muller; the second variate of each pair is cached.
    double normal();

  private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// Named substreams used across the library. Values are part of the
// reproducibility contract: changing them changes every derived sample.
enum class Stream : std::uint64_t {
    branch_weights = 1,
    trunk_weights = 2,
    theta = 3,
    mask = 4,
    function = 5,
    physics = 6,
    eval_function = 7,
    test = 99,
};

std::uint64_t mix64(std::uint64_t z);

Rng substream(std::uint64_t seed, Stream stream, std::uint64_t index = 0);

}  // namespace pitse
