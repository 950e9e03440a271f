#pragma once

#include <cstdint>
#include <random>

namespace barth {

/// Deterministic per-trial generator. Uses only the standard-specified
/// mt19937_64 engine and seed_seq, plus our own bounded draw, so results are
/// identical across standard libraries.
class TrialRng {
public:
  TrialRng(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial),
                      static_cast<std::uint32_t>(trial >> 32)};
    engine_.seed(seq);
  }

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
  }

private:
  std::mt19937_64 engine_;
};

} // namespace barth
