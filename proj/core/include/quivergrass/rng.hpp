#pragma once

#include <cstdint>
#include <random>

namespace quivergrass {

/// mt19937_64 with a platform-independent bounded draw, so a seed yields the
/// same representation everywhere (std::uniform_int_distribution does not).
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi].
  std::int64_t draw(std::int64_t lo, std::int64_t hi) {
    const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % range);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace quivergrass
