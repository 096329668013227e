#ifndef RSCOVER_RNG_HPP
#define RSCOVER_RNG_HPP

#include <cstdint>
#include <limits>

namespace rscover {

/// Counter-based generator: output i of stream (seed, stream) is a fixed
/// mixing function of (seed, stream, i), so any trial's draws can be
/// reproduced without replaying earlier trials.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
      : key_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ULL))) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept {
    return mix(key_ + 0x9e3779b97f4a7c15ULL * ++counter_);
  }

  /// Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t limit = max() - max() % bound;
    std::uint64_t x;
    do x = (*this)();
    while (x >= limit);
    return x % bound;
  }

  /// Uniform double in [0, 1).
  double uniform() noexcept { return ((*this)() >> 11) * 0x1.0p-53; }

 private:
  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace rscover

#endif  // RSCOVER_RNG_HPP
