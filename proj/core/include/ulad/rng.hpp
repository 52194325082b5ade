#ifndef ULAD_RNG_HPP
#define ULAD_RNG_HPP

#include <array>
#include <cstdint>

namespace ulad {

/// xoshiro256++ (Blackman & Vigna) seeded through the splitmix64 finalizer.
///
/// Monte Carlo code derives one independent generator per (seed, stream,
/// trial) triple via for_stream(), so results do not depend on how trials are
/// distributed over worker threads.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& w : state_) {
      x += 0x9E3779B97F4A7C15ULL;
      w = mix64(x);
    }
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0)
      state_[0] = 0x9E3779B97F4A7C15ULL;
  }

  /// Counter-based stream derivation: identical (seed, stream, index) always
  /// yields the same generator, regardless of caller threading.
  static Xoshiro256pp for_stream(std::uint64_t seed, std::uint64_t stream,
                                 std::uint64_t index) {
    std::uint64_t k = mix64(seed + 0x9E3779B97F4A7C15ULL);
    k = mix64(k ^ (stream + 0xD1B54A32D192ED03ULL));
    k = mix64(k ^ (index + 0x8CB92BA72F3D8DD7ULL));
    return Xoshiro256pp(k);
  }

  std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double strictly inside (0,1); safe to pass to log().
  double uniform_open() noexcept {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  static std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  static std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace ulad

#endif
