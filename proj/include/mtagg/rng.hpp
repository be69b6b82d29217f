#ifndef MTAGG_RNG_HPP_
#define MTAGG_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>

namespace mtagg::rng {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

/// Order-sensitive hash of a seed and any number of stream coordinates.
template <class... Parts>
constexpr std::uint64_t derive(std::uint64_t seed, Parts... parts) noexcept {
  std::uint64_t h = splitmix64(seed);
  ((h = splitmix64(h ^ splitmix64(static_cast<std::uint64_t>(parts)))), ...);
  return h;
}

/// An independent, reproducible random stream. mt19937_64 output is fixed by
/// the standard; bounded draws below avoid the implementation-defined
/// std::uniform_int_distribution so results agree across standard libraries.
class Stream {
 public:
  explicit Stream(std::uint64_t state) : engine_(state) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound), bound > 0 (Lemire's method).
  std::uint64_t below(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mtagg::rng

#endif  // MTAGG_RNG_HPP_
