#ifndef BOXICITY_RNG_HPP
#define BOXICITY_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

namespace boxicity {

/// Seeded generator with a bit-reproducible output sequence.
///
/// The engine is mt19937_64, whose sequence is fixed by the C++ standard.
/// The standard distributions are implementation-defined, so bounded and
/// real draws are derived here directly from the raw 64-bit output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    // Reject the low residue class so every value has equal weight.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) {
        return x % bound;
      }
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer; used to spread derived seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of the substream identified by (seed, path...). Distinct paths give
/// unrelated seeds, so substreams can be drawn in any order or concurrently.
inline std::uint64_t derive_seed(std::uint64_t seed,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = mix64(seed);
  for (const std::uint64_t p : path) {
    s = mix64(s ^ mix64(p + 0x632be59bd9b4e019ULL));
  }
  return s;
}

}  // namespace boxicity

#endif  // BOXICITY_RNG_HPP
