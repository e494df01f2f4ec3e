#pragma once

#include <cstdint>

namespace strom {

/// Seeded pseudo-random generator with a pinned algorithm (splitmix64) so
/// that sequences are reproducible across platforms and standard libraries.
/// std::uniform_int_distribution is deliberately not used anywhere: its
/// output is implementation-defined and would break replayable seeds.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, n). n must be nonzero. Multiply-high reduction:
  /// deterministic, and the bias is below 2^-64 for any n we use.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  /// Uniform double in [0, 1) with 53 bits of precision.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool next_bool() { return (next_u64() & 1) != 0; }

  /// Derives an independent stream for a sub-task (e.g. run index) without
  /// disturbing this generator.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed ^ (0xa0761d6478bd642fULL * (index + 1)));
    return r.next_u64();
  }

private:
  std::uint64_t state_;
};

}  // namespace strom
