#pragma once

#include <cstdint>

namespace lattice_hardy {

/// Seed for item `index` of a batch started from `seed` (splitmix64 mixing),
/// so every item is reproducible on its own and independent of thread count.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace lattice_hardy
