#pragma once

// Seeded generators. Streams are split from a master seed with SplitMix64 so
// that results depend only on (seed, stream index), never on scheduling.

#include <cmath>
#include <cstdint>
#include <random>

namespace smalldev {

using Engine = std::mt19937_64;

inline constexpr const char* kGeneratorName = "mt19937_64/splitmix64";

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(splitmix64(master) ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

inline Engine make_engine(std::uint64_t master, std::uint64_t stream = 0) {
  return Engine(derive_seed(master, stream));
}

/// Uniform on [0, 1) from the top 53 bits; identical on every standard library.
inline double uniform01(Engine& eng) { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

inline double uniform(Engine& eng, double lo, double hi) { return lo + (hi - lo) * uniform01(eng); }

/// Integer uniform on [lo, hi].
inline std::uint64_t uniform_int(Engine& eng, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return eng();
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t x = eng();
  while (x >= limit) x = eng();
  return lo + x % span;
}

inline double exponential01(Engine& eng) { return -std::log1p(-uniform01(eng)); }

}  // namespace smalldev
