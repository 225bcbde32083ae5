#pragma once

#include <cstdint>
#include <random>

#include "bcb/model.hpp"

namespace bcb {

using Engine = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent substream seed for (master, index); used so that trial i
// draws the same numbers no matter which worker runs it.
inline RngSeed derive_seed(RngSeed master, std::uint64_t index) {
  return RngSeed{splitmix64(splitmix64(master.value) ^ splitmix64(index + 0x632be59bd9b4e019ULL))};
}

inline Engine make_engine(RngSeed seed) { return Engine(splitmix64(seed.value)); }

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(Engine& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace bcb
