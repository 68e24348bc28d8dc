// Copyright 2026 The bell-lab Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BELLLAB_RNG_HPP
#define BELLLAB_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace belllab
{

// Recorded in CLI metadata so Monte Carlo output can be traced to its generator.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64/splitmix64-substreams";

inline std::uint64_t splitmix64(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream for (seed, substream). Doubles are built from the top 53
// bits so results do not depend on the standard library's distributions.
class RandomStream
{
public:
  RandomStream(std::uint64_t seed, std::uint64_t substream)
    : engine_(splitmix64(splitmix64(seed) ^ splitmix64(substream + 0x632be59bd9b4e019ULL)))
  {
  }

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::uint64_t next() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

}  // namespace belllab

#endif  // BELLLAB_RNG_HPP
