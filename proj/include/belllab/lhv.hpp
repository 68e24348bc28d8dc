// Copyright 2026 The bell-lab Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BELLLAB_LHV_HPP
#define BELLLAB_LHV_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "belllab/chsh.hpp"
#include "belllab/rng.hpp"

namespace belllab
{

// Predetermined +-1 outcomes for all four observables at once.
struct DeterministicStrategy
{
  int a = 1;
  int a_prime = 1;
  int b = 1;
  int b_prime = 1;

  // ab + a'b + ab' - a'b'
  int chsh() const { return a * b + a_prime * b + a * b_prime - a_prime * b_prime; }
};

// All 16 strategies, ordered by the bit pattern (a, a', b, b') with -1 < +1.
std::array<DeterministicStrategy, 16> all_chsh_strategies();

// Max of the CHSH combination over all deterministic strategies (exactly 2).
double chsh_deterministic_max();

// Max over {-1,+1}^{2n} of Im prod_j (a_j + i a'_j), evaluated in exact integer
// arithmetic. 1 <= n <= 12.
double mermin_deterministic_max(int n);

// Local model: a hidden value lambda is drawn once per pair and each party's
// outcome depends only on its own setting and lambda.
struct HiddenVariableModel
{
  std::string name;
  std::function<double(RandomStream &)> sample;
  std::function<int(Angle, double)> alice;
  std::function<int(Angle, double)> bob;
};

// lambda uniform on [0, 2pi); Alice answers sign(cos(setting - lambda)), Bob the negative.
// Correlation E(a, b) = -1 + 2|a - b|/pi for |a - b| <= pi.
HiddenVariableModel sign_model();

struct ChshEstimate
{
  double s = 0.0;
  double stderr_s = 0.0;
  std::uint64_t samples = 0;
};

// Monte Carlo average of the per-lambda CHSH combination. Every lambda answers
// all four settings. Samples are split over a fixed number of substreams, so the
// estimate is bit-identical for a given seed whatever the thread count.
ChshEstimate simulate_chsh(const HiddenVariableModel &model, const ChshSettings &settings,
                           std::uint64_t samples, std::uint64_t seed);

// Same as simulate_chsh, running the substreams one after another.
ChshEstimate simulate_chsh_serial(const HiddenVariableModel &model, const ChshSettings &settings,
                                  std::uint64_t samples, std::uint64_t seed);

inline constexpr std::uint64_t kMonteCarloSubstreams = 64;

}  // namespace belllab

#endif  // BELLLAB_LHV_HPP
