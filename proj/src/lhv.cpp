// Copyright 2026 The bell-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "belllab/lhv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "belllab/error.hpp"

namespace belllab
{

std::array<DeterministicStrategy, 16> all_chsh_strategies()
{
  std::array<DeterministicStrategy, 16> out{};
  for (int mask = 0; mask < 16; ++mask)
  {
    auto bit = [mask](int k) { return (mask >> (3 - k)) & 1 ? 1 : -1; };
    out[static_cast<std::size_t>(mask)] = {bit(0), bit(1), bit(2), bit(3)};
  }
  return out;
}

double chsh_deterministic_max()
{
  int best = std::numeric_limits<int>::min();
  for (const auto &st : all_chsh_strategies())
  {
    best = std::max(best, st.chsh());
  }
  return best;
}

double mermin_deterministic_max(int n)
{
  if (n < 1 || n > 12)
  {
    throw InvalidInput("mermin_deterministic_max: n must lie in [1, 12], got " + std::to_string(n));
  }
  const std::int64_t assignments = std::int64_t{1} << (2 * n);
  std::int64_t best = std::numeric_limits<std::int64_t>::min();
#if defined(BELL_LAB_HAVE_OPENMP)
#pragma omp parallel for reduction(max : best) schedule(static)
#endif
  for (std::int64_t mask = 0; mask < assignments; ++mask)
  {
    // Gaussian-integer product prod_j (a_j + i a'_j)
    std::int64_t re = 1;
    std::int64_t im = 0;
    for (int j = 0; j < n; ++j)
    {
      const std::int64_t a = (mask >> (2 * j)) & 1 ? 1 : -1;
      const std::int64_t ap = (mask >> (2 * j + 1)) & 1 ? 1 : -1;
      const std::int64_t nre = re * a - im * ap;
      const std::int64_t nim = re * ap + im * a;
      re = nre;
      im = nim;
    }
    best = std::max(best, im);
  }
  return static_cast<double>(best);
}

HiddenVariableModel sign_model()
{
  auto response = [](Angle setting, double lambda) {
    return std::cos(setting.radians() - lambda) >= 0.0 ? 1 : -1;
  };
  return {"sign",
          [](RandomStream &rng) { return 2.0 * std::numbers::pi * rng.uniform(); },
          response,
          [response](Angle setting, double lambda) { return -response(setting, lambda); }};
}

namespace
{

struct ShardSums
{
  std::int64_t sum = 0;
  std::int64_t sum_sq = 0;
};

ShardSums run_shard(const HiddenVariableModel &model, const ChshSettings &st, std::uint64_t count,
                    std::uint64_t seed, std::uint64_t shard)
{
  RandomStream rng(seed, shard);
  ShardSums out;
  for (std::uint64_t k = 0; k < count; ++k)
  {
    const double lambda = model.sample(rng);
    const int a = model.alice(st.alpha, lambda);
    const int ap = model.alice(st.alpha_prime, lambda);
    const int b = model.bob(st.beta, lambda);
    const int bp = model.bob(st.beta_prime, lambda);
    const int v = a * b + ap * b + a * bp - ap * bp;
    if (v != 2 && v != -2)
    {
      throw NumericalFailure("simulate_chsh: model '" + model.name +
                             "' produced a non-dichotomic response");
    }
    out.sum += v;
    out.sum_sq += v * v;
  }
  return out;
}

std::uint64_t shard_size(std::uint64_t samples, std::uint64_t shard)
{
  const std::uint64_t base = samples / kMonteCarloSubstreams;
  return base + (shard < samples % kMonteCarloSubstreams ? 1 : 0);
}

ChshEstimate finish(const std::array<ShardSums, kMonteCarloSubstreams> &shards, std::uint64_t samples)
{
  std::int64_t sum = 0;
  std::int64_t sum_sq = 0;
  for (const auto &s : shards)
  {
    sum += s.sum;
    sum_sq += s.sum_sq;
  }
  const double n = static_cast<double>(samples);
  const double mean = static_cast<double>(sum) / n;
  double stderr_s = 0.0;
  if (samples > 1)
  {
    const double var = std::max(0.0, (static_cast<double>(sum_sq) / n - mean * mean) * n / (n - 1.0));
    stderr_s = std::sqrt(var / n);
  }
  return {mean, stderr_s, samples};
}

void check_samples(std::uint64_t samples)
{
  if (samples < 1)
  {
    throw InvalidInput("simulate_chsh: samples must be >= 1");
  }
}

}  // namespace

ChshEstimate simulate_chsh(const HiddenVariableModel &model, const ChshSettings &settings,
                           std::uint64_t samples, std::uint64_t seed)
{
  check_samples(samples);
  std::array<ShardSums, kMonteCarloSubstreams> shards{};
  const auto n_shards = static_cast<std::int64_t>(kMonteCarloSubstreams);
  bool failed = false;
  std::string failure;
#if defined(BELL_LAB_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
  for (std::int64_t k = 0; k < n_shards; ++k)
  {
    const auto shard = static_cast<std::uint64_t>(k);
    try
    {
      shards[shard] = run_shard(model, settings, shard_size(samples, shard), seed, shard);
    }
    catch (const std::exception &e)
    {
#if defined(BELL_LAB_HAVE_OPENMP)
#pragma omp critical(belllab_lhv_failure)
#endif
      {
        failed = true;
        failure = e.what();
      }
    }
  }
  if (failed)
  {
    throw NumericalFailure(failure);
  }
  return finish(shards, samples);
}

ChshEstimate simulate_chsh_serial(const HiddenVariableModel &model, const ChshSettings &settings,
                                  std::uint64_t samples, std::uint64_t seed)
{
  check_samples(samples);
  std::array<ShardSums, kMonteCarloSubstreams> shards{};
  for (std::uint64_t shard = 0; shard < kMonteCarloSubstreams; ++shard)
  {
    shards[shard] = run_shard(model, settings, shard_size(samples, shard), seed, shard);
  }
  return finish(shards, samples);
}

}  // namespace belllab
