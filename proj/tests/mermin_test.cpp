// Copyright 2026 The bell-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "belllab/mermin.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "belllab/error.hpp"

namespace belllab
{
namespace
{

constexpr double kPi = std::numbers::pi;

// On the GHZ state, <(x)_j A(a_j)> = sin(sum a_j) for x-y plane observables.
// Expanding F, only terms with an odd number k of primed factors survive, with
// sign (-1)^((k-1)/2).
double ghz_mermin_oracle(const MerminSettings &st)
{
  const int n = st.n();
  double f = 0.0;
  for (unsigned mask = 0; mask < (1U << n); ++mask)
  {
    const int k = __builtin_popcount(mask);
    if (k % 2 == 0)
    {
      continue;
    }
    double phase = 0.0;
    for (int j = 0; j < n; ++j)
    {
      phase += (mask >> j) & 1U ? st.pairs[j].second.radians() : st.pairs[j].first.radians();
    }
    f += ((k - 1) / 2 % 2 ? -1.0 : 1.0) * std::sin(phase);
  }
  return f;
}

MerminSettings random_pairs(int n, std::mt19937_64 &rng)
{
  std::uniform_real_distribution<double> u(0.0, 2 * kPi);
  MerminSettings st;
  for (int j = 0; j < n; ++j)
  {
    st.pairs.emplace_back(Angle(u(rng)), Angle(u(rng)));
  }
  return st;
}

TEST(Ghz, AmplitudesAndRange)
{
  const GhzState g = ghz(3);
  EXPECT_EQ(g.ket().dim(), 8U);
  EXPECT_NEAR(g.ket()[0].real(), 1 / std::numbers::sqrt2, 1e-15);
  EXPECT_NEAR(g.ket()[7].imag(), 1 / std::numbers::sqrt2, 1e-15);
  EXPECT_THROW(ghz(1), InvalidInput);
  EXPECT_THROW(ghz(kMaxGhzParticles + 1), InvalidInput);
}

TEST(MerminOperator, SingleParticleIsPrimedObservable)
{
  const CMatrix f = mermin_operator(MerminSettings::shared(1, Angle(0.3), Angle::degrees(90)));
  const CMatrix sy = CMatrix::from_rows({{0, -kI}, {kI, 0}});
  EXPECT_LT((f - sy).max_abs(), 1e-15);
}

TEST(MerminOperator, Hermitian)
{
  std::mt19937_64 rng(8);
  for (int n = 2; n <= 5; ++n)
  {
    EXPECT_LT(hermitian_residual(mermin_operator(random_pairs(n, rng))), 1e-13);
  }
}

TEST(MerminValue, MatchesPhaseSumOracle)
{
  std::mt19937_64 rng(9);
  for (int n = 2; n <= 6; ++n)
  {
    for (int rep = 0; rep < 20; ++rep)
    {
      const MerminSettings st = random_pairs(n, rng);
      EXPECT_NEAR(mermin_value(ghz(n), st), ghz_mermin_oracle(st), 1e-12) << "n=" << n;
    }
  }
}

TEST(MerminValue, QuantumMaximaAtQuarterTurn)
{
  EXPECT_NEAR(mermin_value(ghz(3), MerminSettings::shared(3, Angle(0.0), Angle::degrees(90))), 4.0, 1e-12);
  EXPECT_NEAR(std::abs(mermin_value(ghz(4), MerminSettings::shared(4, Angle(0.0), Angle::degrees(90)))), 8.0,
              1e-12);
}

TEST(MerminValue, ParticleCountMustMatch)
{
  EXPECT_THROW(mermin_value(ghz(3), MerminSettings::shared(4, Angle(0.0), Angle(0.0))), InvalidInput);
}

TEST(MerminOperator, SpectrumOfF3ReachesFour)
{
  const CMatrix f = mermin_operator(MerminSettings::shared(3, Angle(0.0), Angle::degrees(90)));
  EXPECT_NEAR(hermitian_extremal_eigenvalue(f), 4.0, 1e-12);
}

TEST(SquareIdentity, ResidualVanishes)
{
  std::mt19937_64 rng(10);
  for (int rep = 0; rep < 100; ++rep)
  {
    EXPECT_LT(mermin_square_residual(random_pairs(3, rng)), 1e-12);
  }
}

TEST(SquareIdentity, OnlyForThreeParticles)
{
  EXPECT_THROW(mermin_square_residual(MerminSettings::shared(4, Angle(0.0), Angle(1.0))), InvalidInput);
}

TEST(SharedScan, FindsTwoToTheNMinusOne)
{
  for (int n = 2; n <= 5; ++n)
  {
    const MerminScanResult r = mermin_shared_scan(n, Angle::degrees(45));
    EXPECT_NEAR(r.f_max, std::ldexp(1.0, n - 1), 1e-9) << "n=" << n;
  }
}

TEST(SharedScan, RejectsBadArguments)
{
  EXPECT_THROW(mermin_shared_scan(3, Angle(0.0)), InvalidInput);
  EXPECT_THROW(mermin_shared_scan(11, Angle::degrees(10)), InvalidInput);
}

}  // namespace
}  // namespace belllab
