// Copyright 2026 The bell-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "belllab/fock.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "belllab/chsh.hpp"
#include "belllab/error.hpp"

namespace belllab
{
namespace
{

constexpr double kPi = std::numbers::pi;

BeamSplitterSpec random_bs(std::mt19937_64 &rng)
{
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return BeamSplitterSpec::from_transmission(u(rng), u(rng));
}

TEST(FockBasis, SizeOrderAndLookup)
{
  const FockBasis b(2);
  EXPECT_EQ(b.size(), 15U);
  EXPECT_EQ(b.state(0), (Occupation{0, 0, 0, 0}));
  EXPECT_EQ(b.state(1), (Occupation{0, 0, 0, 1}));
  EXPECT_EQ(b.state(14), (Occupation{2, 0, 0, 0}));
  for (std::size_t i = 0; i < b.size(); ++i)
  {
    EXPECT_EQ(b.index_of(b.state(i)), i);
    if (i > 0)
    {
      EXPECT_LT(b.state(i - 1), b.state(i));
    }
  }
  EXPECT_FALSE(b.index_of({1, 1, 1, 0}).has_value());
  EXPECT_EQ(FockBasis(3).size(), 35U);
}

TEST(ModeIndex, ValidatesDetector)
{
  EXPECT_THROW(ModeIndex(0, Polarization::x), InvalidInput);
  EXPECT_EQ(ModeIndex(2, Polarization::y).ordinal(), 3U);
}

TEST(Ladder, CanonicalCommutatorBelowTruncation)
{
  const FockBasis b(2);
  for (int det : {1, 2})
  {
    for (auto pol : {Polarization::x, Polarization::y})
    {
      const ModeIndex m(det, pol);
      const CMatrix c = commutator(annihilation(m, b), creation(m, b));
      for (std::size_t i = 0; i < b.size(); ++i)
      {
        const auto &s = b.state(i);
        if (s[0] + s[1] + s[2] + s[3] < 2)
        {
          for (std::size_t j = 0; j < b.size(); ++j)
          {
            EXPECT_NEAR(std::abs(c(j, i) - Complex(i == j ? 1.0 : 0.0)), 0.0, 1e-15);
          }
        }
      }
    }
  }
}

TEST(Ladder, DifferentModesCommute)
{
  const FockBasis b(2);
  const CMatrix a1 = annihilation(ModeIndex(1, Polarization::x), b);
  const CMatrix a2 = annihilation(ModeIndex(2, Polarization::y), b);
  EXPECT_LT(commutator(a1, a2).max_abs(), 1e-15);
}

TEST(BeamSplitter, Validates)
{
  EXPECT_THROW(BeamSplitterSpec(0.5, 0.6, 0.5, 0.5), InvalidInput);
  EXPECT_THROW(BeamSplitterSpec(-0.1, 1.1, 0.5, 0.5), InvalidInput);
  EXPECT_NO_THROW(BeamSplitterSpec(0.3, 0.7, 1.0, 0.0));
}

TEST(OuMandel, StateIsNormalized)
{
  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i)
  {
    EXPECT_NEAR(ou_mandel_state(random_bs(rng)).norm_squared(), 1.0, 1e-14);
  }
}

TEST(OuMandel, ProbabilityMatchesClosedForm)
{
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 5; ++rep)
  {
    const BeamSplitterSpec bs = random_bs(rng);
    const FockState st = ou_mandel_state(bs);
    for (int i = 0; i <= 12; ++i)
    {
      for (int j = 0; j <= 12; ++j)
      {
        const Angle t1 = Angle::degrees(15.0 * i), t2 = Angle::degrees(15.0 * j);
        EXPECT_NEAR(coincidence_probability(st, t1, t2), coincidence_probability_closed_form(bs, t1, t2),
                    1e-12);
      }
    }
  }
}

TEST(OuMandel, EqualSplitProbabilityIsQuarterSineSquared)
{
  const FockState st = ou_mandel_state(BeamSplitterSpec::from_transmission(0.5, 0.5));
  const Angle t1 = Angle::degrees(20), t2 = Angle::degrees(55);
  const double s = std::sin(t1.radians() + t2.radians());
  EXPECT_NEAR(coincidence_probability(st, t1, t2), 0.25 * s * s, 1e-15);
}

TEST(OuMandel, EqualSplitCorrelation)
{
  const FockState st = ou_mandel_state(BeamSplitterSpec::from_transmission(0.5, 0.5));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, kPi);
  for (int i = 0; i < 100; ++i)
  {
    const double t1 = u(rng), t2 = u(rng);
    EXPECT_NEAR(coincidence_correlation(st, Angle(t1), Angle(t2)), std::cos(2 * (t1 + t2)), 1e-12);
  }
}

TEST(OuMandel, SubspaceKetWithPlainAnalyzersGivesOppositeSign)
{
  const FockState st = ou_mandel_state(BeamSplitterSpec::from_transmission(0.5, 0.5));
  const Ket k = coincidence_subspace_ket(st);
  const double t1 = 0.3, t2 = 1.1;
  EXPECT_NEAR(correlation(k, Angle(t1), Angle(t2), MeasurementKind::photon), -std::cos(2 * (t1 + t2)), 1e-12);
}

TEST(OuMandel, NoCoincidencesIsUndefined)
{
  // x transmitted, y reflected: both photons reach detector 1
  const FockState st = ou_mandel_state(BeamSplitterSpec(1.0, 0.0, 0.0, 1.0));
  EXPECT_THROW(coincidence_correlation(st, Angle(0.2), Angle(0.4)), UndefinedCorrelation);
}

TEST(Factorization, ProductStateEqualsDirectState)
{
  std::mt19937_64 rng(4);
  for (int rep = 0; rep < 100; ++rep)
  {
    const BeamSplitterSpec bs = random_bs(rng);
    const FockState a = ou_mandel_state(bs);
    const FockState b = product_state(bs);
    ASSERT_EQ(a.basis(), b.basis());
    for (std::size_t i = 0; i < a.basis().size(); ++i)
    {
      EXPECT_LT(std::abs(a.amplitudes()[i] - b.amplitudes()[i]), 1e-12);
    }
  }
}

TEST(PairProduct, PumpAlongZPairsOppositeClockAngles)
{
  const PairProductState s(clock_angle(3), {0, 0, 1});
  EXPECT_NEAR(s.idler_clock_angle().radians(), -kPi / 2, 1e-15);
  const double on = std::abs(pair_product_amplitude(s, clock_angle(3), clock_angle(9)));
  const double off = std::abs(pair_product_amplitude(s, clock_angle(3), clock_angle(8)));
  EXPECT_GT(on, 1.0);
  EXPECT_LT(off, 1e-100);
  EXPECT_THROW(PairProductState(clock_angle(3), {0.1, 0, 1}), InvalidInput);
  EXPECT_THROW(PairProductState(clock_angle(3), {0, 0, 0}), InvalidInput);
}

TEST(Selection, AcceptsWithinHalfWidthWrapped)
{
  const SelectionSpec sel({clock_angle(0), clock_angle(6)}, 0.05);
  EXPECT_TRUE(apply_selection(sel, Angle(2 * kPi - 0.01)));
  EXPECT_TRUE(apply_selection(sel, Angle(kPi + 0.04)));
  EXPECT_FALSE(apply_selection(sel, clock_angle(3)));
  EXPECT_THROW(SelectionSpec({}, 0.0), InvalidInput);
}

}  // namespace
}  // namespace belllab
