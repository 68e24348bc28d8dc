// Copyright 2026 The bell-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "belllab/linalg.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "belllab/error.hpp"

namespace belllab
{
namespace
{

const CMatrix kX = CMatrix::from_rows({{0, 1}, {1, 0}});
const CMatrix kY = CMatrix::from_rows({{0, -kI}, {kI, 0}});
const CMatrix kZ = CMatrix::from_rows({{1, 0}, {0, -1}});

CMatrix random_hermitian(std::size_t n, std::mt19937_64 &rng)
{
  std::normal_distribution<double> g;
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
  {
    m(i, i) = g(rng);
    for (std::size_t j = i + 1; j < n; ++j)
    {
      m(i, j) = Complex(g(rng), g(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

// Characteristic polynomial by Faddeev-LeVerrier, roots by Durand-Kerner.
// Shares nothing with the Jacobi sweep.
std::vector<double> charpoly_eigenvalues(const CMatrix &a)
{
  const std::size_t n = a.rows();
  std::vector<Complex> c(n + 1);
  c[n] = 1.0;
  CMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k)
  {
    CMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i)
    {
      next(i, i) += c[n - k + 1];
    }
    m = next;
    c[n - k] = -trace(a * m) / static_cast<double>(k);
  }
  auto p = [&](Complex z) {
    Complex v = c[n];
    for (std::size_t k = n; k-- > 0;)
    {
      v = v * z + c[k];
    }
    return v;
  };
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k)
  {
    z[k] = std::pow(Complex(0.4, 0.9), static_cast<double>(k)) * 3.0;
  }
  for (int it = 0; it < 2000; ++it)
  {
    for (std::size_t k = 0; k < n; ++k)
    {
      Complex den = 1.0;
      for (std::size_t j = 0; j < n; ++j)
      {
        if (j != k)
        {
          den *= z[k] - z[j];
        }
      }
      z[k] -= p(z[k]) / den;
    }
  }
  std::vector<double> out;
  for (const auto &r : z)
  {
    out.push_back(r.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(CMatrix, RejectsWrongEntryCount)
{
  EXPECT_THROW(CMatrix(2, 2, std::vector<Complex>(3)), InvalidInput);
}

TEST(CMatrix, RejectsNonFiniteEntries)
{
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(CMatrix(1, 1, {Complex(nan, 0)}), InvalidInput);
}

TEST(Tensor, IndexConventionPutsLeftFactorOnHighIndex)
{
  const CMatrix zi = tensor(kZ, CMatrix::identity(2));
  EXPECT_EQ(zi(0, 0), Complex(1));
  EXPECT_EQ(zi(1, 1), Complex(1));
  EXPECT_EQ(zi(2, 2), Complex(-1));
  EXPECT_EQ(zi(3, 3), Complex(-1));
  const CMatrix xz = tensor(kX, kZ);
  EXPECT_EQ(xz(0, 2), Complex(1));
  EXPECT_EQ(xz(1, 3), Complex(-1));
}

TEST(Tensor, SpanFoldsLeftToRight)
{
  const std::vector<CMatrix> f{kX, kY, kZ};
  EXPECT_EQ(tensor(f), tensor(tensor(kX, kY), kZ));
}

TEST(Commutator, PauliAlgebra)
{
  EXPECT_LT((commutator(kX, kY) - 2.0 * kI * kZ).max_abs(), 1e-15);
  EXPECT_LT((commutator(kY, kZ) - 2.0 * kI * kX).max_abs(), 1e-15);
  EXPECT_LT((commutator(kZ, kX) - 2.0 * kI * kY).max_abs(), 1e-15);
}

TEST(Commutator, DimensionMismatchThrows)
{
  EXPECT_THROW(commutator(kX, CMatrix::identity(3)), InvalidInput);
}

TEST(Ket, NormalizesAndRejectsZero)
{
  const Ket k = Ket::normalized({3.0, 4.0 * kI});
  EXPECT_NEAR(k.norm_squared(), 1.0, 1e-15);
  EXPECT_NEAR(k[0].real(), 0.6, 1e-15);
  EXPECT_THROW(Ket::normalized({0.0, 0.0}), InvalidInput);
  EXPECT_THROW(Ket::normalized({}), InvalidInput);
}

TEST(Expectation, DimensionMismatchThrows)
{
  EXPECT_THROW(expectation(Ket::basis(2, 0), CMatrix::identity(4)), InvalidInput);
}

TEST(Expectation, PauliOnBasisStates)
{
  EXPECT_NEAR(expectation(Ket::basis(2, 0), kZ).real(), 1.0, 1e-15);
  EXPECT_NEAR(expectation(Ket::basis(2, 1), kZ).real(), -1.0, 1e-15);
  const Ket plus = Ket::normalized({1.0, 1.0});
  EXPECT_NEAR(expectation(plus, kX).real(), 1.0, 1e-15);
}

TEST(Dagger, TraceAndAdjoint)
{
  const CMatrix m = CMatrix::from_rows({{1, 2.0 * kI}, {3, 4}});
  const CMatrix d = dagger(m);
  EXPECT_EQ(d(0, 1), Complex(3));
  EXPECT_EQ(d(1, 0), -2.0 * kI);
  EXPECT_EQ(trace(m), Complex(5));
}

TEST(Eigen, PauliSpectra)
{
  for (const auto &p : {kX, kY, kZ})
  {
    const auto ev = hermitian_eigenvalues(p);
    ASSERT_EQ(ev.size(), 2U);
    EXPECT_NEAR(ev[0], -1.0, 1e-14);
    EXPECT_NEAR(ev[1], 1.0, 1e-14);
  }
}

TEST(Eigen, MatchesCharacteristicPolynomialOracle)
{
  std::mt19937_64 rng(20261019);
  for (std::size_t n : {2U, 3U, 4U, 6U})
  {
    for (int rep = 0; rep < 5; ++rep)
    {
      const CMatrix m = random_hermitian(n, rng);
      const auto jac = hermitian_eigenvalues(m);
      const auto ref = charpoly_eigenvalues(m);
      ASSERT_EQ(jac.size(), n);
      for (std::size_t i = 0; i < n; ++i)
      {
        EXPECT_NEAR(jac[i], ref[i], 1e-8) << "n=" << n << " i=" << i;
      }
    }
  }
}

TEST(Eigen, ResidualOfReconstructedSpectrum)
{
  // trace and trace of the square are fixed by the spectrum
  std::mt19937_64 rng(5);
  const CMatrix m = random_hermitian(16, rng);
  const auto ev = hermitian_eigenvalues(m);
  double s1 = 0.0, s2 = 0.0;
  for (double e : ev)
  {
    s1 += e;
    s2 += e * e;
  }
  EXPECT_NEAR(s1, trace(m).real(), 1e-10);
  EXPECT_NEAR(s2, trace(m * m).real(), 1e-9);
  EXPECT_TRUE(std::is_sorted(ev.begin(), ev.end()));
}

TEST(Eigen, DegenerateSpectrum)
{
  const auto ev = hermitian_eigenvalues(tensor(kZ, kZ));
  EXPECT_NEAR(ev[0], -1.0, 1e-14);
  EXPECT_NEAR(ev[1], -1.0, 1e-14);
  EXPECT_NEAR(ev[2], 1.0, 1e-14);
  EXPECT_NEAR(ev[3], 1.0, 1e-14);
}

TEST(Eigen, RejectsNonHermitian)
{
  EXPECT_THROW(hermitian_eigenvalues(CMatrix::from_rows({{0, 1}, {0, 0}})), InvalidInput);
}

TEST(Eigen, ExtremalIsLargestMagnitude)
{
  const CMatrix m = CMatrix::from_rows({{-3, 0}, {0, 2}});
  EXPECT_NEAR(hermitian_extremal_eigenvalue(m), 3.0, 1e-15);
}

}  // namespace
}  // namespace belllab
