// Copyright 2026 The bell-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "belllab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "belllab/error.hpp"
#include "belllab/mermin.hpp"

#ifdef BELL_LAB_HAVE_OPENMP
#include <omp.h>
#endif

namespace belllab::kernels
{

int max_threads()
{
#ifdef BELL_LAB_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<double> angle_grid(double step)
{
  if (!(step > 0.0) || !std::isfinite(step))
  {
    throw InvalidInput("angle_grid: step must be positive");
  }
  const double two_pi = 2.0 * std::numbers::pi;
  const auto n = static_cast<std::size_t>(std::ceil(two_pi / step - 1e-9));
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k)
  {
    out[k] = static_cast<double>(k) * step;
  }
  return out;
}

std::vector<double> correlation_table(const Ket &psi, MeasurementKind kind,
                                      std::span<const double> angles)
{
  if (psi.dim() != 4)
  {
    throw InvalidInput("correlation_table: expected a two-qubit state");
  }
  const std::size_t n = angles.size();
  std::vector<CMatrix> ops;
  ops.reserve(n);
  for (double a : angles)
  {
    ops.push_back(measurement(kind, Angle(a)));
  }
  std::vector<double> table(n * n);
  const auto sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < sn; ++i)
  {
    for (std::size_t j = 0; j < n; ++j)
    {
      table[static_cast<std::size_t>(i) * n + j] =
          expectation(psi, tensor(ops[static_cast<std::size_t>(i)], ops[j])).real();
    }
  }
  return table;
}

namespace
{

void check_table(std::span<const double> table, std::size_t n)
{
  if (n == 0 || table.size() != n * n)
  {
    throw InvalidInput("chsh_grid_max: table is not n x n");
  }
}

template <std::size_t K>
bool better(double v, const std::array<std::size_t, K> &idx, double best_v,
            const std::array<std::size_t, K> &best_idx)
{
  return v > best_v || (v == best_v && idx < best_idx);
}

}  // namespace

ChshGridMax chsh_grid_max_serial(std::span<const double> table, std::size_t n)
{
  check_table(table, n);
  auto e = [&](std::size_t i, std::size_t j) { return table[i * n + j]; };
  ChshGridMax best{{0, 0, 0, 0}, -1.0};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t ap = 0; ap < n; ++ap)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t bp = 0; bp < n; ++bp)
        {
          const double s = (e(a, b) + e(ap, b)) + (e(a, bp) - e(ap, bp));
          if (std::abs(s) > best.abs_s)
          {
            best = {{a, ap, b, bp}, std::abs(s)};
          }
        }
  return best;
}

ChshGridMax chsh_grid_max_parallel(std::span<const double> table, std::size_t n)
{
  check_table(table, n);
  auto e = [&](std::size_t i, std::size_t j) { return table[i * n + j]; };
  ChshGridMax best{{0, 0, 0, 0}, -1.0};
  const auto sn = static_cast<std::ptrdiff_t>(n);

#pragma omp parallel
  {
    ChshGridMax local{{0, 0, 0, 0}, -1.0};
    std::vector<double> u(n);
    std::vector<double> w(n);
#pragma omp for schedule(dynamic, 1) nowait
    for (std::ptrdiff_t sa = 0; sa < sn; ++sa)
    {
      const auto a = static_cast<std::size_t>(sa);
      for (std::size_t ap = 0; ap < n; ++ap)
      {
        for (std::size_t j = 0; j < n; ++j)
        {
          u[j] = e(a, j) + e(ap, j);
          w[j] = e(a, j) - e(ap, j);
        }
        const auto [wmin_it, wmax_it] = std::minmax_element(w.begin(), w.end());
        const double wmin = *wmin_it;
        const double wmax = *wmax_it;
        // Rounded addition is monotone, so for each b the largest |u + w| sits
        // at wmin or wmax. That gives the exact maximum for this (a, a').
        double v = -1.0;
        std::size_t b_first = 0;
        for (std::size_t b = 0; b < n; ++b)
        {
          const double cand = std::max(std::abs(u[b] + wmax), std::abs(u[b] + wmin));
          if (cand > v)
          {
            v = cand;
            b_first = b;
          }
        }
        if (v < local.abs_s)
        {
          continue;
        }
        std::size_t bp_first = 0;
        for (std::size_t bp = 0; bp < n; ++bp)
        {
          if (std::abs(u[b_first] + w[bp]) == v)
          {
            bp_first = bp;
            break;
          }
        }
        const std::array<std::size_t, 4> idx{a, ap, b_first, bp_first};
        if (better(v, idx, local.abs_s, local.index))
        {
          local = {idx, v};
        }
      }
    }
#pragma omp critical
    {
      if (better(local.abs_s, local.index, best.abs_s, best.index))
      {
        best = local;
      }
    }
  }
  return best;
}

Complex sparse_product_expectation(const Ket &psi, std::span<const CMatrix> factors)
{
  const std::size_t n = factors.size();
  if (n == 0 || n >= 63 || psi.dim() != (std::size_t{1} << n))
  {
    throw InvalidInput("sparse_product_expectation: state dimension does not match " +
                       std::to_string(n) + " factors");
  }
  for (const auto &f : factors)
  {
    if (f.rows() != 2 || f.cols() != 2)
    {
      throw InvalidInput("sparse_product_expectation: factors must be 2x2");
    }
  }
  std::vector<std::size_t> support;
  for (std::size_t x = 0; x < psi.dim(); ++x)
  {
    if (psi[x] != Complex{})
    {
      support.push_back(x);
    }
  }
  Complex acc{};
  for (std::size_t x : support)
  {
    for (std::size_t y : support)
    {
      Complex term = std::conj(psi[x]) * psi[y];
      for (std::size_t j = 0; j < n; ++j)
      {
        const std::size_t shift = n - 1 - j;
        term *= factors[j]((x >> shift) & 1U, (y >> shift) & 1U);
      }
      acc += term;
    }
  }
  return acc;
}

namespace
{

void check_mermin_args(int n, std::span<const double> angles)
{
  if (n < 2 || n > kMaxGhzParticles)
  {
    throw InvalidInput("mermin_shared_scan: n out of range");
  }
  if (angles.empty())
  {
    throw InvalidInput("mermin_shared_scan: empty angle grid");
  }
}

}  // namespace

MerminGridMax mermin_shared_scan_serial(int n, std::span<const double> angles)
{
  check_mermin_args(n, angles);
  const GhzState state = ghz(n);
  MerminGridMax best{{0, 0}, -1.0};
  for (std::size_t i = 0; i < angles.size(); ++i)
  {
    for (std::size_t k = 0; k < angles.size(); ++k)
    {
      const double f =
          std::abs(mermin_value(state, MerminSettings::shared(n, Angle(angles[i]), Angle(angles[k]))));
      if (f > best.abs_f)
      {
        best = {{i, k}, f};
      }
    }
  }
  return best;
}

MerminGridMax mermin_shared_scan_parallel(int n, std::span<const double> angles)
{
  check_mermin_args(n, angles);
  const GhzState state = ghz(n);
  const std::size_t m = angles.size();
  const auto sm = static_cast<std::ptrdiff_t>(m);
  MerminGridMax best{{0, 0}, -1.0};

#pragma omp parallel
  {
    MerminGridMax local{{0, 0}, -1.0};
    std::vector<CMatrix> plus(static_cast<std::size_t>(n), CMatrix(2, 2));
    std::vector<CMatrix> minus(static_cast<std::size_t>(n), CMatrix(2, 2));
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t si = 0; si < sm; ++si)
    {
      const auto i = static_cast<std::size_t>(si);
      const CMatrix a = mermin_measurement(Angle(angles[i]));
      for (std::size_t k = 0; k < m; ++k)
      {
        const CMatrix ap = mermin_measurement(Angle(angles[k]));
        std::fill(plus.begin(), plus.end(), a + kI * ap);
        std::fill(minus.begin(), minus.end(), a - kI * ap);
        const Complex f = (sparse_product_expectation(state.ket(), plus) -
                           sparse_product_expectation(state.ket(), minus)) /
                          (2.0 * kI);
        const double v = std::abs(f.real());
        const std::array<std::size_t, 2> idx{i, k};
        if (better(v, idx, local.abs_f, local.index))
        {
          local = {idx, v};
        }
      }
    }
#pragma omp critical
    {
      if (better(local.abs_f, local.index, best.abs_f, best.index))
      {
        best = local;
      }
    }
  }
  return best;
}

double max_identity_residual_serial(MeasurementKind kind, std::size_t trials, std::uint64_t seed)
{
  double worst = 0.0;
  for (std::size_t t = 0; t < trials; ++t)
  {
    worst = std::max(worst, identity_residual(random_settings(kind, seed, t)));
  }
  return worst;
}

double max_identity_residual_parallel(MeasurementKind kind, std::size_t trials, std::uint64_t seed)
{
  double worst = 0.0;
  const auto st = static_cast<std::ptrdiff_t>(trials);
#pragma omp parallel for schedule(static) reduction(max : worst)
  for (std::ptrdiff_t t = 0; t < st; ++t)
  {
    worst = std::max(worst, identity_residual(random_settings(kind, seed, static_cast<std::uint64_t>(t))));
  }
  return worst;
}

}  // namespace belllab::kernels
