// Copyright 2026 The bell-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "belllab/mermin.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "belllab/error.hpp"
#include "belllab/kernels.hpp"

namespace belllab
{

GhzState ghz(int n)
{
  if (n < 2 || n > kMaxGhzParticles)
  {
    throw InvalidInput("ghz: n must lie in [2, " + std::to_string(kMaxGhzParticles) + "], got " +
                       std::to_string(n));
  }
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Complex> amps(dim, Complex{});
  amps.front() = 1.0;
  amps.back() = kI;
  return GhzState(n, Ket::normalized(std::move(amps)));
}

MerminSettings MerminSettings::shared(int n, Angle a, Angle a_prime)
{
  if (n < 1)
  {
    throw InvalidInput("MerminSettings::shared: n must be positive");
  }
  return MerminSettings{std::vector<std::pair<Angle, Angle>>(static_cast<std::size_t>(n), {a, a_prime})};
}

MeasurementOp mermin_measurement(Angle a) { return equatorial_op(a); }

CMatrix mermin_operator(const MerminSettings &settings)
{
  if (settings.pairs.empty())
  {
    throw InvalidInput("mermin_operator: no particles");
  }
  std::vector<CMatrix> plus;
  std::vector<CMatrix> minus;
  for (const auto &[a, ap] : settings.pairs)
  {
    const CMatrix ma = mermin_measurement(a);
    const CMatrix map = mermin_measurement(ap);
    plus.push_back(ma + kI * map);
    minus.push_back(ma - kI * map);
  }
  return (tensor(plus) - tensor(minus)) * (1.0 / (2.0 * kI));
}

double mermin_square_residual(const MerminSettings &settings)
{
  if (settings.n() != 3)
  {
    throw InvalidInput("mermin_square_residual: defined for n = 3, got n = " +
                       std::to_string(settings.n()));
  }
  const CMatrix f = mermin_operator(settings);
  const CMatrix id2 = CMatrix::identity(2);
  std::vector<CMatrix> c;
  for (const auto &[a, ap] : settings.pairs)
  {
    c.push_back(commutator(mermin_measurement(a), mermin_measurement(ap)));
  }
  const CMatrix c12 = tensor(tensor(c[0], c[1]), id2);
  const CMatrix c23 = tensor(id2, tensor(c[1], c[2]));
  const CMatrix c31 = tensor(tensor(c[0], id2), c[2]);
  const CMatrix rhs = 4.0 * CMatrix::identity(8) - c12 - c23 - c31;
  return (f * f - rhs).max_abs();
}

double mermin_value(const GhzState &state, const MerminSettings &settings)
{
  if (settings.n() != state.n())
  {
    throw InvalidInput("mermin_value: settings for " + std::to_string(settings.n()) +
                       " particles, state has " + std::to_string(state.n()));
  }
  return expectation(state.ket(), mermin_operator(settings)).real();
}

MerminScanResult mermin_shared_scan(int n, Angle step)
{
  const double h = step.radians();
  if (!(h > 0.0) || h > std::numbers::pi / 4.0 + 1e-15)
  {
    throw InvalidInput("mermin_shared_scan: step must lie in (0, pi/4]");
  }
  if (n < 2 || n > kMaxGhzParticles)
  {
    throw InvalidInput("mermin_shared_scan: n out of range");
  }
  const auto angles = kernels::angle_grid(h);
  const auto best = kernels::mermin_shared_scan_parallel(n, angles);
  return {best.abs_f, Angle(angles[best.index[0]]), Angle(angles[best.index[1]])};
}

}  // namespace belllab
