// Copyright 2026 The bell-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "belllab/chsh.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "belllab/error.hpp"
#include "belllab/kernels.hpp"
#include "belllab/rng.hpp"

namespace belllab
{

std::string_view to_string(MeasurementKind kind)
{
  return kind == MeasurementKind::photon ? "photon" : "spin";
}

MeasurementOp measurement(MeasurementKind kind, Angle angle)
{
  return kind == MeasurementKind::photon ? photon_op(angle) : spin_op(angle);
}

Ket singlet()
{
  const double r = 1.0 / std::numbers::sqrt2;
  return Ket::normalized({0.0, r, -r, 0.0});
}

double correlation(const Ket &psi, Angle a, Angle b, MeasurementKind kind)
{
  if (psi.dim() != 4)
  {
    throw InvalidInput("correlation: expected a two-qubit state, got dimension " +
                       std::to_string(psi.dim()));
  }
  return expectation(psi, tensor(measurement(kind, a), measurement(kind, b))).real();
}

CMatrix bell_operator(const ChshSettings &st)
{
  const auto a = measurement(st.kind, st.alpha);
  const auto ap = measurement(st.kind, st.alpha_prime);
  const auto b = measurement(st.kind, st.beta);
  const auto bp = measurement(st.kind, st.beta_prime);
  return tensor(a, b) + tensor(ap, b) + tensor(a, bp) - tensor(ap, bp);
}

double identity_residual(const ChshSettings &st)
{
  const CMatrix s = bell_operator(st);
  const CMatrix ca = commutator(measurement(st.kind, st.alpha), measurement(st.kind, st.alpha_prime));
  const CMatrix cb = commutator(measurement(st.kind, st.beta), measurement(st.kind, st.beta_prime));
  const CMatrix rhs = 4.0 * CMatrix::identity(4) - tensor(ca, cb);
  return (s * s - rhs).max_abs();
}

BellValue chsh_value(const Ket &psi, const ChshSettings &st)
{
  const double ab = correlation(psi, st.alpha, st.beta, st.kind);
  const double apb = correlation(psi, st.alpha_prime, st.beta, st.kind);
  const double abp = correlation(psi, st.alpha, st.beta_prime, st.kind);
  const double apbp = correlation(psi, st.alpha_prime, st.beta_prime, st.kind);
  return {(ab + apb) + (abp - apbp), st};
}

BellValue tsirelson_scan(MeasurementKind kind, Angle step)
{
  const double h = step.radians();
  if (!(h > 0.0) || h > std::numbers::pi / 4.0 + 1e-15)
  {
    throw InvalidInput("tsirelson_scan: step must lie in (0, pi/4], got " + std::to_string(h));
  }
  const auto angles = kernels::angle_grid(h);
  const auto table = kernels::correlation_table(singlet(), kind, angles);
  const auto best = kernels::chsh_grid_max_parallel(table, angles.size());
  const ChshSettings st{Angle(angles[best.index[0]]), Angle(angles[best.index[1]]),
                        Angle(angles[best.index[2]]), Angle(angles[best.index[3]]), kind};
  return chsh_value(singlet(), st);
}

ChshSettings random_settings(MeasurementKind kind, std::uint64_t seed, std::uint64_t index)
{
  RandomStream rng(seed, index);
  const double two_pi = 2.0 * std::numbers::pi;
  ChshSettings st;
  st.alpha = Angle(two_pi * rng.uniform());
  st.alpha_prime = Angle(two_pi * rng.uniform());
  st.beta = Angle(two_pi * rng.uniform());
  st.beta_prime = Angle(two_pi * rng.uniform());
  st.kind = kind;
  return st;
}

}  // namespace belllab
