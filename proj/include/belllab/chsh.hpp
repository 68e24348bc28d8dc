// Copyright 2026 The bell-lab Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BELLLAB_CHSH_HPP
#define BELLLAB_CHSH_HPP

#include <cstdint>
#include <string_view>

#include "belllab/linalg.hpp"
#include "belllab/operators.hpp"

namespace belllab
{

enum class MeasurementKind
{
  spin_half,  // spin_op, z-y plane
  photon      // photon_op, linear polarizer
};

std::string_view to_string(MeasurementKind kind);

struct ChshSettings
{
  Angle alpha;
  Angle alpha_prime;
  Angle beta;
  Angle beta_prime;
  MeasurementKind kind = MeasurementKind::spin_half;
};

struct BellValue
{
  double s = 0.0;
  ChshSettings settings;
};

// Single-party observable for the given convention.
MeasurementOp measurement(MeasurementKind kind, Angle angle);

// (|+-> - |-+>) / sqrt(2), basis index i_1 * 2 + i_2 with |+> = 0.
Ket singlet();

// <psi| Op(a) (x) Op(b) |psi>; psi must have dimension 4.
double correlation(const Ket &psi, Angle a, Angle b, MeasurementKind kind);

// AB + A'B + AB' - A'B' as a 4x4 operator.
CMatrix bell_operator(const ChshSettings &settings);

// max|S^2 - (4I - [A,A'] (x) [B,B'])|. Zero up to rounding for every setting.
double identity_residual(const ChshSettings &settings);

// <AB> + <A'B> + <AB'> - <A'B'> on psi.
BellValue chsh_value(const Ket &psi, const ChshSettings &settings);

// Exhaustive search of |chsh_value(singlet)| over the grid {k * step} in [0, 2pi)^4.
// Ties go to the lexicographically smallest (alpha, alpha', beta, beta') index tuple.
// Requires 0 < step <= pi/4.
BellValue tsirelson_scan(MeasurementKind kind, Angle step);

// Uniform random settings on [0, 2pi)^4 drawn from a seeded stream.
ChshSettings random_settings(MeasurementKind kind, std::uint64_t seed, std::uint64_t index);

}  // namespace belllab

#endif  // BELLLAB_CHSH_HPP
