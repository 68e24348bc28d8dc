// Copyright 2026 The bell-lab Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BELLLAB_MERMIN_HPP
#define BELLLAB_MERMIN_HPP

#include <utility>
#include <vector>

#include "belllab/linalg.hpp"
#include "belllab/operators.hpp"

namespace belllab
{

inline constexpr int kMaxGhzParticles = 10;

// (|+...+> + i|-...->) / sqrt(2) on n qubits.
class GhzState
{
public:
  int n() const { return n_; }
  const Ket &ket() const { return ket_; }

private:
  friend GhzState ghz(int n);
  GhzState(int n, Ket ket) : n_(n), ket_(std::move(ket)) {}
  int n_;
  Ket ket_;
};

// 2 <= n <= 10.
GhzState ghz(int n);

// One (a_j, a'_j) pair per particle; particle j is tensor factor j (leftmost = 0).
struct MerminSettings
{
  std::vector<std::pair<Angle, Angle>> pairs;

  static MerminSettings shared(int n, Angle a, Angle a_prime);
  int n() const { return static_cast<int>(pairs.size()); }
};

// Per-particle observables are measured in the x-y plane (equatorial_op).
MeasurementOp mermin_measurement(Angle a);

// F = (1/2i) [prod_j (A_j + i A'_j) - prod_j (A_j - i A'_j)], 2^n x 2^n, Hermitian.
CMatrix mermin_operator(const MerminSettings &settings);

// max|F^2 - (4I - [A1,A1'][A2,A2'] - [A2,A2'][A3,A3'] - [A3,A3'][A1,A1'])| for n = 3,
// each commutator placed on its own slot.
double mermin_square_residual(const MerminSettings &settings);

// <state| F |state>; real because F is Hermitian.
double mermin_value(const GhzState &state, const MerminSettings &settings);

struct MerminScanResult
{
  double f_max = 0.0;  // max |<F>|
  Angle a;
  Angle a_prime;
};

// Grid search of |mermin_value| over a shared (a, a') on [0, 2pi)^2.
// Requires 0 < step <= pi/4.
MerminScanResult mermin_shared_scan(int n, Angle step);

}  // namespace belllab

#endif  // BELLLAB_MERMIN_HPP
