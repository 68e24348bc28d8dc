// Copyright 2026 The bell-lab Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BELLLAB_KERNELS_HPP
#define BELLLAB_KERNELS_HPP

// Data-parallel scan kernels. Each *_parallel kernel has a *_serial reference
// that computes the same quantity the slow, obvious way; the two are compared
// in tests/kernels_test.cpp and timed against each other in bench/.
//
// All reductions are order-independent: maxima are exact and ties resolve to the
// smallest index tuple, so results do not depend on the thread count.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "belllab/chsh.hpp"
#include "belllab/linalg.hpp"

namespace belllab::kernels
{

// Number of OpenMP threads the kernels will use (1 without OpenMP).
int max_threads();

// Angles {k * step : k = 0 .. N-1} covering [0, 2pi).
std::vector<double> angle_grid(double step);

// table[i * N + j] = correlation(psi, angles[i], angles[j], kind).
std::vector<double> correlation_table(const Ket &psi, MeasurementKind kind,
                                      std::span<const double> angles);

struct ChshGridMax
{
  std::array<std::size_t, 4> index{};  // (alpha, alpha', beta, beta') grid indices
  double abs_s = 0.0;
};

// |S| = |(E[a][b] + E[a'][b]) + (E[a][b'] - E[a'][b'])| maximized over all N^4 tuples.
ChshGridMax chsh_grid_max_serial(std::span<const double> table, std::size_t n);
// Same maximum in O(N^3): for fixed (a, a') the b and b' sums are independent.
ChshGridMax chsh_grid_max_parallel(std::span<const double> table, std::size_t n);

struct MerminGridMax
{
  std::array<std::size_t, 2> index{};  // shared (a, a') grid indices
  double abs_f = 0.0;
};

// max |<ghz(n)| F(a, a') |ghz(n)>| with every particle measured at the same (a, a').
// Serial: dense Mermin operator and a full expectation value.
MerminGridMax mermin_shared_scan_serial(int n, std::span<const double> angles);
// Parallel: contracts the tensor-product factors only over the state's support.
MerminGridMax mermin_shared_scan_parallel(int n, std::span<const double> angles);

// <psi| (x)_j factors[j] |psi>, summing only over nonzero amplitudes of psi.
// factors are 2x2; factor j acts on the j-th (leftmost = 0) qubit.
Complex sparse_product_expectation(const Ket &psi, std::span<const CMatrix> factors);

// Largest identity_residual over `trials` random settings from seed.
double max_identity_residual_serial(MeasurementKind kind, std::size_t trials, std::uint64_t seed);
double max_identity_residual_parallel(MeasurementKind kind, std::size_t trials, std::uint64_t seed);

}  // namespace belllab::kernels

#endif  // BELLLAB_KERNELS_HPP
