// Copyright 2026 The bell-lab Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BELLLAB_RK4_HPP
#define BELLLAB_RK4_HPP

#include <array>
#include <cstddef>

namespace belllab
{

template <std::size_t N>
using StateVec = std::array<double, N>;

// One classical fourth-order Runge-Kutta step of dy/dt = f(t, y).
template <std::size_t N, class F>
StateVec<N> rk4_step(F &&f, double t, const StateVec<N> &y, double h)
{
  auto axpy = [](const StateVec<N> &base, double s, const StateVec<N> &dir) {
    StateVec<N> out;
    for (std::size_t i = 0; i < N; ++i)
    {
      out[i] = base[i] + s * dir[i];
    }
    return out;
  };
  const StateVec<N> k1 = f(t, y);
  const StateVec<N> k2 = f(t + 0.5 * h, axpy(y, 0.5 * h, k1));
  const StateVec<N> k3 = f(t + 0.5 * h, axpy(y, 0.5 * h, k2));
  const StateVec<N> k4 = f(t + h, axpy(y, h, k3));
  StateVec<N> out;
  for (std::size_t i = 0; i < N; ++i)
  {
    out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return out;
}

}  // namespace belllab

#endif  // BELLLAB_RK4_HPP
