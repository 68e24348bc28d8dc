// Copyright 2026 The bell-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "belllab/dbb.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "belllab/rk4.hpp"

namespace belllab
{

void PhysicalConstants::validate() const
{
  if (!(hbar > 0.0) || !(mass > 0.0) || !std::isfinite(hbar) || !std::isfinite(mass))
  {
    throw InvalidInput("PhysicalConstants: hbar and mass must be positive and finite");
  }
  if (!std::isfinite(gyro))
  {
    throw InvalidInput("PhysicalConstants: gyro must be finite");
  }
}

void WavePacket::validate() const
{
  if (!(width > 0.0) || !std::isfinite(width))
  {
    throw InvalidInput("WavePacket: width must be positive");
  }
  if (!std::isfinite(center) || !std::isfinite(wavenumber) || !std::isfinite(start_time))
  {
    throw InvalidInput("WavePacket: non-finite parameter");
  }
}

namespace
{

// Complex spreading factor 1 + i hbar tau / (2 m width^2).
Complex spread(const WavePacket &wp, const PhysicalConstants &c, double tau)
{
  return {1.0, c.hbar * tau / (2.0 * c.mass * wp.width * wp.width)};
}

double elapsed(const WavePacket &wp, double t)
{
  if (t < wp.start_time)
  {
    throw InvalidInput("WavePacket: evaluation time " + std::to_string(t) + " precedes start time " +
                       std::to_string(wp.start_time));
  }
  return t - wp.start_time;
}

// x - center - (hbar k / m) tau
double drift_offset(const WavePacket &wp, const PhysicalConstants &c, double x, double tau)
{
  return x - wp.center - c.hbar * wp.wavenumber * tau / c.mass;
}

}  // namespace

Complex psi_eval(const WavePacket &wp, const PhysicalConstants &c, double x, double t)
{
  const double tau = elapsed(wp, t);
  const Complex a = spread(wp, c, tau);
  const double xi = drift_offset(wp, c, x, tau);
  const double k = wp.wavenumber;
  const Complex exponent = -xi * xi / (4.0 * wp.width * wp.width * a) + kI * k * (x - wp.center) -
                           kI * (c.hbar * k * k * tau / (2.0 * c.mass));
  const double prefactor = std::pow(2.0 * std::numbers::pi * wp.width * wp.width, -0.25);
  return prefactor / std::sqrt(a) * std::exp(exponent);
}

Complex log_derivative(const WavePacket &wp, const PhysicalConstants &c, double x, double t)
{
  const double tau = elapsed(wp, t);
  const Complex a = spread(wp, c, tau);
  const double xi = drift_offset(wp, c, x, tau);
  return -xi / (2.0 * wp.width * wp.width * a) + kI * wp.wavenumber;
}

double velocity_1p(const WavePacket &wp, const PhysicalConstants &c, double x, double t)
{
  const Complex psi = psi_eval(wp, c, x, t);
  if (std::norm(psi) < kNodeDensity)
  {
    throw NodeSingularity("velocity_1p: |psi|^2 below node threshold at x = " + std::to_string(x));
  }
  return c.hbar / c.mass * log_derivative(wp, c, x, t).imag();
}

Complex packet_overlap(const WavePacket &a, const WavePacket &b, const PhysicalConstants &c)
{
  const double t = std::max(a.start_time, b.start_time);
  double lo = 0.0;
  double hi = 0.0;
  double kmax = 1.0;
  bool first = true;
  for (const WavePacket *wp : {&a, &b})
  {
    const double tau = t - wp->start_time;
    const double width_t = wp->width * std::abs(spread(*wp, c, tau));
    const double center_t = wp->center + c.hbar * wp->wavenumber * tau / c.mass;
    const double l = center_t - 12.0 * width_t;
    const double h = center_t + 12.0 * width_t;
    lo = first ? l : std::min(lo, l);
    hi = first ? h : std::max(hi, h);
    // local wavenumber at the edge of the window, including the chirp
    const double chirp = c.hbar * tau / (2.0 * c.mass * width_t * width_t) * 12.0;
    kmax = std::max(kmax, std::abs(wp->wavenumber) + std::abs(chirp));
    first = false;
  }
  auto intervals = static_cast<std::size_t>(std::ceil((hi - lo) * kmax / 0.02));
  intervals = std::clamp<std::size_t>(intervals, 20000, 4000000);
  intervals += intervals % 2;
  const double dx = (hi - lo) / static_cast<double>(intervals);
  Complex acc{};
  for (std::size_t i = 0; i <= intervals; ++i)
  {
    const double x = lo + dx * static_cast<double>(i);
    const double w = (i == 0 || i == intervals) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    acc += w * std::conj(psi_eval(a, c, x, t)) * psi_eval(b, c, x, t);
  }
  return acc * (dx / 3.0);
}

double pair_normalization(const TwoParticleWF &wf, const PhysicalConstants &c)
{
  if (wf.form == PairForm::product)
  {
    return 1.0;
  }
  const double o2 = std::norm(packet_overlap(wf.packet_a, wf.packet_b, c));
  const double sign = wf.form == PairForm::symmetric ? 1.0 : -1.0;
  const double denom = 2.0 * (1.0 + sign * o2);
  if (!(denom > 1e-12))
  {
    throw InvalidInput("pair_normalization: antisymmetrized state of identical packets vanishes");
  }
  return 1.0 / std::sqrt(denom);
}

namespace
{

double exchange_sign(PairForm form)
{
  switch (form)
  {
  case PairForm::symmetric:
    return 1.0;
  case PairForm::antisymmetric:
    return -1.0;
  case PairForm::product:
    break;
  }
  return 0.0;
}

struct PairDerivs
{
  Complex psi;
  Complex d1;
  Complex d2;
};

// Unnormalized Psi and its partial derivatives.
PairDerivs pair_derivs(const TwoParticleWF &wf, const PhysicalConstants &c, double x1, double x2,
                       double t)
{
  const auto &pa = wf.packet_a;
  const auto &pb = wf.packet_b;
  const Complex a1 = psi_eval(pa, c, x1, t);
  const Complex b2 = psi_eval(pb, c, x2, t);
  PairDerivs d{a1 * b2, log_derivative(pa, c, x1, t) * a1 * b2, a1 * log_derivative(pb, c, x2, t) * b2};
  const double s = exchange_sign(wf.form);
  if (s != 0.0)
  {
    const Complex a2 = psi_eval(pa, c, x2, t);
    const Complex b1 = psi_eval(pb, c, x1, t);
    d.psi += s * a2 * b1;
    d.d1 += s * a2 * log_derivative(pb, c, x1, t) * b1;
    d.d2 += s * log_derivative(pa, c, x2, t) * a2 * b1;
  }
  return d;
}

}  // namespace

Complex psi2_eval(const TwoParticleWF &wf, const PhysicalConstants &c, double x1, double x2, double t)
{
  return pair_normalization(wf, c) * pair_derivs(wf, c, x1, x2, t).psi;
}

Complex psi2_eval(const TwoParticleWF &wf, const PhysicalConstants &c, double x1, double x2, double t,
                  double normalization)
{
  return normalization * pair_derivs(wf, c, x1, x2, t).psi;
}

std::pair<double, double> velocity_2p(const TwoParticleWF &wf, const PhysicalConstants &c,
                                      double x1, double x2, double t)
{
  // The node test uses the unnormalized amplitude; N is O(1) except for
  // near-identical antisymmetrized packets, where the state itself degenerates.
  const PairDerivs d = pair_derivs(wf, c, x1, x2, t);
  if (std::norm(d.psi) < kNodeDensity)
  {
    throw NodeSingularity("velocity_2p: |Psi|^2 below node threshold at (" + std::to_string(x1) +
                          ", " + std::to_string(x2) + ")");
  }
  const double scale = c.hbar / c.mass;
  return {scale * (d.d1 / d.psi).imag(), scale * (d.d2 / d.psi).imag()};
}

double cross_coupling(const TwoParticleWF &wf, const PhysicalConstants &c, double x1, double x2,
                      double t)
{
  const double h = 1e-5 * std::min(wf.packet_a.width, wf.packet_b.width);
  auto central = [&](double step) {
    const double up = velocity_2p(wf, c, x1, x2 + step, t).first;
    const double down = velocity_2p(wf, c, x1, x2 - step, t).first;
    return (up - down) / (2.0 * step);
  };
  const double coarse = central(h);
  const double fine = central(0.5 * h);
  return std::abs((4.0 * fine - coarse) / 3.0);
}

namespace
{

void check_span(double t0, double t1, double dt)
{
  if (!(dt > 0.0) || !std::isfinite(dt))
  {
    throw InvalidInput("integrate: dt must be positive");
  }
  if (!(t1 > t0))
  {
    throw InvalidInput("integrate: t1 must exceed t0");
  }
}

template <std::size_t N, class Velocity>
Trajectory integrate(Velocity &&velocity, StateVec<N> y, double t0, double t1, double dt)
{
  check_span(t0, t1, dt);
  Trajectory traj;
  auto record = [&](double t, const StateVec<N> &state) {
    traj.times.push_back(t);
    traj.x1.push_back(state[0]);
    if constexpr (N == 2)
    {
      traj.x2.push_back(state[1]);
    }
  };
  auto rhs = [&](double t, const StateVec<N> &state) { return velocity(t, state); };

  try
  {
    rhs(t0, y);  // refuse to start on a node
  }
  catch (const NodeSingularity &e)
  {
    throw TrajectoryHalted(e.what(), traj);
  }
  record(t0, y);

  const auto steps = static_cast<std::size_t>(std::ceil((t1 - t0) / dt - 1e-9));
  double t = t0;
  for (std::size_t k = 1; k <= steps; ++k)
  {
    const double t_next = k == steps ? t1 : t0 + static_cast<double>(k) * dt;
    try
    {
      y = rk4_step<N>(rhs, t, y, t_next - t);
    }
    catch (const NodeSingularity &e)
    {
      throw TrajectoryHalted(e.what(), traj);
    }
    t = t_next;
    record(t, y);
  }
  return traj;
}

}  // namespace

Trajectory integrate_trajectory(const WavePacket &wp, const PhysicalConstants &c, double x_start,
                                double t0, double t1, double dt)
{
  c.validate();
  wp.validate();
  if (t0 < wp.start_time)
  {
    throw InvalidInput("integrate_trajectory: t0 precedes the packet start time");
  }
  auto v = [&](double t, const StateVec<1> &x) { return StateVec<1>{velocity_1p(wp, c, x[0], t)}; };
  return integrate<1>(v, StateVec<1>{x_start}, t0, t1, dt);
}

Trajectory integrate_trajectory(const TwoParticleWF &wf, const PhysicalConstants &c,
                                std::array<double, 2> start, double t0, double t1, double dt)
{
  c.validate();
  wf.packet_a.validate();
  wf.packet_b.validate();
  if (t0 < std::max(wf.packet_a.start_time, wf.packet_b.start_time))
  {
    throw InvalidInput("integrate_trajectory: t0 precedes a packet start time");
  }
  auto v = [&](double t, const StateVec<2> &x) {
    const auto [v1, v2] = velocity_2p(wf, c, x[0], x[1], t);
    return StateVec<2>{v1, v2};
  };
  return integrate<2>(v, StateVec<2>{start[0], start[1]}, t0, t1, dt);
}

void SpinState::validate() const
{
  const double n2 = s[0] * s[0] + s[1] * s[1] + s[2] * s[2];
  if (!(n2 > 0.0) || !std::isfinite(n2))
  {
    throw InvalidInput("SpinState: spin vector must be nonzero and finite");
  }
}

Vec3 spin_derivative(const SpinState &spin, const Vec3 &b, const PhysicalConstants &c)
{
  const Vec3 &s = spin.s;
  return {c.gyro * (s[1] * b[2] - s[2] * b[1]), c.gyro * (s[2] * b[0] - s[0] * b[2]),
          c.gyro * (s[0] * b[1] - s[1] * b[0])};
}

SpinHistory integrate_spin(const SpinState &s0, const Vec3 &b_field, const PhysicalConstants &c,
                           double t1, double dt)
{
  s0.validate();
  if (!(dt > 0.0) || !std::isfinite(dt))
  {
    throw InvalidInput("integrate_spin: dt must be positive");
  }
  if (!(t1 >= 0.0) || !std::isfinite(t1))
  {
    throw InvalidInput("integrate_spin: t1 must be non-negative");
  }
  auto rhs = [&](double, const StateVec<3> &s) { return spin_derivative(SpinState{s}, b_field, c); };

  SpinHistory out;
  out.times.push_back(0.0);
  out.states.push_back(s0);
  const auto steps = static_cast<std::size_t>(std::ceil(t1 / dt - 1e-9));
  StateVec<3> y = s0.s;
  double t = 0.0;
  for (std::size_t k = 1; k <= steps; ++k)
  {
    const double t_next = k == steps ? t1 : static_cast<double>(k) * dt;
    y = rk4_step<3>(rhs, t, y, t_next - t);
    t = t_next;
    out.times.push_back(t);
    out.states.push_back(SpinState{y});
  }
  return out;
}

}  // namespace belllab
