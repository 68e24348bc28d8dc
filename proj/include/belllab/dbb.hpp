// Copyright 2026 The bell-lab Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BELLLAB_DBB_HPP
#define BELLLAB_DBB_HPP

#include <array>
#include <utility>
#include <vector>

#include "belllab/error.hpp"
#include "belllab/linalg.hpp"

namespace belllab
{

// Velocities are refused where |psi|^2 falls below this.
inline constexpr double kNodeDensity = 1e-300;

struct PhysicalConstants
{
  double hbar = 1.0;
  double mass = 1.0;
  double gyro = 1.0;

  // Throws InvalidInput unless hbar and mass are positive and gyro finite.
  void validate() const;
};

// Free Gaussian packet: at start_time,
//   psi = (2 pi width^2)^{-1/4} exp(-(x - center)^2 / (4 width^2) + i k (x - center)).
struct WavePacket
{
  double center = 0.0;
  double width = 1.0;
  double wavenumber = 0.0;
  double start_time = 0.0;

  void validate() const;
};

// Exactly evolved free packet at (x, t). Throws InvalidInput for t < start_time.
Complex psi_eval(const WavePacket &wp, const PhysicalConstants &c, double x, double t);

// d psi / dx divided by psi, from the closed form.
Complex log_derivative(const WavePacket &wp, const PhysicalConstants &c, double x, double t);

// (hbar/m) Im(psi' / psi) = j / rho. Throws NodeSingularity where rho < kNodeDensity.
double velocity_1p(const WavePacket &wp, const PhysicalConstants &c, double x, double t);

enum class PairForm
{
  product,        // psi_a(x1) psi_b(x2)
  symmetric,      // N [psi_a(x1) psi_b(x2) + psi_a(x2) psi_b(x1)]
  antisymmetric   // N [psi_a(x1) psi_b(x2) - psi_a(x2) psi_b(x1)]
};

struct TwoParticleWF
{
  WavePacket packet_a;
  WavePacket packet_b;
  PairForm form = PairForm::product;
};

// <psi_a(t) | psi_b(t)> by Simpson quadrature at t = max(start times). Free
// evolution is unitary, so this is the overlap at every later time.
Complex packet_overlap(const WavePacket &a, const WavePacket &b, const PhysicalConstants &c);

// N = 1 / sqrt(2 (1 +- |<a|b>|^2)) for the symmetrized forms, 1 for the product.
double pair_normalization(const TwoParticleWF &wf, const PhysicalConstants &c);

// Normalized two-particle amplitude. The first form recomputes N by quadrature;
// pass N from pair_normalization when evaluating many points.
Complex psi2_eval(const TwoParticleWF &wf, const PhysicalConstants &c, double x1, double x2, double t);
Complex psi2_eval(const TwoParticleWF &wf, const PhysicalConstants &c, double x1, double x2, double t,
                  double normalization);

// (v1, v2) = (hbar/m) Im(d_k Psi / Psi). Throws NodeSingularity where |Psi|^2 < kNodeDensity.
std::pair<double, double> velocity_2p(const TwoParticleWF &wf, const PhysicalConstants &c,
                                      double x1, double x2, double t);

// |dv1/dx2| by a Richardson-refined central difference, step h = 1e-5 * min width.
double cross_coupling(const TwoParticleWF &wf, const PhysicalConstants &c, double x1, double x2,
                      double t);

// Positions sampled at every step; x2 is empty for a single particle.
struct Trajectory
{
  std::vector<double> times;
  std::vector<double> x1;
  std::vector<double> x2;
};

// Integration stopped at a node. partial() holds every step taken before it.
class TrajectoryHalted : public NodeSingularity
{
public:
  TrajectoryHalted(const std::string &what, Trajectory partial)
    : NodeSingularity(what), partial_(std::move(partial))
  {
  }
  const Trajectory &partial() const { return partial_; }

private:
  Trajectory partial_;
};

// RK4 integration of dx/dt = v from t0 to t1 with step dt (the last step is
// shortened to land on t1).
Trajectory integrate_trajectory(const WavePacket &wp, const PhysicalConstants &c, double x_start,
                                double t0, double t1, double dt);
Trajectory integrate_trajectory(const TwoParticleWF &wf, const PhysicalConstants &c,
                                std::array<double, 2> start, double t0, double t1, double dt);

using Vec3 = std::array<double, 3>;

struct SpinState
{
  Vec3 s{1.0, 0.0, 0.0};

  void validate() const;  // |s| > 0
};

// ds/dt = gyro (s x B).
Vec3 spin_derivative(const SpinState &s, const Vec3 &b_field, const PhysicalConstants &c);

struct SpinHistory
{
  std::vector<double> times;
  std::vector<SpinState> states;
};

// RK4 from t = 0 to t1; states[0] is s0.
SpinHistory integrate_spin(const SpinState &s0, const Vec3 &b_field, const PhysicalConstants &c,
                           double t1, double dt);

}  // namespace belllab

#endif  // BELLLAB_DBB_HPP
