// Copyright 2026 The bell-lab Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BELLLAB_OPERATORS_HPP
#define BELLLAB_OPERATORS_HPP

#include <numbers>
#include <string>

#include "belllab/linalg.hpp"

namespace belllab
{

// Analyzer or magnet orientation in radians. Always finite.
class Angle
{
public:
  constexpr Angle() = default;
  explicit Angle(double radians);

  static Angle degrees(double deg) { return Angle(deg * std::numbers::pi / 180.0); }

  double radians() const { return rad_; }
  double degrees() const { return rad_ * 180.0 / std::numbers::pi; }

  friend Angle operator+(Angle a, Angle b) { return Angle(a.rad_ + b.rad_); }
  friend Angle operator-(Angle a, Angle b) { return Angle(a.rad_ - b.rad_); }
  friend bool operator==(Angle, Angle) = default;
  friend auto operator<=>(Angle, Angle) = default;

private:
  double rad_ = 0.0;
};

enum class Axis
{
  x,
  y,
  z
};

// Dichotomic observable: Hermitian and squaring to the identity, so its
// spectrum lies in {-1, +1}. Both properties are checked on construction to 1e-12.
class MeasurementOp
{
public:
  MeasurementOp(CMatrix matrix, std::string label);

  const CMatrix &matrix() const { return m_; }
  const std::string &label() const { return label_; }
  std::size_t dim() const { return m_.rows(); }

  operator const CMatrix &() const { return m_; }

private:
  CMatrix m_;
  std::string label_;
};

// Residual max|M^2 - I|.
double involution_residual(const CMatrix &m);

MeasurementOp pauli(Axis axis);

// Stern-Gerlach direction in the z-y plane: cos(alpha) sigma_z + sin(alpha) sigma_y.
// [spin_op(a), spin_op(b)] = 2i sin(a - b) sigma_x.
MeasurementOp spin_op(Angle alpha);

// Direction in the x-y plane: cos(a) sigma_x + sin(a) sigma_y. Used for the
// Mermin operators, whose GHZ state lives in the z basis.
MeasurementOp equatorial_op(Angle a);

// Linear polarizer at theta: [[cos^2, sin cos], [sin cos, sin^2]].
CMatrix photon_projector(Angle theta);

// 2 P(theta) - I = cos(2 theta) sigma_z + sin(2 theta) sigma_x.
MeasurementOp photon_op(Angle theta);

}  // namespace belllab

#endif  // BELLLAB_OPERATORS_HPP
