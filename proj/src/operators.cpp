// Copyright 2026 The bell-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "belllab/operators.hpp"

#include <cmath>

#include "belllab/error.hpp"

namespace belllab
{

Angle::Angle(double radians) : rad_(radians)
{
  if (!std::isfinite(radians))
  {
    throw InvalidInput("Angle: non-finite value");
  }
}

double involution_residual(const CMatrix &m)
{
  return (m * m - CMatrix::identity(m.rows())).max_abs();
}

MeasurementOp::MeasurementOp(CMatrix matrix, std::string label)
  : m_(std::move(matrix)), label_(std::move(label))
{
  if (!m_.is_square())
  {
    throw InvalidInput("MeasurementOp " + label_ + ": matrix is not square");
  }
  if (hermitian_residual(m_) >= 1e-12)
  {
    throw InvalidInput("MeasurementOp " + label_ + ": not Hermitian");
  }
  if (involution_residual(m_) >= 1e-12)
  {
    throw InvalidInput("MeasurementOp " + label_ + ": M^2 != I");
  }
}

MeasurementOp pauli(Axis axis)
{
  switch (axis)
  {
  case Axis::x:
    return {CMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}), "sigma_x"};
  case Axis::y:
    return {CMatrix::from_rows({{0.0, -kI}, {kI, 0.0}}), "sigma_y"};
  case Axis::z:
    break;
  }
  return {CMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}), "sigma_z"};
}

MeasurementOp spin_op(Angle alpha)
{
  const double c = std::cos(alpha.radians());
  const double s = std::sin(alpha.radians());
  // cos a sigma_z + sin a sigma_y
  return {CMatrix::from_rows({{c, -kI * s}, {kI * s, -c}}), "spin"};
}

MeasurementOp equatorial_op(Angle a)
{
  const double c = std::cos(a.radians());
  const double s = std::sin(a.radians());
  // cos a sigma_x + sin a sigma_y
  return {CMatrix::from_rows({{0.0, Complex(c, -s)}, {Complex(c, s), 0.0}}), "equatorial"};
}

CMatrix photon_projector(Angle theta)
{
  const double c = std::cos(theta.radians());
  const double s = std::sin(theta.radians());
  return CMatrix::from_rows({{c * c, s * c}, {s * c, s * s}});
}

MeasurementOp photon_op(Angle theta)
{
  const double c2 = std::cos(2.0 * theta.radians());
  const double s2 = std::sin(2.0 * theta.radians());
  return {CMatrix::from_rows({{c2, s2}, {s2, -c2}}), "photon"};
}

}  // namespace belllab
