// Copyright 2026 The bell-lab Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BELLLAB_FOCK_HPP
#define BELLLAB_FOCK_HPP

#include <array>
#include <optional>
#include <vector>

#include "belllab/linalg.hpp"
#include "belllab/operators.hpp"

namespace belllab
{

enum class Polarization
{
  x,
  y
};

// Detection mode: detector 1 or 2, x or y polarized. Canonical order
// (1,x), (1,y), (2,x), (2,y) -> ordinal 0..3.
class ModeIndex
{
public:
  ModeIndex(int detector, Polarization pol);

  int detector() const { return detector_; }
  Polarization polarization() const { return pol_; }
  std::size_t ordinal() const;

  friend bool operator==(ModeIndex, ModeIndex) = default;

private:
  int detector_;
  Polarization pol_;
};

inline constexpr std::size_t kModeCount = 4;
using Occupation = std::array<int, kModeCount>;

// All occupation tuples over the four modes with total photon number <= n_max_total,
// in lexicographic order.
class FockBasis
{
public:
  explicit FockBasis(int n_max_total = 2);

  int n_max_total() const { return n_max_total_; }
  std::size_t size() const { return states_.size(); }
  const Occupation &state(std::size_t i) const { return states_[i]; }
  const std::vector<Occupation> &states() const { return states_; }
  std::optional<std::size_t> index_of(const Occupation &occ) const;
  std::size_t vacuum_index() const { return 0; }

  friend bool operator==(const FockBasis &, const FockBasis &) = default;

private:
  int n_max_total_;
  std::vector<Occupation> states_;
};

class FockState
{
public:
  // Amplitudes taken as given (no normalization).
  FockState(FockBasis basis, std::vector<Complex> amplitudes);
  // Rescaled to unit norm.
  static FockState normalized(FockBasis basis, std::vector<Complex> amplitudes);

  const FockBasis &basis() const { return basis_; }
  std::span<const Complex> amplitudes() const { return amps_; }
  Complex amplitude(const Occupation &occ) const;
  double norm_squared() const;

private:
  FockBasis basis_;
  std::vector<Complex> amps_;
};

// Transmission / reflection probabilities per polarization; T + R = 1.
class BeamSplitterSpec
{
public:
  BeamSplitterSpec(double t_x, double r_x, double t_y, double r_y);
  // r = 1 - t
  static BeamSplitterSpec from_transmission(double t_x, double t_y);

  double t_x() const { return t_x_; }
  double r_x() const { return r_x_; }
  double t_y() const { return t_y_; }
  double r_y() const { return r_y_; }

private:
  double t_x_, r_x_, t_y_, r_y_;
};

// Matrix elements sqrt(n) from occupation n to n - 1 in `mode`.
CMatrix annihilation(ModeIndex mode, const FockBasis &basis);
CMatrix creation(ModeIndex mode, const FockBasis &basis);

FockState vacuum(const FockBasis &basis);

// sqrt(TxTy)|x1 y2> + sqrt(RxRy)|x2 y1> - i sqrt(RyTx)|x1 y1> + i sqrt(RxTy)|x2 y2>
// written directly in the two-photon Fock basis.
FockState ou_mandel_state(const BeamSplitterSpec &bs);

// [sqrt(Tx) a+_{1x} + i sqrt(Rx) a+_{2x}] [sqrt(Ty) a+_{2y} - i sqrt(Ry) a+_{1y}] |0>,
// built by applying creation operators.
FockState product_state(const BeamSplitterSpec &bs);

// cos(theta) a_{det,x} + sin(theta) a_{det,y}
CMatrix detector_amplitude_op(int detector, Angle theta, const FockBasis &basis);

// || D2(theta2) D1(theta1) |psi> ||^2, i.e. <psi|D1+ D2+ D2 D1|psi> with K = 1.
double coincidence_probability(const FockState &state, Angle theta1, Angle theta2);

// [(TxTy)^{1/2} cos t1 sin t2 + (RxRy)^{1/2} sin t1 cos t2]^2
double coincidence_probability_closed_form(const BeamSplitterSpec &bs, Angle theta1, Angle theta2);

// Coincidence-normalized polarization correlation. Detector 1 reports +1 on the
// port at theta1; detector 2 reports +1 on the port at theta2 + pi/2:
//   E = [P(t1, t2+) + P(t1+, t2) - P(t1, t2) - P(t1+, t2+)] / sum of the four.
// For the equal-split state this is cos 2(theta1 + theta2).
// Throws UndefinedCorrelation when all four probabilities vanish.
double coincidence_correlation(const FockState &state, Angle theta1, Angle theta2);

// Restriction to one photon per detector, as a normalized two-qubit polarization
// ket with index pol_1 * 2 + pol_2 (x = 0, y = 1).
Ket coincidence_subspace_ket(const FockState &state);

// Type-II down-conversion pair: phi_x(k_s) phi_y(k_i) delta(k_s + k_i - K0) on the
// clock-angle parameterization of the two emission cones. The pump runs along z,
// so the delta pairs idler = -signal.
class PairProductState
{
public:
  PairProductState(Angle signal_clock_angle, std::array<double, 3> pump_momentum,
                   double delta_width = 0.01);

  Angle signal_clock_angle() const { return signal_; }
  Angle idler_clock_angle() const { return idler_; }
  const std::array<double, 3> &pump_momentum() const { return pump_; }
  double delta_width() const { return delta_width_; }

private:
  Angle signal_;
  Angle idler_;
  std::array<double, 3> pump_;
  double delta_width_;
};

// Envelope on a cone: exp(kappa cos(angle - center)), kappa = 0.5.
inline constexpr double kConeEnvelopeKappa = 0.5;

// phi_x(signal_test) phi_y(idler_test) delta~(signal_test + idler_test), with delta~ a
// Gaussian of width delta_width in the wrapped angle sum.
Complex pair_product_amplitude(const PairProductState &state, Angle signal_test, Angle idler_test);

// Which signal clock angles the detection optics accept.
struct SelectionSpec
{
  std::vector<Angle> accepted;
  double half_width = 0.05;

  SelectionSpec(std::vector<Angle> accepted_angles, double half_width_rad);
};

// Clock positions to angles: 12 o'clock = 0, one hour = pi/6.
Angle clock_angle(double hours);

// True iff `signal` lies within half_width (wrapped) of an accepted angle.
bool apply_selection(const SelectionSpec &selection, Angle signal);

}  // namespace belllab

#endif  // BELLLAB_FOCK_HPP
