// Copyright 2026 The bell-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "belllab/fock.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "belllab/error.hpp"

namespace belllab
{

ModeIndex::ModeIndex(int detector, Polarization pol) : detector_(detector), pol_(pol)
{
  if (detector != 1 && detector != 2)
  {
    throw InvalidInput("ModeIndex: detector must be 1 or 2, got " + std::to_string(detector));
  }
}

std::size_t ModeIndex::ordinal() const
{
  return static_cast<std::size_t>((detector_ - 1) * 2 + (pol_ == Polarization::y ? 1 : 0));
}

FockBasis::FockBasis(int n_max_total) : n_max_total_(n_max_total)
{
  if (n_max_total < 0)
  {
    throw InvalidInput("FockBasis: negative truncation");
  }
  const int m = n_max_total;
  for (int a = 0; a <= m; ++a)
    for (int b = 0; a + b <= m; ++b)
      for (int c = 0; a + b + c <= m; ++c)
        for (int d = 0; a + b + c + d <= m; ++d)
          states_.push_back({a, b, c, d});
}

std::optional<std::size_t> FockBasis::index_of(const Occupation &occ) const
{
  for (std::size_t i = 0; i < states_.size(); ++i)
  {
    if (states_[i] == occ)
    {
      return i;
    }
  }
  return std::nullopt;
}

FockState::FockState(FockBasis basis, std::vector<Complex> amplitudes)
  : basis_(std::move(basis)), amps_(std::move(amplitudes))
{
  if (amps_.size() != basis_.size())
  {
    throw InvalidInput("FockState: " + std::to_string(amps_.size()) + " amplitudes for a basis of " +
                       std::to_string(basis_.size()));
  }
}

FockState FockState::normalized(FockBasis basis, std::vector<Complex> amplitudes)
{
  const Ket k = Ket::normalized(std::move(amplitudes));
  return FockState(std::move(basis), std::vector<Complex>(k.amplitudes().begin(), k.amplitudes().end()));
}

Complex FockState::amplitude(const Occupation &occ) const
{
  const auto idx = basis_.index_of(occ);
  return idx ? amps_[*idx] : Complex{};
}

double FockState::norm_squared() const
{
  double n2 = 0.0;
  for (const auto &z : amps_)
  {
    n2 += std::norm(z);
  }
  return n2;
}

BeamSplitterSpec::BeamSplitterSpec(double t_x, double r_x, double t_y, double r_y)
  : t_x_(t_x), r_x_(r_x), t_y_(t_y), r_y_(r_y)
{
  for (double v : {t_x, r_x, t_y, r_y})
  {
    if (!(v >= 0.0 && v <= 1.0))
    {
      throw InvalidInput("BeamSplitterSpec: coefficients must lie in [0, 1]");
    }
  }
  if (std::abs(t_x + r_x - 1.0) > 1e-12 || std::abs(t_y + r_y - 1.0) > 1e-12)
  {
    throw InvalidInput("BeamSplitterSpec: T + R must equal 1 for each polarization");
  }
}

BeamSplitterSpec BeamSplitterSpec::from_transmission(double t_x, double t_y)
{
  return {t_x, 1.0 - t_x, t_y, 1.0 - t_y};
}

CMatrix annihilation(ModeIndex mode, const FockBasis &basis)
{
  const std::size_t m = mode.ordinal();
  CMatrix a(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col)
  {
    Occupation occ = basis.state(col);
    const int n = occ[m];
    if (n == 0)
    {
      continue;
    }
    occ[m] = n - 1;
    if (const auto row = basis.index_of(occ))
    {
      a(*row, col) = std::sqrt(static_cast<double>(n));
    }
  }
  return a;
}

CMatrix creation(ModeIndex mode, const FockBasis &basis) { return dagger(annihilation(mode, basis)); }

FockState vacuum(const FockBasis &basis)
{
  std::vector<Complex> amps(basis.size(), Complex{});
  amps[basis.vacuum_index()] = 1.0;
  return FockState(basis, std::move(amps));
}

FockState ou_mandel_state(const BeamSplitterSpec &bs)
{
  const FockBasis basis(2);
  std::vector<Complex> amps(basis.size(), Complex{});
  auto set = [&](const Occupation &occ, Complex v) { amps[*basis.index_of(occ)] = v; };
  //   (1x, 1y, 2x, 2y)
  set({1, 0, 0, 1}, std::sqrt(bs.t_x() * bs.t_y()));         // |x1 y2>
  set({0, 1, 1, 0}, std::sqrt(bs.r_x() * bs.r_y()));         // |x2 y1>
  set({1, 1, 0, 0}, -kI * std::sqrt(bs.r_y() * bs.t_x()));   // |x1 y1>
  set({0, 0, 1, 1}, kI * std::sqrt(bs.r_x() * bs.t_y()));    // |x2 y2>
  return FockState(basis, std::move(amps));
}

FockState product_state(const BeamSplitterSpec &bs)
{
  const FockBasis basis(2);
  const ModeIndex x1(1, Polarization::x), y1(1, Polarization::y);
  const ModeIndex x2(2, Polarization::x), y2(2, Polarization::y);
  const CMatrix x_photon = std::sqrt(bs.t_x()) * creation(x1, basis) +
                           kI * std::sqrt(bs.r_x()) * creation(x2, basis);
  const CMatrix y_photon = std::sqrt(bs.t_y()) * creation(y2, basis) -
                           kI * std::sqrt(bs.r_y()) * creation(y1, basis);
  const FockState vac = vacuum(basis);
  const auto one = apply(y_photon, vac.amplitudes());
  return FockState(basis, apply(x_photon, one));
}

CMatrix detector_amplitude_op(int detector, Angle theta, const FockBasis &basis)
{
  const double c = std::cos(theta.radians());
  const double s = std::sin(theta.radians());
  return c * annihilation(ModeIndex(detector, Polarization::x), basis) +
         s * annihilation(ModeIndex(detector, Polarization::y), basis);
}

double coincidence_probability(const FockState &state, Angle theta1, Angle theta2)
{
  const auto &basis = state.basis();
  const auto after1 = apply(detector_amplitude_op(1, theta1, basis), state.amplitudes());
  const auto after2 = apply(detector_amplitude_op(2, theta2, basis), after1);
  double p = 0.0;
  for (const auto &z : after2)
  {
    p += std::norm(z);
  }
  return p;
}

double coincidence_probability_closed_form(const BeamSplitterSpec &bs, Angle theta1, Angle theta2)
{
  const double t1 = theta1.radians();
  const double t2 = theta2.radians();
  const double amp = std::sqrt(bs.t_x() * bs.t_y()) * std::cos(t1) * std::sin(t2) +
                     std::sqrt(bs.r_x() * bs.r_y()) * std::sin(t1) * std::cos(t2);
  return amp * amp;
}

double coincidence_correlation(const FockState &state, Angle theta1, Angle theta2)
{
  const Angle quarter(std::numbers::pi / 2.0);
  const double p_same = coincidence_probability(state, theta1, theta2);
  const double p_perp_perp = coincidence_probability(state, theta1 + quarter, theta2 + quarter);
  const double p_1_perp = coincidence_probability(state, theta1, theta2 + quarter);
  const double p_perp_2 = coincidence_probability(state, theta1 + quarter, theta2);
  const double total = p_same + p_perp_perp + p_1_perp + p_perp_2;
  if (!(total > 1e-300))
  {
    throw UndefinedCorrelation("coincidence_correlation: no coincidences at these analyzer angles");
  }
  return ((p_1_perp + p_perp_2) - (p_same + p_perp_perp)) / total;
}

Ket coincidence_subspace_ket(const FockState &state)
{
  return Ket::normalized({state.amplitude({1, 0, 1, 0}), state.amplitude({1, 0, 0, 1}),
                          state.amplitude({0, 1, 1, 0}), state.amplitude({0, 1, 0, 1})});
}

namespace
{

double wrap_angle(double a)
{
  const double two_pi = 2.0 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  if (a > std::numbers::pi)
  {
    a -= two_pi;
  }
  else if (a <= -std::numbers::pi)
  {
    a += two_pi;
  }
  return a;
}

}  // namespace

PairProductState::PairProductState(Angle signal_clock_angle, std::array<double, 3> pump_momentum,
                                   double delta_width)
  : signal_(signal_clock_angle),
    idler_(Angle(-signal_clock_angle.radians())),
    pump_(pump_momentum),
    delta_width_(delta_width)
{
  if (pump_[0] != 0.0 || pump_[1] != 0.0 || !(std::abs(pump_[2]) > 0.0))
  {
    throw InvalidInput("PairProductState: pump momentum must be a nonzero vector along z");
  }
  if (!(delta_width > 0.0))
  {
    throw InvalidInput("PairProductState: delta width must be positive");
  }
}

Complex pair_product_amplitude(const PairProductState &state, Angle signal_test, Angle idler_test)
{
  const double s = signal_test.radians();
  const double i = idler_test.radians();
  const double phi_x = std::exp(kConeEnvelopeKappa * std::cos(s - state.signal_clock_angle().radians()));
  const double phi_y = std::exp(kConeEnvelopeKappa * std::cos(i - state.idler_clock_angle().radians()));
  const double miss = wrap_angle(s + i) / state.delta_width();
  const double delta = std::exp(-0.5 * miss * miss);
  return phi_x * phi_y * delta;
}

SelectionSpec::SelectionSpec(std::vector<Angle> accepted_angles, double half_width_rad)
  : accepted(std::move(accepted_angles)), half_width(half_width_rad)
{
  if (!(half_width_rad > 0.0))
  {
    throw InvalidInput("SelectionSpec: half-width must be positive");
  }
}

Angle clock_angle(double hours) { return Angle(hours * std::numbers::pi / 6.0); }

bool apply_selection(const SelectionSpec &selection, Angle signal)
{
  for (const auto &a : selection.accepted)
  {
    if (std::abs(wrap_angle(signal.radians() - a.radians())) <= selection.half_width)
    {
      return true;
    }
  }
  return false;
}

}  // namespace belllab
