// Copyright 2026 The bell-lab Authors
// SPDX-License-Identifier: Apache-2.0

// bell-lab: runs one experiment family per invocation and prints CSV.
//
// exit 0 ok, 2 invalid input, 3 numerical failure, 4 trajectory hit a node.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "belllab/chsh.hpp"
#include "belllab/dbb.hpp"
#include "belllab/error.hpp"
#include "belllab/fock.hpp"
#include "belllab/kernels.hpp"
#include "belllab/lhv.hpp"
#include "belllab/mermin.hpp"
#include "belllab/rng.hpp"
#include "csv.hpp"

namespace
{

using namespace belllab;
using cli::CsvDocument;
using cli::format_number;
using Params = std::vector<std::pair<std::string, std::string>>;

constexpr const char *kVersion = "0.1.0";
constexpr double kIdentityTolerance = 1e-12;

enum Exit
{
  kOk = 0,
  kInvalid = 2,
  kNumerical = 3,
  kNode = 4
};

struct Outcome
{
  CsvDocument doc;
  int status = kOk;
};

std::string num(double v) { return format_number(v); }
std::string par(double v) { return cli::format_param(v); }
std::string num(std::uint64_t v) { return std::to_string(v); }

MeasurementKind parse_kind(const std::string &s)
{
  if (s == "spin")
  {
    return MeasurementKind::spin_half;
  }
  if (s == "photon")
  {
    return MeasurementKind::photon;
  }
  throw InvalidInput("kind must be spin or photon, got '" + s + "'");
}

PairForm parse_form(const std::string &s)
{
  if (s == "product")
  {
    return PairForm::product;
  }
  if (s == "symmetric")
  {
    return PairForm::symmetric;
  }
  if (s == "antisymmetric")
  {
    return PairForm::antisymmetric;
  }
  throw InvalidInput("form must be product, symmetric or antisymmetric, got '" + s + "'");
}

void require_positive(double v, const std::string &name)
{
  if (!(v > 0.0) || !std::isfinite(v))
  {
    throw InvalidInput(name + " must be positive");
  }
}

// ---------------------------------------------------------------- chsh

struct ChshConfig
{
  std::optional<double> alpha, alpha_prime, beta, beta_prime;
  std::string kind = "spin";
  double step = 1.0;
  std::string out;
};

Outcome run_chsh(const ChshConfig &c)
{
  const MeasurementKind kind = parse_kind(c.kind);
  if (!c.alpha || !c.alpha_prime || !c.beta || !c.beta_prime)
  {
    throw InvalidInput("chsh needs --alpha, --alpha-prime, --beta and --beta-prime");
  }
  const ChshSettings st{Angle::degrees(*c.alpha), Angle::degrees(*c.alpha_prime),
                        Angle::degrees(*c.beta), Angle::degrees(*c.beta_prime), kind};
  const double s = chsh_value(singlet(), st).s;
  const Params p{{"alpha", par(*c.alpha)},   {"alpha_prime", par(*c.alpha_prime)},
                 {"beta", par(*c.beta)},     {"beta_prime", par(*c.beta_prime)},
                 {"kind", c.kind},           {"seed", "none"}};
  CsvDocument doc({"alpha", "alpha_prime", "beta", "beta_prime", "kind", "s"},
                  cli::metadata_line(kVersion, "chsh", p));
  doc.row({num(*c.alpha), num(*c.alpha_prime), num(*c.beta), num(*c.beta_prime), c.kind, num(s)});
  return {std::move(doc)};
}

Outcome run_chsh_scan(const ChshConfig &c)
{
  const MeasurementKind kind = parse_kind(c.kind);
  require_positive(c.step, "--step");
  const double step = Angle::degrees(c.step).radians();
  const BellValue best = tsirelson_scan(kind, Angle(step));
  // report grid angles as k * step in degrees, not as converted radians
  auto deg = [&](Angle a) { return num(std::round(a.radians() / step) * c.step); };
  const Params p{{"step", par(c.step)}, {"kind", c.kind}, {"seed", "none"}};
  CsvDocument doc({"best_alpha", "best_alpha_prime", "best_beta", "best_beta_prime", "s_max"},
                  cli::metadata_line(kVersion, "chsh scan", p));
  const auto &st = best.settings;
  doc.row({deg(st.alpha), deg(st.alpha_prime), deg(st.beta), deg(st.beta_prime), num(std::abs(best.s))});
  return {std::move(doc)};
}

// ---------------------------------------------------------------- identity

struct IdentityConfig
{
  std::string kind = "spin";
  std::uint64_t trials = 1000;
  std::optional<std::uint64_t> seed;
  std::string out;
};

Outcome run_identity(const IdentityConfig &c)
{
  const MeasurementKind kind = parse_kind(c.kind);
  if (!c.seed)
  {
    throw InvalidInput("identity needs --seed");
  }
  if (c.trials < 1)
  {
    throw InvalidInput("--trials must be >= 1");
  }
  const double worst = kernels::max_identity_residual_parallel(kind, c.trials, *c.seed);
  const Params p{{"kind", c.kind}, {"trials", num(c.trials)}, {"seed", num(*c.seed)},
                 {"rng", std::string(kRngAlgorithm)}};
  CsvDocument doc({"trials", "max_residual"}, cli::metadata_line(kVersion, "identity", p));
  doc.row({num(c.trials), num(worst)});
  Outcome out{std::move(doc)};
  if (!(worst < kIdentityTolerance))
  {
    std::cerr << "error=numerical_failure detail=max identity residual " << num(worst)
              << " exceeds " << num(kIdentityTolerance) << "\n";
    out.status = kNumerical;
  }
  return out;
}

// ---------------------------------------------------------------- mermin

struct MerminConfig
{
  int n = 3;
  bool scan = false;
  double step = 1.0;
  double a = 0.0;
  double a_prime = 90.0;
  std::string out;
};

Outcome run_mermin(const MerminConfig &c)
{
  if (c.n < 2 || c.n > kMaxGhzParticles)
  {
    throw InvalidInput("--n must lie in [2, " + std::to_string(kMaxGhzParticles) + "]");
  }
  Params p{{"n", std::to_string(c.n)}};
  double f = 0.0;
  if (c.scan)
  {
    require_positive(c.step, "--step");
    f = mermin_shared_scan(c.n, Angle::degrees(c.step)).f_max;
    p.emplace_back("scan", "1");
    p.emplace_back("step", par(c.step));
  }
  else
  {
    f = mermin_value(ghz(c.n), MerminSettings::shared(c.n, Angle::degrees(c.a), Angle::degrees(c.a_prime)));
    p.emplace_back("a", par(c.a));
    p.emplace_back("a_prime", par(c.a_prime));
  }
  p.emplace_back("seed", "none");
  const double det = mermin_deterministic_max(c.n);
  CsvDocument doc({"n", "f_value_or_max", "deterministic_max"}, cli::metadata_line(kVersion, "mermin", p));
  doc.row({std::to_string(c.n), num(f), num(det)});
  return {std::move(doc)};
}

// ---------------------------------------------------------------- lhv

struct LhvConfig
{
  bool enumerate = false;
  std::string model;
  std::uint64_t samples = 1000000;
  std::optional<std::uint64_t> seed;
  std::vector<double> angles{90.0, 0.0, 45.0, 135.0};
  std::string out;
};

Outcome run_lhv(const LhvConfig &c)
{
  if (c.enumerate == !c.model.empty())
  {
    throw InvalidInput("lhv needs exactly one of --enumerate or --model");
  }
  if (c.enumerate)
  {
    CsvDocument doc({"max_s"}, cli::metadata_line(kVersion, "lhv", {{"enumerate", "1"}, {"seed", "none"}}));
    doc.row({chsh_deterministic_max()});
    return {std::move(doc)};
  }
  if (c.model != "sign")
  {
    throw InvalidInput("unknown model '" + c.model + "' (available: sign)");
  }
  if (!c.seed)
  {
    throw InvalidInput("lhv --model needs --seed");
  }
  if (c.angles.size() != 4)
  {
    throw InvalidInput("--angles takes four values: alpha alpha' beta beta'");
  }
  if (c.samples < 1)
  {
    throw InvalidInput("--samples must be >= 1");
  }
  const ChshSettings st{Angle::degrees(c.angles[0]), Angle::degrees(c.angles[1]),
                        Angle::degrees(c.angles[2]), Angle::degrees(c.angles[3]),
                        MeasurementKind::spin_half};
  const ChshEstimate est = simulate_chsh(sign_model(), st, c.samples, *c.seed);
  std::string angles;
  for (std::size_t i = 0; i < c.angles.size(); ++i)
  {
    angles += (i ? ";" : "") + par(c.angles[i]);
  }
  const Params p{{"model", c.model}, {"samples", num(c.samples)}, {"angles", angles},
                 {"seed", num(*c.seed)}, {"rng", std::string(kRngAlgorithm)}};
  CsvDocument doc({"s_estimate", "stderr"}, cli::metadata_line(kVersion, "lhv", p));
  doc.row({est.s, est.stderr_s});
  return {std::move(doc)};
}

// ---------------------------------------------------------------- oumandel

struct OuMandelConfig
{
  double tx = 0.5;
  double ty = 0.5;
  double theta1 = 0.0;
  double theta2 = 0.0;
  std::optional<int> grid;
  bool correlation = false;
  std::string out;
};

Outcome run_oumandel(const OuMandelConfig &c)
{
  const BeamSplitterSpec bs = BeamSplitterSpec::from_transmission(c.tx, c.ty);
  std::vector<std::pair<double, double>> points;
  Params p{{"tx", par(c.tx)}, {"ty", par(c.ty)}};
  if (c.grid)
  {
    if (*c.grid < 2)
    {
      throw InvalidInput("--grid must be >= 2");
    }
    // theta1, theta2 each over [0, 180] degrees
    const double h = 180.0 / (*c.grid - 1);
    for (int i = 0; i < *c.grid; ++i)
      for (int j = 0; j < *c.grid; ++j)
        points.emplace_back(i * h, j * h);
    p.emplace_back("grid", std::to_string(*c.grid));
  }
  else
  {
    points.emplace_back(c.theta1, c.theta2);
    p.emplace_back("theta1", par(c.theta1));
    p.emplace_back("theta2", par(c.theta2));
  }
  if (c.correlation)
  {
    p.emplace_back("correlation", "1");
  }
  p.emplace_back("seed", "none");
  const std::string meta = cli::metadata_line(kVersion, "oumandel", p);
  const FockState state = ou_mandel_state(bs);

  if (c.correlation)
  {
    CsvDocument doc({"theta1", "theta2", "e_value"}, meta);
    for (const auto &[t1, t2] : points)
    {
      double e = std::nan("");
      try
      {
        e = coincidence_correlation(state, Angle::degrees(t1), Angle::degrees(t2));
      }
      catch (const UndefinedCorrelation &)
      {
        if (!c.grid)
        {
          throw;
        }
      }
      doc.row({t1, t2, e});
    }
    return {std::move(doc)};
  }
  CsvDocument doc({"theta1", "theta2", "p_numeric", "p_closed_form", "abs_diff"}, meta);
  for (const auto &[t1, t2] : points)
  {
    const double pn = coincidence_probability(state, Angle::degrees(t1), Angle::degrees(t2));
    const double pc = coincidence_probability_closed_form(bs, Angle::degrees(t1), Angle::degrees(t2));
    doc.row({t1, t2, pn, pc, std::abs(pn - pc)});
  }
  return {std::move(doc)};
}

// ---------------------------------------------------------------- dbb

struct DbbConfig
{
  std::string form = "symmetric";
  WavePacket a{-1.5, 1.0, 1.0, 0.0};
  WavePacket b{1.5, 0.8, -0.5, 0.0};
  double hbar = 1.0;
  double mass = 1.0;
  double t = 0.4;
  int grid = 21;
  double xmin = -4.0;
  double xmax = 4.0;
  bool trajectory = false;
  double x1 = -1.5;
  double x2 = 1.5;
  double t0 = 0.0;
  double t1 = 2.0;
  double dt = 0.01;
  std::string out;
};

Outcome run_dbb(const DbbConfig &c)
{
  const TwoParticleWF wf{c.a, c.b, parse_form(c.form)};
  PhysicalConstants k;
  k.hbar = c.hbar;
  k.mass = c.mass;
  k.validate();
  wf.packet_a.validate();
  wf.packet_b.validate();

  Params p{{"form", c.form},
           {"center_a", par(c.a.center)}, {"width_a", par(c.a.width)},
           {"k_a", par(c.a.wavenumber)},  {"t0_a", par(c.a.start_time)},
           {"center_b", par(c.b.center)}, {"width_b", par(c.b.width)},
           {"k_b", par(c.b.wavenumber)},  {"t0_b", par(c.b.start_time)},
           {"hbar", par(c.hbar)},         {"mass", par(c.mass)}};

  if (c.trajectory)
  {
    p.insert(p.end(), {{"trajectory", "1"}, {"x1", par(c.x1)}, {"x2", par(c.x2)}, {"t0", par(c.t0)},
                       {"t1", par(c.t1)}, {"dt", par(c.dt)}, {"seed", "none"}});
    CsvDocument doc({"t", "x1", "x2"}, cli::metadata_line(kVersion, "dbb", p));
    auto emit = [&](const Trajectory &tr) {
      for (std::size_t i = 0; i < tr.times.size(); ++i)
      {
        doc.row({tr.times[i], tr.x1[i], tr.x2[i]});
      }
    };
    try
    {
      emit(integrate_trajectory(wf, k, {c.x1, c.x2}, c.t0, c.t1, c.dt));
    }
    catch (const TrajectoryHalted &halt)
    {
      // keep the steps taken before the node
      emit(halt.partial());
      std::cerr << "error=node_singularity detail=" << halt.what() << "\n";
      return {std::move(doc), kNode};
    }
    return {std::move(doc)};
  }

  if (c.grid < 2)
  {
    throw InvalidInput("--grid must be >= 2");
  }
  if (!(c.xmax > c.xmin))
  {
    throw InvalidInput("--xmax must exceed --xmin");
  }
  if (c.t < std::max(c.a.start_time, c.b.start_time))
  {
    throw InvalidInput("--t precedes a packet start time");
  }
  p.insert(p.end(), {{"t", par(c.t)}, {"grid", std::to_string(c.grid)}, {"xmin", par(c.xmin)},
                     {"xmax", par(c.xmax)}, {"seed", "none"}});
  CsvDocument doc({"x1", "x2", "v1", "v2", "cross_coupling"}, cli::metadata_line(kVersion, "dbb", p));
  const double h = (c.xmax - c.xmin) / (c.grid - 1);
  for (int i = 0; i < c.grid; ++i)
  {
    for (int j = 0; j < c.grid; ++j)
    {
      const double x1 = c.xmin + i * h;
      const double x2 = c.xmin + j * h;
      const double nan = std::nan("");
      double v1 = nan, v2 = nan, cc = nan;
      try
      {
        std::tie(v1, v2) = velocity_2p(wf, k, x1, x2, c.t);
        cc = cross_coupling(wf, k, x1, x2, c.t);
      }
      catch (const NodeSingularity &)
      {
      }
      doc.row({x1, x2, v1, v2, cc});
    }
  }
  return {std::move(doc)};
}

// ---------------------------------------------------------------- spin

struct SpinConfig
{
  double bx = 0.0;
  double by = 0.0;
  double bz = 1.0;
  double gyro = 1.0;
  int steps = 1000;
  double dt = 0.01;
  std::vector<double> s0{1.0, 0.0, 0.0};
  std::string out;
};

Outcome run_spin(const SpinConfig &c)
{
  if (c.steps < 1)
  {
    throw InvalidInput("--steps must be >= 1");
  }
  require_positive(c.dt, "--dt");
  if (c.s0.size() != 3)
  {
    throw InvalidInput("--s0 takes three components");
  }
  PhysicalConstants k;
  k.gyro = c.gyro;
  k.validate();
  const SpinState s0{{c.s0[0], c.s0[1], c.s0[2]}};
  const Vec3 b{c.bx, c.by, c.bz};
  for (double v : b)
  {
    if (!std::isfinite(v))
    {
      throw InvalidInput("magnetic field must be finite");
    }
  }
  const SpinHistory hist = integrate_spin(s0, b, k, c.steps * c.dt, c.dt);
  auto norm = [](const Vec3 &s) { return std::sqrt(s[0] * s[0] + s[1] * s[1] + s[2] * s[2]); };
  const double n0 = norm(s0.s);

  const Params p{{"bx", par(c.bx)},     {"by", par(c.by)},   {"bz", par(c.bz)},
                 {"gyro", par(c.gyro)}, {"steps", std::to_string(c.steps)},
                 {"dt", par(c.dt)},     {"s0", par(c.s0[0]) + ";" + par(c.s0[1]) + ";" + par(c.s0[2])},
                 {"seed", "none"}};
  CsvDocument doc({"t", "sx", "sy", "sz", "norm_drift"}, cli::metadata_line(kVersion, "spin", p));
  for (std::size_t i = 0; i < hist.times.size(); ++i)
  {
    const Vec3 &s = hist.states[i].s;
    doc.row({hist.times[i], s[0], s[1], s[2], norm(s) - n0});
  }
  return {std::move(doc)};
}

std::string one_line(std::string s)
{
  for (char &ch : s)
  {
    if (ch == '\n' || ch == '\r')
    {
      ch = ' ';
    }
  }
  return s;
}

int fail(const char *code, const std::string &detail, int status)
{
  std::cerr << "error=" << code << " detail=" << one_line(detail) << "\n";
  return status;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"bell-lab: Bell, Mermin, Ou-Mandel and de Broglie-Bohm numerics"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  ChshConfig chsh;
  auto *chsh_cmd = app.add_subcommand("chsh", "CHSH value on the singlet (angles in degrees)");
  chsh_cmd->add_option("--alpha", chsh.alpha, "Alice, first setting");
  chsh_cmd->add_option("--alpha-prime", chsh.alpha_prime, "Alice, second setting");
  chsh_cmd->add_option("--beta", chsh.beta, "Bob, first setting");
  chsh_cmd->add_option("--beta-prime", chsh.beta_prime, "Bob, second setting");
  chsh_cmd->add_option("--kind", chsh.kind, "spin or photon")->capture_default_str();
  chsh_cmd->add_option("--out", chsh.out, "output file (default stdout)");
  auto *scan_cmd = chsh_cmd->add_subcommand("scan", "exhaustive grid search for max |S|");
  scan_cmd->add_option("--step", chsh.step, "grid step in degrees")->capture_default_str();
  scan_cmd->add_option("--kind", chsh.kind, "spin or photon")->capture_default_str();
  scan_cmd->add_option("--out", chsh.out, "output file (default stdout)");

  IdentityConfig ident;
  auto *ident_cmd = app.add_subcommand("identity", "max residual of S^2 = 4I - [A,A'][B,B']");
  ident_cmd->add_option("--kind", ident.kind, "spin or photon")->capture_default_str();
  ident_cmd->add_option("--trials", ident.trials, "random settings to test")->capture_default_str();
  ident_cmd->add_option("--seed", ident.seed, "RNG seed")->required();
  ident_cmd->add_option("--out", ident.out, "output file (default stdout)");

  MerminConfig mermin;
  auto *mermin_cmd = app.add_subcommand("mermin", "Mermin parameter on the n-particle GHZ state");
  mermin_cmd->add_option("--n", mermin.n, "particles, 2..10")->capture_default_str();
  mermin_cmd->add_flag("--scan", mermin.scan, "maximize over a shared (a, a') grid");
  mermin_cmd->add_option("--step", mermin.step, "scan step in degrees")->capture_default_str();
  mermin_cmd->add_option("--a", mermin.a, "shared first setting (degrees)")->capture_default_str();
  mermin_cmd->add_option("--a-prime", mermin.a_prime, "shared second setting (degrees)")->capture_default_str();
  mermin_cmd->add_option("--out", mermin.out, "output file (default stdout)");

  LhvConfig lhv;
  auto *lhv_cmd = app.add_subcommand("lhv", "local hidden-variable bounds");
  auto *enum_flag = lhv_cmd->add_flag("--enumerate", lhv.enumerate, "max CHSH over deterministic strategies");
  auto *model_opt = lhv_cmd->add_option("--model", lhv.model, "Monte Carlo model (sign)");
  enum_flag->excludes(model_opt);
  lhv_cmd->add_option("--samples", lhv.samples, "Monte Carlo samples")->capture_default_str();
  lhv_cmd->add_option("--seed", lhv.seed, "RNG seed");
  lhv_cmd->add_option("--angles", lhv.angles, "alpha alpha' beta beta' in degrees")
      ->expected(4)
      ->delimiter(',')
      ->capture_default_str();
  lhv_cmd->add_option("--out", lhv.out, "output file (default stdout)");

  OuMandelConfig om;
  auto *om_cmd = app.add_subcommand("oumandel", "two-photon coincidences behind a polarizing beam splitter");
  om_cmd->add_option("--tx", om.tx, "x transmission")->capture_default_str();
  om_cmd->add_option("--ty", om.ty, "y transmission")->capture_default_str();
  om_cmd->add_option("--theta1", om.theta1, "analyzer 1 (degrees)")->capture_default_str();
  om_cmd->add_option("--theta2", om.theta2, "analyzer 2 (degrees)")->capture_default_str();
  om_cmd->add_option("--grid", om.grid, "N x N grid over [0, 180] degrees");
  om_cmd->add_flag("--correlation", om.correlation, "polarization correlation instead of probabilities");
  om_cmd->add_option("--out", om.out, "output file (default stdout)");

  DbbConfig dbb;
  auto *dbb_cmd = app.add_subcommand("dbb", "Bohmian velocities for two Gaussian packets");
  dbb_cmd->add_option("--form", dbb.form, "product, symmetric or antisymmetric")->capture_default_str();
  dbb_cmd->add_option("--center-a", dbb.a.center)->capture_default_str();
  dbb_cmd->add_option("--width-a", dbb.a.width)->capture_default_str();
  dbb_cmd->add_option("--k-a", dbb.a.wavenumber)->capture_default_str();
  dbb_cmd->add_option("--t0-a", dbb.a.start_time)->capture_default_str();
  dbb_cmd->add_option("--center-b", dbb.b.center)->capture_default_str();
  dbb_cmd->add_option("--width-b", dbb.b.width)->capture_default_str();
  dbb_cmd->add_option("--k-b", dbb.b.wavenumber)->capture_default_str();
  dbb_cmd->add_option("--t0-b", dbb.b.start_time)->capture_default_str();
  dbb_cmd->add_option("--hbar", dbb.hbar)->capture_default_str();
  dbb_cmd->add_option("--mass", dbb.mass)->capture_default_str();
  dbb_cmd->add_option("--t", dbb.t, "evaluation time for --grid")->capture_default_str();
  dbb_cmd->add_option("--grid", dbb.grid, "N x N points over [xmin, xmax]^2")->capture_default_str();
  dbb_cmd->add_option("--xmin", dbb.xmin)->capture_default_str();
  dbb_cmd->add_option("--xmax", dbb.xmax)->capture_default_str();
  dbb_cmd->add_flag("--trajectory", dbb.trajectory, "integrate one pair trajectory instead");
  dbb_cmd->add_option("--x1", dbb.x1, "trajectory start, particle 1")->capture_default_str();
  dbb_cmd->add_option("--x2", dbb.x2, "trajectory start, particle 2")->capture_default_str();
  dbb_cmd->add_option("--t0", dbb.t0)->capture_default_str();
  dbb_cmd->add_option("--t1", dbb.t1)->capture_default_str();
  dbb_cmd->add_option("--dt", dbb.dt)->capture_default_str();
  dbb_cmd->add_option("--out", dbb.out, "output file (default stdout)");

  SpinConfig spin;
  auto *spin_cmd = app.add_subcommand("spin", "spin precession in a static field");
  spin_cmd->add_option("--bx", spin.bx)->capture_default_str();
  spin_cmd->add_option("--by", spin.by)->capture_default_str();
  spin_cmd->add_option("--bz", spin.bz)->capture_default_str();
  spin_cmd->add_option("--gyro", spin.gyro)->capture_default_str();
  spin_cmd->add_option("--steps", spin.steps)->capture_default_str();
  spin_cmd->add_option("--dt", spin.dt)->capture_default_str();
  spin_cmd->add_option("--s0", spin.s0, "initial spin sx,sy,sz")->expected(3)->delimiter(',')->capture_default_str();
  spin_cmd->add_option("--out", spin.out, "output file (default stdout)");

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::CallForHelp &e)
  {
    return app.exit(e);
  }
  catch (const CLI::CallForAllHelp &e)
  {
    return app.exit(e);
  }
  catch (const CLI::CallForVersion &e)
  {
    return app.exit(e);
  }
  catch (const CLI::ParseError &e)
  {
    return fail("invalid_input", e.what(), kInvalid);
  }

  std::optional<Outcome> result;
  std::string out_path;
  try
  {
    if (*scan_cmd)
    {
      result = run_chsh_scan(chsh);
      out_path = chsh.out;
    }
    else if (*chsh_cmd)
    {
      result = run_chsh(chsh);
      out_path = chsh.out;
    }
    else if (*ident_cmd)
    {
      result = run_identity(ident);
      out_path = ident.out;
    }
    else if (*mermin_cmd)
    {
      result = run_mermin(mermin);
      out_path = mermin.out;
    }
    else if (*lhv_cmd)
    {
      result = run_lhv(lhv);
      out_path = lhv.out;
    }
    else if (*om_cmd)
    {
      result = run_oumandel(om);
      out_path = om.out;
    }
    else if (*dbb_cmd)
    {
      result = run_dbb(dbb);
      out_path = dbb.out;
    }
    else if (*spin_cmd)
    {
      result = run_spin(spin);
      out_path = spin.out;
    }
  }
  catch (const std::invalid_argument &e)  // InvalidInput
  {
    return fail("invalid_input", e.what(), kInvalid);
  }
  catch (const UndefinedCorrelation &e)
  {
    return fail("undefined_correlation", e.what(), kNumerical);
  }
  catch (const NodeSingularity &e)
  {
    return fail("node_singularity", e.what(), kNode);
  }
  catch (const NumericalFailure &e)
  {
    return fail("numerical_failure", e.what(), kNumerical);
  }

  if (!result)
  {
    return fail("invalid_input", "no command given", kInvalid);
  }
  try
  {
    result->doc.write(out_path);
  }
  catch (const std::runtime_error &e)
  {
    return fail("invalid_input", e.what(), kInvalid);
  }
  return result->status;
}
