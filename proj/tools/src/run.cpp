// Copyright 2026 The geoqm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "geoqm_cli/run.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "csv.hpp"
#include "geoqm/calibration.hpp"
#include "geoqm/invariants.hpp"
#include "geoqm/lie_dual.hpp"
#include "geoqm/moyal.hpp"
#include "geoqm/phase_grid.hpp"
#include "geoqm/random.hpp"
#include "geoqm/u4chart.hpp"
#include "geoqm/version.hpp"
#include "geoqm/witness.hpp"

namespace geoqm::cli {

namespace {

using nlohmann::ordered_json;

struct Globals {
  std::string config;
  std::uint64_t seed = 20260101;
  double hbar = 1.0;
  std::string out;
};

struct CheckOpts {
  bool all = false;
  std::vector<std::string> modules;
  bool calibration = false;
  int samples = 200;
};

struct StructureOpts {
  std::string algebra = "u3";
  std::string table = "C";
  bool include_zeros = false;
};

struct TensorOpts {
  std::string chart = "u4";
  bool verify_fields = false;
  bool discrepancies_only = false;
  bool algebra_report = false;
  int points = 20;
};

struct SweepOpts {
  double a_min = 0.1;
  double a_max = 0.4;
  int steps = 31;
  std::optional<double> b;
  double c_fraction = 0.5;
  double phi = 0.0;
};

struct LocusOpts {
  int steps = 100;
  double tol = 1e-13;
};

struct WignerOpts {
  std::string state = "gaussian";
  int n = 512;
  double q0 = 0.0;
  double p0 = 0.0;
  std::optional<double> sigma;
  std::optional<double> p_max;
};

struct MoyalOpts {
  bool hbar_sweep = false;
  std::vector<double> hbars{0.2, 0.1, 0.05};
  bool stationary = false;
};

// Routes data to --out when given, otherwise to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw ValidationError("cannot open output file " + path);
      os_ = file_.get();
    }
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

ordered_json header(const Globals& g) {
  ordered_json j;
  j["tool"] = "geoqm";
  j["version"] = kVersion;
  j["config"] = {{"config_file", g.config}, {"seed", g.seed}, {"hbar", g.hbar}, {"out", g.out}};
  return j;
}

int do_check(const Globals& g, const CheckOpts& o, std::ostream& out) {
  if (!o.all && o.modules.empty() && !o.calibration)
    throw CLI::ValidationError("check", "select --all, --module or --calibration");
  ordered_json j = header(g);
  j["config"]["modules"] = o.modules;
  bool ok = true;
  if (o.all || !o.modules.empty()) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : run_invariants(g.seed, o.all ? std::vector<std::string>{} : o.modules)) {
      ordered_json e{{"name", r.name}, {"module", r.module}, {"tolerance", r.tolerance}, {"passed", r.passed}};
      e["residual"] = std::isfinite(r.residual) ? ordered_json(r.residual) : ordered_json(nullptr);
      if (!r.detail.empty()) e["error"] = r.detail;
      ok = ok && r.passed;
      arr.push_back(std::move(e));
    }
    if (arr.empty()) throw ValidationError("check: no invariant matches the requested modules");
    j["invariants"] = std::move(arr);
  }
  if (o.calibration) {
    if (o.samples < 1) throw ValidationError("check: --samples must be positive");
    ordered_json arr = ordered_json::array();
    for (const auto& c : run_calibration(g.seed, o.samples)) {
      const bool pass = c.max_residual <= 1e-9;
      ok = ok && pass;
      arr.push_back({{"name", c.name},
                     {"fitted", c.fitted},
                     {"hard_coded", c.hard_coded},
                     {"max_residual", c.max_residual},
                     {"passed", pass}});
    }
    j["calibration"] = std::move(arr);
  }
  j["passed"] = ok;
  out << j.dump(2) << '\n';
  return ok ? kExitOk : kExitCheckFailed;
}

int do_structure(const StructureOpts& o, std::ostream& out) {
  LieBasis basis = o.algebra == "u2xu2" ? LieBasis::two_qubit_product()
                                        : LieBasis::gell_mann(o.algebra == "u2" ? 2 : o.algebra == "u3" ? 3 : 4);
  const StructureConstants sc = structure_constants(basis);
  CsvWriter csv(out, {"mu", "nu", "rho", "value"});
  for (int mu = 0; mu < sc.dim(); ++mu)
    for (int nu = 0; nu < sc.dim(); ++nu)
      for (int rho = 0; rho < sc.dim(); ++rho) {
        double v = o.table == "C" ? sc.C(mu, nu, rho) : sc.d(mu, nu, rho);
        if (std::abs(v) < 1e-14) {
          if (!o.include_zeros) continue;
          v = 0.0;
        }
        csv.row(mu, nu, rho, v);
      }
  return kExitOk;
}

std::vector<U4ChartPoint> chart_points(std::uint64_t seed, int count) {
  Sampler s(seed);
  std::vector<U4ChartPoint> pts;
  for (int i = 0; i < count; ++i) pts.push_back(to_chart(s.hermitian(4)));
  return pts;
}

int do_tensors(const Globals& g, const TensorOpts& o, std::ostream& out) {
  if (!o.verify_fields && !o.algebra_report)
    throw CLI::ValidationError("tensors", "select --verify-fields or --algebra-report");
  if (o.points < 1) throw ValidationError("tensors: --points must be positive");
  const auto pts = chart_points(g.seed, o.points);
  if (o.verify_fields) {
    CsvWriter csv(out, {"field", "component", "point_id", "derived", "printed", "delta"});
    for (const auto& c : compare_printed_fields(pts)) {
      if (o.discrepancies_only && std::abs(c.delta()) <= 1e-9) continue;
      csv.row(c.field, c.component, c.point_id, c.derived, c.printed, c.delta());
    }
  }
  if (o.algebra_report) {
    const auto r = field_algebra_report(pts.front(), pts);
    ordered_json j = header(g);
    j["hamiltonian_rank"] = r.hamiltonian_rank;
    j["riemann_rank"] = r.riemann_rank;
    j["combined_rank"] = r.combined_rank;
    j["algebra_dimension"] = r.algebra_dimension;
    j["closure_dimension"] = r.closure_dimension;
    j["antisymmetry_residual"] = r.antisymmetry_residual;
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

int do_sweep(const SweepOpts& o, std::ostream& out) {
  if (o.steps < 1) throw ValidationError("witness sweep: --steps must be positive");
  CsvWriter csv(out, {"a", "b", "c", "phi", "S", "C", "wedge_norm", "bracket_SC"});
  for (int i = 0; i < o.steps; ++i) {
    const double a = o.steps == 1 ? o.a_min : o.a_min + (o.a_max - o.a_min) * i / (o.steps - 1);
    const double b = o.b.value_or(a);
    const double c = o.c_fraction * 2.0 * std::sqrt(std::max(0.0, a * b));
    const RhoTParams p{a, b, c, o.phi};
    const WitnessRecord w = witness_differentials(p);
    csv.row(a, b, c, o.phi, w.S, w.C, w.wedge_norm, poisson_bracket_SC(p));
  }
  return kExitOk;
}

int do_locus(const LocusOpts& o, std::ostream& out) {
  if (o.steps < 1) throw ValidationError("witness locus: --steps must be positive");
  CsvWriter csv(out, {"a", "b", "c", "c_closed_form"});
  for (int i = 0; i < o.steps; ++i) {
    const double a = 1.0 / 3.0 + (1.0 / 6.0) * (i + 1) / (o.steps + 1);
    const LocusPoint lp = locus_on_slice(a, o.tol);
    csv.row(lp.a, lp.b, lp.c ? *lp.c : std::nan(""), locus_closed_form(a));
  }
  return kExitOk;
}

WaveFunction1D read_wavefunction(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("wigner: cannot read " + path);
  std::string line;
  std::vector<double> q;
  std::vector<cplx> v;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'q') continue;
    std::istringstream ls(line);
    double x = 0, re = 0, im = 0;
    char c1 = 0, c2 = 0;
    if (!(ls >> x >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',')
      throw ValidationError("wigner: malformed line in " + path + ": " + line);
    q.push_back(x);
    v.emplace_back(re, im);
  }
  if (q.size() < 4) throw ValidationError("wigner: need at least 4 samples in " + path);
  const double dq = q[1] - q[0];
  for (std::size_t i = 1; i < q.size(); ++i)
    if (std::abs(q[i] - q[0] - dq * static_cast<double>(i)) > 1e-9 * std::max(1.0, std::abs(q[i])))
      throw ValidationError("wigner: q samples in " + path + " are not uniformly spaced");
  const auto n = static_cast<Eigen::Index>(q.size());
  ComplexVector s(n);
  for (Eigen::Index i = 0; i < n; ++i) s(i) = v[static_cast<std::size_t>(i)];
  return WaveFunction1D::normalized(GridAxis{q[0], q[0] + dq * static_cast<double>(n), n}, s);
}

int do_wigner(const Globals& g, const WignerOpts& o, std::ostream& out, std::ostream& err) {
  const double extent = 8.0 * std::sqrt(g.hbar);
  std::optional<WaveFunction1D> psi;
  std::optional<PhaseSpaceGrid> grid;
  if (o.state.rfind("file:", 0) == 0) {
    psi = read_wavefunction(o.state.substr(5));
    const double pm = o.p_max.value_or(extent);
    grid.emplace(psi->axis(), GridAxis{-pm, pm, psi->axis().n}, g.hbar);
  } else {
    const GridAxis axis{-extent, extent, o.n};
    grid.emplace(axis, GridAxis{-o.p_max.value_or(extent), o.p_max.value_or(extent), o.n}, g.hbar);
    if (o.state == "gaussian") {
      const double sigma = o.sigma.value_or(std::sqrt(0.5 * g.hbar));
      psi = WaveFunction1D::normalized(axis, gaussian_packet(axis, o.q0, o.p0, sigma, g.hbar));
    } else if (o.state.rfind("fock:", 0) == 0) {
      int level = -1;
      try {
        level = std::stoi(o.state.substr(5));
      } catch (const std::exception&) {
        throw ValidationError("wigner: bad Fock level in " + o.state);
      }
      if (level < 0) throw ValidationError("wigner: Fock level must be non-negative");
      psi = WaveFunction1D::normalized(axis, oscillator_eigenfunction(level, axis, g.hbar));
    } else {
      throw ValidationError("wigner: unknown state " + o.state + " (gaussian, fock:n, file:path)");
    }
  }
  const WignerResult w = wigner_function(*psi, *grid);
  for (const auto& msg : w.warnings) err << "warning: " << msg << '\n';
  CsvWriter csv(out, {"q", "p", "W"});
  for (Eigen::Index j = 0; j < w.w.rows(); ++j)
    for (Eigen::Index l = 0; l < w.w.cols(); ++l) csv.row(grid->q().at(j), grid->p().at(l), w.w(j, l));
  return kExitOk;
}

int do_moyal(const Globals& g, const MoyalOpts& o, std::ostream& out, std::ostream& err) {
  if (!o.hbar_sweep && !o.stationary) throw CLI::ValidationError("moyal", "select --hbar-sweep or --stationary");
  if (o.hbar_sweep) {
    const SemiclassicalSweep s = semiclassical_sweep(o.hbars);
    CsvWriter csv(out, {"hbar", "max_error"});
    for (const auto& pt : s.points) csv.row(pt.hbar, pt.max_error);
    err << "slope " << num(s.slope) << '\n';
  }
  if (o.stationary) {
    const PhaseSpaceGrid grid = PhaseSpaceGrid::oscillator_default(g.hbar);
    ordered_json j = header(g);
    ordered_json arr = ordered_json::array();
    for (int n = 0; n <= 1; ++n) {
      const double e = g.hbar * (n + 0.5);
      arr.push_back({{"level", n}, {"energy", e}, {"residual", stationary_moyal_check(oscillator_wigner(n, grid), e)}});
    }
    j["stationary"] = std::move(arr);
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric quantum mechanics toolkit", "geoqm"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  Globals g;
  app.set_config("--config", "", "TOML config file; command-line flags take precedence");
  app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
  app.add_option("--hbar", g.hbar, "Reduced Planck constant")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--out", g.out, "Output file (default stdout)");

  CheckOpts check;
  auto* c = app.add_subcommand("check", "Run the invariant suite and print a JSON summary");
  c->add_flag("--all", check.all, "Every invariant");
  c->add_option("--module", check.modules, "Restrict to modules")
      ->check(CLI::IsMember({"kahler", "lie-dual", "u4chart", "witness", "phasespace"}));
  c->add_flag("--calibration", check.calibration, "Refit the calibrated prefactors");
  c->add_option("--samples", check.samples, "Calibration samples")->capture_default_str();

  StructureOpts st;
  auto* s = app.add_subcommand("structure", "Dump structure constants as CSV");
  s->add_option("--algebra", st.algebra, "u2, u3, u4 or u2xu2")
      ->capture_default_str()
      ->check(CLI::IsMember({"u2", "u3", "u4", "u2xu2"}));
  s->add_option("--table", st.table, "C (antisymmetric) or d (symmetric)")
      ->capture_default_str()
      ->check(CLI::IsMember({"C", "d"}));
  s->add_flag("--include-zeros", st.include_zeros, "Emit vanishing entries too");

  TensorOpts tn;
  auto* t = app.add_subcommand("tensors", "Chart vector fields against the printed expressions");
  t->add_option("--chart", tn.chart, "Chart")->capture_default_str()->check(CLI::IsMember({"u4"}));
  t->add_flag("--verify-fields", tn.verify_fields, "CSV comparison of derived and printed fields");
  t->add_flag("--discrepancies-only", tn.discrepancies_only, "Only rows with |delta| > 1e-9");
  t->add_flag("--algebra-report", tn.algebra_report, "JSON ranks of the field algebra");
  t->add_option("--points", tn.points, "Random chart points")->capture_default_str();

  auto* w = app.add_subcommand("witness", "Entropy and concurrence on the rho_t family");
  w->require_subcommand(1);
  SweepOpts sw;
  auto* ws = w->add_subcommand("sweep", "S, C, |dS ^ dC| and {S, C} along a line in a");
  ws->add_option("--a-min", sw.a_min)->capture_default_str();
  ws->add_option("--a-max", sw.a_max)->capture_default_str();
  ws->add_option("--steps", sw.steps)->capture_default_str();
  ws->add_option("--b", sw.b, "Fixed b (default b = a)");
  ws->add_option("--c-fraction", sw.c_fraction, "c as a fraction of 2 sqrt(ab)")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  ws->add_option("--phi", sw.phi)->capture_default_str();
  LocusOpts lo;
  auto* wl = w->add_subcommand("locus", "Zero set of dS ^ dC on b = a");
  wl->add_option("--steps", lo.steps, "Points in a on (1/3, 1/2)")->capture_default_str();
  wl->add_option("--tol", lo.tol, "Bisection tolerance in c")->capture_default_str();

  WignerOpts wg;
  auto* wi = app.add_subcommand("wigner", "Wigner function on a phase-space grid as CSV");
  wi->add_option("--state", wg.state, "gaussian, fock:n or file:path (CSV q,re,im)")->capture_default_str();
  wi->add_option("--n", wg.n, "Grid points per axis (power of two)")->capture_default_str();
  wi->add_option("--q0", wg.q0)->capture_default_str();
  wi->add_option("--p0", wg.p0)->capture_default_str();
  wi->add_option("--sigma", wg.sigma, "Position width (default sqrt(hbar/2))");
  wi->add_option("--p-max", wg.p_max, "Momentum half-range (default 8 sqrt(hbar))");

  MoyalOpts mo;
  auto* m = app.add_subcommand("moyal", "Moyal product diagnostics");
  m->add_flag("--hbar-sweep", mo.hbar_sweep, "Semiclassical commutator error against hbar");
  m->add_option("--hbars", mo.hbars, "hbar values for the sweep")->expected(2, -1);
  m->add_flag("--stationary", mo.stationary, "H * rho_E - E rho_E for the two lowest levels");

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Sink sink(g.out, out);
    if (*c) return do_check(g, check, *sink);
    if (*s) return do_structure(st, *sink);
    if (*t) return do_tensors(g, tn, *sink);
    if (*ws) return do_sweep(sw, *sink);
    if (*wl) return do_locus(lo, *sink);
    if (*wi) return do_wigner(g, wg, *sink, err);
    if (*m) return do_moyal(g, mo, *sink, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitUsage;
}

}  // namespace geoqm::cli
