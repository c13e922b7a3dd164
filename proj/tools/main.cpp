// Command-line front end: closed-form bounds, Hamiltonian synthesis, exact
// evolution, sawtooth sweeps, physical-unit conversion, and the brute-force
// minimality search. JSON on standard output (one document per run), CSV for
// sweeps, diagnostics on standard error.
//
// Exit codes: 0 success, 2 usage or domain error, 3 invalid physics input
// (non-Hermitian Hamiltonian file), 4 I/O error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gatetime/bounds.hpp"
#include "gatetime/linalg.hpp"
#include "gatetime/search.hpp"
#include "gatetime/synthesis.hpp"
#include "gatetime/verify.hpp"
#include "json_out.hpp"

namespace {

using namespace gatetime;
using gatetime_cli::fmt_num;
using gatetime_cli::JsonWriter;

constexpr int kExitUsage = 2;
constexpr int kExitPhysics = 3;
constexpr int kExitIo = 4;

struct HermiticityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Units {
  bool si = false;
  // Natural-units time to reported time (seconds in SI mode, where energies
  // are quoted in eV).
  double time_scale() const { return si ? constants::kHbarEvs : 1.0; }
  const char* label() const { return si ? "SI" : "natural"; }
};

// Flag pair --energy / --energy-ev, resolved against --units.
struct EnergyFlags {
  double natural = 0.0;
  double ev = 0.0;
  CLI::Option* natural_opt = nullptr;
  CLI::Option* ev_opt = nullptr;

  void attach(CLI::App* cmd) {
    natural_opt = cmd->add_option("--energy", natural,
                                  "average energy budget (natural units)");
    ev_opt = cmd->add_option("--energy-ev", ev,
                             "average energy budget in eV (with --units si)");
  }
  EnergyBudget resolve(const Units& units) const {
    if (units.si) {
      if (ev_opt->count() == 0) {
        throw std::domain_error("--units si requires --energy-ev");
      }
      if (natural_opt->count() > 0) {
        throw std::domain_error("--energy conflicts with --units si");
      }
      return EnergyBudget(ev);
    }
    if (natural_opt->count() == 0) {
      throw std::domain_error("missing --energy");
    }
    if (ev_opt->count() > 0) {
      throw std::domain_error("--energy-ev requires --units si");
    }
    return EnergyBudget(natural);
  }
};

void write_matrix(JsonWriter& w, const Matrix2& m) {
  w.begin_array();
  for (int r = 0; r < 2; ++r) {
    w.begin_array();
    for (int c = 0; c < 2; ++c) {
      w.begin_array();
      w.value(m(r, c).real());
      w.value(m(r, c).imag());
      w.end_array();
    }
    w.end_array();
  }
  w.end_array();
}

int emit_document(const std::string& doc, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << doc << "\n";
    return 0;
  }
  std::ofstream f(output_path);
  if (!f) throw IoError("cannot open output file: " + output_path);
  f << doc << "\n";
  if (!f) throw IoError("cannot write output file: " + output_path);
  return 0;
}

QubitState state_from_flags(const std::vector<double>& v) {
  return QubitState::normalized(cx(v[0], v[1]), cx(v[2], v[3]));
}

// ---------------------------------------------------------------------------
// bound
// ---------------------------------------------------------------------------

int run_bound(double theta_raw, const EnergyFlags& energy_flags,
              const Units& units, const std::string& output) {
  const GatePhase theta(theta_raw);
  const EnergyBudget energy = energy_flags.resolve(units);
  const double tau = gate_min_time(theta, energy) * units.time_scale();
  const EigenvaluePair pair = eigenvalue_pair(theta, energy);

  JsonWriter w;
  w.begin_object();
  w.key("command").value("bound");
  w.key("inputs").begin_object();
  w.key("theta").value(theta_raw);
  w.key(units.si ? "energy_ev" : "energy").value(energy.value());
  w.end_object();
  w.key("results").begin_object();
  w.key("tau").value(tau);
  w.key("e1").value(pair.e1);
  w.key("e2").value(pair.e2);
  w.key("theta_mod_pi").value(theta.theta_mod_pi());
  w.key("branch").value(theta.high_branch() ? "[pi,2pi)" : "[0,pi)");
  w.end_object();
  w.key("units").value(units.label());
  w.end_object();
  return emit_document(w.str(), output);
}

// ---------------------------------------------------------------------------
// synth
// ---------------------------------------------------------------------------

int run_synth(double theta_raw, const EnergyFlags& energy_flags,
              const Units& units, const std::string& output) {
  const GatePhase theta(theta_raw);
  const EnergyBudget energy = energy_flags.resolve(units);
  const SynthesizedGate gate = synthesize_gate(GateSpec{theta, energy});
  const EigenvaluePair pair = eigenvalue_pair(theta, energy);

  JsonWriter w;
  w.begin_object();
  w.key("command").value("synth");
  w.key("inputs").begin_object();
  w.key("theta").value(theta_raw);
  w.key(units.si ? "energy_ev" : "energy").value(energy.value());
  w.end_object();
  w.key("results").begin_object();
  w.key("hamiltonian");
  write_matrix(w, gate.h.matrix());
  w.key("e1").value(pair.e1);
  w.key("e2").value(pair.e2);
  w.key("tau").value(gate.tau * units.time_scale());
  w.end_object();
  w.key("units").value(units.label());
  w.end_object();
  return emit_document(w.str(), output);
}

// ---------------------------------------------------------------------------
// evolve
// ---------------------------------------------------------------------------

Matrix2 parse_hamiltonian_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open Hamiltonian file: " + path);
  try {
    nlohmann::json j;
    f >> j;
    const auto& rows = j.at("matrix");
    if (!rows.is_array() || rows.size() != 2) {
      throw std::domain_error("matrix must be 2x2");
    }
    Matrix2 m;
    for (int r = 0; r < 2; ++r) {
      const auto& row = rows.at(r);
      if (!row.is_array() || row.size() != 2) {
        throw std::domain_error("matrix must be 2x2");
      }
      for (int c = 0; c < 2; ++c) {
        const auto& entry = row.at(c);
        if (!entry.is_array() || entry.size() != 2) {
          throw std::domain_error("matrix entries must be [re, im] pairs");
        }
        m(r, c) = cx(entry.at(0).get<double>(), entry.at(1).get<double>());
      }
    }
    if (!m.all_finite()) {
      throw std::domain_error("matrix entries must be finite");
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw std::domain_error(std::string("malformed Hamiltonian file: ") +
                            e.what());
  }
}

int run_evolve(const std::string& path, double time,
               const std::vector<double>& state_flags, const Units& units,
               const std::string& output) {
  const Matrix2 m = parse_hamiltonian_file(path);
  const double residual = HermitianOperator2::hermiticity_residual(m);
  if (residual > 1e-9) {
    throw HermiticityError("hamiltonian is not Hermitian (residual " +
                           fmt_num(residual) + " > 1e-09)");
  }
  // Within the 1e-9 gate: average away the sub-tolerance asymmetry so the
  // strict operator type accepts the matrix. The residual is reported.
  Matrix2 symmetrized = 0.5 * (m + m.adjoint());
  if (units.si) {
    // eV entries with time in seconds: scale to angular frequencies.
    symmetrized = cx(1.0 / constants::kHbarEvs, 0.0) * symmetrized;
  }
  const HermitianOperator2 h(symmetrized);
  const QubitState in = state_from_flags(state_flags);
  const QubitState out = apply(expm_hermitian(h, time), in);
  const double norm_residual =
      std::abs(std::norm(out.a()) + std::norm(out.b()) - 1.0);

  JsonWriter w;
  w.begin_object();
  w.key("command").value("evolve");
  w.key("inputs").begin_object();
  w.key("hamiltonian").value(path);
  w.key("time").value(time);
  w.key("state").begin_array();
  for (double v : state_flags) w.value(v);
  w.end_array();
  w.end_object();
  w.key("results").begin_object();
  w.key("final_state").begin_array();
  w.begin_array().value(out.a().real()).value(out.a().imag()).end_array();
  w.begin_array().value(out.b().real()).value(out.b().imag()).end_array();
  w.end_array();
  w.key("norm_residual").value(norm_residual);
  w.key("hermiticity_residual").value(residual);
  w.end_object();
  w.key("units").value(units.label());
  w.end_object();
  return emit_document(w.str(), output);
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

std::vector<GatePhase> parse_theta_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) {
    throw std::domain_error("--thetas expects start:stop:count");
  }
  double start = 0.0, stop = 0.0;
  long count = 0;
  try {
    size_t pos = 0;
    start = std::stod(parts[0], &pos);
    if (pos != parts[0].size()) throw std::invalid_argument(parts[0]);
    stop = std::stod(parts[1], &pos);
    if (pos != parts[1].size()) throw std::invalid_argument(parts[1]);
    count = std::stol(parts[2], &pos);
    if (pos != parts[2].size()) throw std::invalid_argument(parts[2]);
  } catch (const std::exception&) {
    throw std::domain_error("--thetas expects numeric start:stop:count");
  }
  if (count < 2) {
    throw std::domain_error("--thetas count must be >= 2");
  }
  if (!std::isfinite(start) || !std::isfinite(stop)) {
    throw std::domain_error("--thetas range must be finite");
  }
  std::vector<GatePhase> thetas;
  thetas.reserve(static_cast<size_t>(count));
  for (long i = 0; i < count; ++i) {
    thetas.emplace_back(start + (stop - start) * static_cast<double>(i) /
                                    static_cast<double>(count - 1));
  }
  return thetas;
}

int run_sweep(const std::string& theta_spec, const EnergyFlags& energy_flags,
              bool oracle, const std::string& out_path, const Units& units) {
  const std::vector<GatePhase> thetas = parse_theta_spec(theta_spec);
  const EnergyBudget energy = energy_flags.resolve(units);
  const std::vector<SpeedLimitReport> reports =
      sweep_sawtooth(thetas, energy, oracle);

  const double scale = units.time_scale();
  std::string csv = "theta,tau_analytic,e1,e2,fidelity,phase_residual";
  if (oracle) csv += ",oracle_min_time,margin";
  csv += "\n";
  for (const SpeedLimitReport& r : reports) {
    csv += fmt_num(r.theta.theta());
    csv += ",";
    csv += fmt_num(r.tau_analytic * scale);
    csv += ",";
    csv += fmt_num(r.e1);
    csv += ",";
    csv += fmt_num(r.e2);
    csv += ",";
    csv += fmt_num(r.achieved_fidelity);
    csv += ",";
    csv += fmt_num(r.phase_residual);
    if (oracle) {
      csv += ",";
      if (r.oracle_min_time) {
        csv += fmt_num(*r.oracle_min_time * scale);
        csv += ",";
        csv += fmt_num(*r.oracle_min_time / r.tau_analytic - 1.0);
      } else {
        csv += ",";
      }
    }
    csv += "\n";
  }

  if (out_path.empty()) {
    std::cout << csv;
    return 0;
  }
  std::ofstream f(out_path);
  if (!f) throw IoError("cannot open output file: " + out_path);
  f << csv;
  if (!f) throw IoError("cannot write output file: " + out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// physical
// ---------------------------------------------------------------------------

int run_physical(double wavelength_nm, const std::string& output) {
  const double tau = physical_gate_time(wavelength_nm);
  const double gap = resonant_gap_from_wavelength(wavelength_nm);

  JsonWriter w;
  w.begin_object();
  w.key("command").value("physical");
  w.key("inputs").begin_object();
  w.key("wavelength_nm").value(wavelength_nm);
  w.end_object();
  w.key("results").begin_object();
  w.key("tau_seconds").value(tau);
  w.key("gap_ev").value(gap);
  w.end_object();
  w.key("units").value("SI");
  w.end_object();
  return emit_document(w.str(), output);
}

// ---------------------------------------------------------------------------
// rotate
// ---------------------------------------------------------------------------

int run_rotate(double alpha, const EnergyFlags& energy_flags,
               const std::vector<double>& state_flags, const Units& units,
               const std::string& output) {
  const EnergyBudget energy = energy_flags.resolve(units);
  const QubitState initial = state_from_flags(state_flags);
  const SynthesizedRotation rot =
      synthesize_rotation(RotationSpec{alpha, energy, initial});
  const UnitaryOperator2 u = expm_hermitian(rot.h, rot.tau);
  const double overlap = std::abs(inner(apply(u, initial), initial));

  JsonWriter w;
  w.begin_object();
  w.key("command").value("rotate");
  w.key("inputs").begin_object();
  w.key("alpha").value(alpha);
  w.key(units.si ? "energy_ev" : "energy").value(energy.value());
  w.key("state").begin_array();
  for (double v : state_flags) w.value(v);
  w.end_array();
  w.end_object();
  w.key("results").begin_object();
  w.key("tau_alpha").value(rot.tau * units.time_scale());
  w.key("hamiltonian");
  write_matrix(w, rot.h.matrix());
  w.key("overlap_magnitude").value(overlap);
  w.end_object();
  w.key("units").value(units.label());
  w.end_object();
  return emit_document(w.str(), output);
}

// ---------------------------------------------------------------------------
// minsearch
// ---------------------------------------------------------------------------

struct MinsearchFlags {
  int grid_e = 0;
  int grid_phi1 = 0;
  int grid_phi2 = 0;
  double time_resolution = 0.0;
  double time_horizon = 0.0;
  double success_tol = 0.0;
  int refine_iterations = -1;
  bool serial = false;
  CLI::Option* res_opt = nullptr;
  CLI::Option* horizon_opt = nullptr;
  CLI::Option* tol_opt = nullptr;
  CLI::Option* refine_opt = nullptr;
  CLI::Option* grid_e_opt = nullptr;
  CLI::Option* grid_phi1_opt = nullptr;
  CLI::Option* grid_phi2_opt = nullptr;

  void attach(CLI::App* cmd) {
    grid_e_opt = cmd->add_option("--grid-e", grid_e,
                                 "eigenvalue grid samples (default 64)");
    grid_phi1_opt = cmd->add_option("--grid-phi1", grid_phi1,
                                    "frame polar samples (default 32)");
    grid_phi2_opt = cmd->add_option("--grid-phi2", grid_phi2,
                                    "frame azimuth samples (default 32)");
    res_opt = cmd->add_option("--time-resolution", time_resolution,
                              "time scan step (default tau/200)");
    horizon_opt = cmd->add_option("--horizon", time_horizon,
                                  "time scan horizon (default 2*tau)");
    tol_opt = cmd->add_option("--success-tol", success_tol,
                              "scan tolerance (default 1e-3)");
    refine_opt = cmd->add_option("--refine-iterations", refine_iterations,
                                 "refinement rounds (default 3)");
    cmd->add_flag("--serial", serial,
                  "run the single-thread reference implementation");
  }
  void apply(SearchConfig& cfg, const Units& units) const {
    if (grid_e_opt->count() > 0) cfg.grid_e = grid_e;
    if (grid_phi1_opt->count() > 0) cfg.grid_phi1 = grid_phi1;
    if (grid_phi2_opt->count() > 0) cfg.grid_phi2 = grid_phi2;
    const double to_natural = units.si ? 1.0 / constants::kHbarEvs : 1.0;
    if (res_opt->count() > 0) {
      cfg.time_resolution = time_resolution * to_natural;
    }
    if (horizon_opt->count() > 0) {
      cfg.time_horizon = time_horizon * to_natural;
    }
    if (tol_opt->count() > 0) cfg.success_tol = success_tol;
    if (refine_opt->count() > 0) cfg.refine_iterations = refine_iterations;
  }
};

int run_minsearch(double theta_raw, const EnergyFlags& energy_flags,
                  const MinsearchFlags& flags, const Units& units,
                  const std::string& output) {
  const GatePhase theta(theta_raw);
  const EnergyBudget energy = energy_flags.resolve(units);
  SearchConfig cfg = SearchConfig::for_gate(theta, energy);
  flags.apply(cfg, units);
  const SearchResult r = flags.serial ? search_min_gate_time_serial(cfg)
                                      : search_min_gate_time(cfg);

  const double scale = units.time_scale();
  JsonWriter w;
  w.begin_object();
  w.key("command").value("minsearch");
  w.key("inputs").begin_object();
  w.key("theta").value(theta_raw);
  w.key(units.si ? "energy_ev" : "energy").value(energy.value());
  w.key("grid_e").value(cfg.grid_e);
  w.key("grid_phi1").value(cfg.grid_phi1);
  w.key("grid_phi2").value(cfg.grid_phi2);
  w.key("time_resolution").value(cfg.time_resolution * scale);
  w.key("time_horizon").value(cfg.time_horizon * scale);
  w.key("success_tol").value(cfg.success_tol);
  w.key("refine_iterations").value(cfg.refine_iterations);
  w.key("serial").value(flags.serial);
  w.end_object();
  w.key("results").begin_object();
  w.key("found").value(r.found);
  if (r.found) {
    w.key("min_time_found").value(r.min_time_found * scale);
    w.key("analytic_time").value(r.analytic_time * scale);
    w.key("margin").value(r.margin);
    w.key("best_params").begin_object();
    w.key("e1").value(r.best_params.e1());
    w.key("e2").value(r.best_params.e2());
    w.key("phi1").value(r.best_params.phi1());
    w.key("phi2").value(r.best_params.phi2());
    w.end_object();
  } else {
    w.key("analytic_time").value(r.analytic_time * scale);
  }
  w.key("evaluations").value(r.evaluations);
  w.end_object();
  w.key("units").value(units.label());
  w.end_object();
  return emit_document(w.str(), output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "gatetime: time-optimal qubit gate bounds, synthesis, evolution, and "
      "brute-force minimality verification"};
  app.require_subcommand(1);

  Units units;
  std::string units_flag = "natural";
  app.add_option("--units", units_flag, "unit system: natural or si")
      ->check(CLI::IsMember({"natural", "si"}));
  std::string output_path;
  app.add_option("--output", output_path,
                 "write the JSON document to this path instead of stdout");

  CLI::App* bound = app.add_subcommand("bound", "minimum gate time");
  double bound_theta = 0.0;
  bound->add_option("--theta", bound_theta, "phase shift (radians)")
      ->required();
  EnergyFlags bound_energy;
  bound_energy.attach(bound);

  CLI::App* synth =
      app.add_subcommand("synth", "time-optimal gate Hamiltonian");
  double synth_theta = 0.0;
  synth->add_option("--theta", synth_theta, "phase shift (radians)")
      ->required();
  EnergyFlags synth_energy;
  synth_energy.attach(synth);

  CLI::App* evolve =
      app.add_subcommand("evolve", "evolve a state under a Hamiltonian file");
  std::string evolve_path;
  evolve->add_option("--hamiltonian", evolve_path, "JSON Hamiltonian file")
      ->required();
  double evolve_time = 0.0;
  evolve->add_option("--time", evolve_time, "evolution time")->required();
  std::vector<double> evolve_state;
  evolve
      ->add_option("--state", evolve_state,
                   "initial amplitudes: a_re a_im b_re b_im")
      ->expected(4)
      ->required();

  CLI::App* sweep =
      app.add_subcommand("sweep", "tau-vs-theta sawtooth sweep to CSV");
  std::string sweep_thetas;
  sweep->add_option("--thetas", sweep_thetas, "theta grid start:stop:count")
      ->required();
  EnergyFlags sweep_energy;
  sweep_energy.attach(sweep);
  bool sweep_oracle = false;
  sweep->add_flag("--oracle", sweep_oracle,
                  "attach the minimality oracle to every row");
  std::string sweep_out;
  sweep->add_option("--out", sweep_out, "CSV output path (default stdout)");

  CLI::App* physical =
      app.add_subcommand("physical", "wavelength to gate time and level gap");
  double wavelength = 0.0;
  physical
      ->add_option("--wavelength-nm", wavelength,
                   "transition wavelength in nm")
      ->required();

  CLI::App* rotate =
      app.add_subcommand("rotate", "time-optimal known-state rotation");
  double rotate_alpha = 0.0;
  rotate->add_option("--alpha", rotate_alpha, "rotation angle in [0, pi/2]")
      ->required();
  EnergyFlags rotate_energy;
  rotate_energy.attach(rotate);
  std::vector<double> rotate_state{0.0, 0.0, 1.0, 0.0};
  rotate
      ->add_option("--state", rotate_state,
                   "known state amplitudes: a_re a_im b_re b_im")
      ->expected(4);

  CLI::App* minsearch = app.add_subcommand(
      "minsearch", "brute-force search for the minimum gate time");
  double minsearch_theta = 0.0;
  minsearch->add_option("--theta", minsearch_theta, "phase shift (radians)")
      ->required();
  EnergyFlags minsearch_energy;
  minsearch_energy.attach(minsearch);
  MinsearchFlags minsearch_flags;
  minsearch_flags.attach(minsearch);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  units.si = (units_flag == "si");

  try {
    if (bound->parsed()) {
      return run_bound(bound_theta, bound_energy, units, output_path);
    }
    if (synth->parsed()) {
      return run_synth(synth_theta, synth_energy, units, output_path);
    }
    if (evolve->parsed()) {
      return run_evolve(evolve_path, evolve_time, evolve_state, units,
                        output_path);
    }
    if (sweep->parsed()) {
      return run_sweep(sweep_thetas, sweep_energy, sweep_oracle, sweep_out,
                       units);
    }
    if (physical->parsed()) {
      return run_physical(wavelength, output_path);
    }
    if (rotate->parsed()) {
      return run_rotate(rotate_alpha, rotate_energy, rotate_state, units,
                        output_path);
    }
    if (minsearch->parsed()) {
      return run_minsearch(minsearch_theta, minsearch_energy, minsearch_flags,
                           units, output_path);
    }
  } catch (const HermiticityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPhysics;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
