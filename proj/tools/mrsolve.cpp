#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mrsolve/errors.hpp"
#include "mrsolve/molecules.hpp"
#include "mrsolve/numerov.hpp"
#include "mrsolve/spectrum.hpp"
#include "mrsolve/tables.hpp"
#include "mrsolve/wavefunction.hpp"

namespace {

using namespace mrsolve;

// Flag combinations and environment problems exit with code 2; domain
// failures (no bound state, unknown molecule, unreadable file) with 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double amu_constant(double flag_value, bool flag_given) {
  if (flag_given) return flag_value;
  const char* env = std::getenv("MRSOLVE_AMU_EV");
  if (!env || !*env) return UnitSystem::kDefaultAmuToEnergy;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !std::isfinite(v) || !(v > 0.0))
    throw UsageError("MRSOLVE_AMU_EV must be a positive number, got '" +
                     std::string(env) + "'");
  return v;
}

std::vector<MoleculeSpec> molecule_list(const std::string& file) {
  if (file.empty()) return builtin_molecules();
  return load_molecules(file);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

const std::vector<std::string>& all_state_labels() {
  static const std::vector<std::string> labels = {
      "2p", "3p", "3d", "4p", "4d", "4f", "5p",
      "5d", "5f", "5g", "6p", "6d", "6f", "6g"};
  return labels;
}

struct EnergyArgs {
  std::string state;
  double alpha = 0.0;
  double invb = 0.0;
  double A = 0.0;
  bool A_given = false;
  std::string A_rule = "2b";
  std::string units = "atomic";
  std::string molecule;
  std::string molecules_file;
  double amu_ev = UnitSystem::kDefaultAmuToEnergy;
  bool amu_given = false;
  double hbar_c = UnitSystem::kDefaultHbarC;
};

double resolve_A(const EnergyArgs& a) {
  if (a.A_given) return a.A;
  if (a.A_rule == "2b") return 2.0 / a.invb;
  throw UsageError("--A-rule none requires an explicit --A");
}

int run_energy(const EnergyArgs& a) {
  const QuantumState s = state_from_label(a.state);
  const double A = resolve_A(a);
  double e;
  UnitMode mode;
  if (a.units == "atomic") {
    mode = UnitMode::Atomic;
    const double b = 1.0 / a.invb;
    e = energy_nl(s, PotentialParams{A, a.alpha, b}, UnitSystem::atomic());
  } else {
    mode = UnitMode::Molecular;
    if (a.molecule.empty())
      throw UsageError("--units molecular requires --molecule");
    const auto mols = molecule_list(a.molecules_file);
    const MoleculeSpec& mol = find_molecule(mols, a.molecule);
    const double amu = amu_constant(a.amu_ev, a.amu_given);
    const UnitSystem u = UnitSystem::molecular(mol.mu_amu, amu, a.hbar_c);
    const double b_pm = 1.0 / a.invb;
    e = energy_nl(s, PotentialParams{A, a.alpha, b_pm / 100.0}, u);
  }
  std::cout << format_energy(e, mode) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "mrsolve: closed-form and numerical bound states of the Manning-Rosen "
      "potential"};
  app.require_subcommand(1);

  // ---- energy ----
  EnergyArgs ea;
  CLI::App* energy = app.add_subcommand(
      "energy", "Closed-form bound-state energy for one state");
  energy->add_option("--state", ea.state, "spectroscopic label, e.g. 2p")
      ->required();
  energy->add_option("--alpha", ea.alpha, "potential shape parameter")
      ->required();
  energy->add_option("--invb", ea.invb, "screening 1/b (1/bohr or 1/pm)")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* eopt_A = energy->add_option("--A", ea.A, "explicit coupling A");
  energy->add_option("--A-rule", ea.A_rule, "A rule when --A absent: 2b|none")
      ->check(CLI::IsMember({"2b", "none"}));
  energy->add_option("--units", ea.units, "atomic|molecular")
      ->check(CLI::IsMember({"atomic", "molecular"}));
  energy->add_option("--molecule", ea.molecule, "molecule name (molecular units)");
  energy->add_option("--molecules-file", ea.molecules_file,
                     "extra molecule definitions");
  auto* eopt_amu = energy->add_option("--amu-ev", ea.amu_ev,
                                      "amu-to-energy constant in eV");
  energy->add_option("--hbar-c", ea.hbar_c, "hbar*c in eV*Angstrom");

  // ---- wavefunction ----
  struct {
    std::string state;
    double alpha = 0.0;
    double invb = 0.0;
    double A = 0.0;
    std::string A_rule = "2b";
    int points = 2000;
    double rmin = 0.0, rmax = 0.0;
    std::string norm = "closed";
    std::string format = "csv";
    std::string out;
  } wa;
  CLI::App* wave = app.add_subcommand(
      "wavefunction", "Normalized radial wavefunction samples");
  wave->add_option("--state", wa.state)->required();
  wave->add_option("--alpha", wa.alpha)->required();
  wave->add_option("--invb", wa.invb)->required()->check(CLI::PositiveNumber);
  auto* wopt_A = wave->add_option("--A", wa.A, "explicit coupling A");
  wave->add_option("--A-rule", wa.A_rule)->check(CLI::IsMember({"2b", "none"}));
  wave->add_option("--points", wa.points)->check(CLI::Range(2, 2000000));
  wave->add_option("--rmin", wa.rmin, "grid start (default 1e-4 b)");
  wave->add_option("--rmax", wa.rmax, "grid end (default deep tail)");
  wave->add_option("--norm", wa.norm, "closed|quadrature")
      ->check(CLI::IsMember({"closed", "quadrature"}));
  wave->add_option("--format", wa.format)->check(CLI::IsMember({"csv", "json"}));
  wave->add_option("--out", wa.out, "output path (default stdout)");

  // ---- table ----
  struct {
    int id = 0;
    std::string format = "csv";
    std::string out;
    std::string molecules_file;
    double amu_ev = UnitSystem::kDefaultAmuToEnergy;
    std::string errata;
    bool no_errata = false;
    double hbar_c = UnitSystem::kDefaultHbarC;
  } ta;
  CLI::App* table = app.add_subcommand(
      "table", "Regenerate a published energy table from the closed form");
  table->add_option("--id", ta.id, "table id: 1 (atomic), 2, 3 (molecular)")
      ->required()
      ->check(CLI::Range(1, 3));
  table->add_option("--format", ta.format)->check(CLI::IsMember({"csv", "json"}));
  table->add_option("--out", ta.out, "output path (default stdout)");
  table->add_option("--molecules-file", ta.molecules_file);
  auto* topt_amu = table->add_option("--amu-ev", ta.amu_ev);
  table->add_option("--hbar-c", ta.hbar_c);
  table->add_option("--errata", ta.errata,
                    "errata path (default errata.json beside --out)");
  table->add_flag("--no-errata", ta.no_errata, "skip writing errata.json");

  // ---- verify ----
  struct {
    double alpha = 0.75;
    std::vector<double> invb = {0.025};
    std::vector<std::string> states;
    int n_points = 0;
    std::string format = "csv";
    std::string out;
  } va;
  CLI::App* verify = app.add_subcommand(
      "verify",
      "Check the closed form against the Numerov oracle and quantify the "
      "centrifugal-approximation error (atomic units, A = 2b)");
  verify->add_option("--alpha", va.alpha);
  verify->add_option("--invb", va.invb, "screenings (repeatable)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--states", va.states,
                     "state labels (default: the full table grid)");
  verify->add_option("--n-points", va.n_points, "Numerov grid points");
  verify->add_option("--format", va.format)->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--out", va.out);

  // ---- hulthen ----
  struct {
    std::string state;
    double delta = 0.0;
    double strength = 1.0;
  } ha;
  CLI::App* hulthen = app.add_subcommand(
      "hulthen", "Screened-Coulomb reduction energy (atomic units)");
  hulthen->add_option("--state", ha.state)->required();
  hulthen->add_option("--delta", ha.delta, "screening parameter")
      ->required()
      ->check(CLI::PositiveNumber);
  hulthen->add_option("--strength", ha.strength, "Z e^2 (default 1)")
      ->check(CLI::PositiveNumber);

  // ---- coulomb ----
  struct {
    std::string state;
    double Z = 1.0;
  } ca;
  CLI::App* coulomb = app.add_subcommand(
      "coulomb", "Coulomb-limit energy -Z^2/(2 N^2) (atomic units)");
  coulomb->add_option("--state", ca.state)->required();
  coulomb->add_option("--Z", ca.Z)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*energy) {
      ea.A_given = eopt_A->count() > 0;
      ea.amu_given = eopt_amu->count() > 0;
      return run_energy(ea);
    }

    if (*wave) {
      const QuantumState s = state_from_label(wa.state);
      const double b = 1.0 / wa.invb;
      double A;
      if (wopt_A->count() > 0)
        A = wa.A;
      else if (wa.A_rule == "2b")
        A = 2.0 * b;
      else
        throw UsageError("--A-rule none requires an explicit --A");
      const PotentialParams p{A, wa.alpha, b};
      std::vector<double> grid;
      if (wa.rmin > 0.0 || wa.rmax > 0.0) {
        if (!(wa.rmin > 0.0 && wa.rmax > wa.rmin))
          throw UsageError("--rmin/--rmax must satisfy 0 < rmin < rmax");
        grid.resize(wa.points);
        const double lo = std::log(wa.rmin), hi = std::log(wa.rmax);
        for (int i = 0; i < wa.points; ++i)
          grid[i] = std::exp(lo + (hi - lo) * i / (wa.points - 1));
      } else {
        grid = default_radial_grid(s, p, wa.points);
      }
      const NormMethod method = wa.norm == "closed" ? NormMethod::ClosedForm
                                                    : NormMethod::Quadrature;
      const RadialFunction rf = radial_wavefunction(s, p, grid, method);
      if (wa.format == "csv") {
        std::ostringstream os;
        write_csv(rf, os);
        write_text(wa.out, os.str());
      } else {
        write_text(wa.out, to_json(rf).dump(2) + "\n");
      }
      return 0;
    }

    if (*table) {
      TableOptions opt;
      opt.amu_to_energy = amu_constant(ta.amu_ev, topt_amu->count() > 0);
      opt.hbar_c = ta.hbar_c;
      const auto mols = molecule_list(ta.molecules_file);
      const TableDocument doc = generate_table(ta.id, mols, opt);
      if (ta.format == "csv")
        write_text(ta.out, to_csv(doc));
      else
        write_text(ta.out, to_json(doc).dump(2) + "\n");
      if (!ta.no_errata) {
        std::string epath = ta.errata;
        if (epath.empty()) {
          namespace fs = std::filesystem;
          epath = (ta.out.empty() || ta.out == "-")
                      ? "errata.json"
                      : (fs::path(ta.out).parent_path() / "errata.json").string();
          if (epath == "errata.json" || epath == "/errata.json")
            epath = "errata.json";
        }
        std::ofstream out(epath, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open errata file: " + epath);
        out << errata_json().dump(2) << "\n";
        std::cerr << "wrote errata to " << epath << "\n";
      }
      return 0;
    }

    if (*verify) {
      std::vector<QuantumState> states;
      const auto& labels = va.states.empty() ? all_state_labels() : va.states;
      states.reserve(labels.size());
      for (const std::string& lab : labels) states.push_back(state_from_label(lab));
      SolverConfig cfg;
      if (va.n_points > 0) cfg.n_points = va.n_points;
      const UnitSystem u = UnitSystem::atomic();

      std::ostringstream os;
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      if (va.format == "csv")
        os << "state,invb,alpha,e_closed,e_numerov_approx,e_numerov_exact,"
              "err_approx\n";
      for (double invb : va.invb) {
        const double b = 1.0 / invb;
        const PotentialParams p{2.0 * b, va.alpha, b};
        const auto report = approximation_error_report(p, states, u, cfg);
        for (const SpectrumEntry& e : report) {
          if (va.format == "csv") {
            char buf[200];
            std::snprintf(buf, sizeof buf, "%s,%.3f,%g,%.9f,%.9f,%.9f,%.3e\n",
                          to_label(e.state).c_str(), invb, va.alpha, e.e_closed,
                          e.e_oracle_approx, e.e_oracle_exact, e.err_approx);
            os << buf;
          } else {
            rows.push_back({{"state", to_label(e.state)},
                            {"invb", invb},
                            {"alpha", va.alpha},
                            {"e_closed", e.e_closed},
                            {"e_numerov_approx", e.e_oracle_approx},
                            {"e_numerov_exact", e.e_oracle_exact},
                            {"err_approx", e.err_approx}});
          }
        }
      }
      if (va.format == "csv")
        write_text(va.out, os.str());
      else
        write_text(va.out, rows.dump(2) + "\n");
      return 0;
    }

    if (*hulthen) {
      const QuantumState s = state_from_label(ha.state);
      const double e =
          hulthen_energy(s, ha.strength, ha.delta, UnitSystem::atomic());
      std::cout << format_energy(e, UnitMode::Atomic) << "\n";
      return 0;
    }

    if (*coulomb) {
      const QuantumState s = state_from_label(ca.state);
      const double e = coulomb_limit(s, ca.Z, UnitSystem::atomic());
      std::cout << format_energy(e, UnitMode::Atomic) << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
