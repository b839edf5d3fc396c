#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "mrsolve/molecules.hpp"
#include "mrsolve/state.hpp"
#include "mrsolve/units.hpp"

namespace mrsolve {

// Constants used when generating the molecular tables.
struct TableOptions {
  double amu_to_energy = UnitSystem::kDefaultAmuToEnergy;  // eV/amu
  double hbar_c = UnitSystem::kDefaultHbarC;               // eV*Angstrom
};

struct GridRow {
  std::string state;
  double invb;  // 1/bohr (table 1) or 1/pm (tables 2, 3)
};

// Published row grids. Table 1: 28 rows; tables 2 and 3: 29 rows each
// (2p/3p at four screenings, 4p..4f at three, 5p..6g at 0.025 only; the
// molecular grids also include 3d at 0.100). Throws std::invalid_argument
// for ids outside 1..3.
std::vector<GridRow> table_grid(int table_id);

struct TableCell {
  std::string molecule;  // empty in the atomic table
  std::string state;
  double invb;
  double alpha;   // 0 encodes the degenerate alpha in {0,1} column
  double energy;  // hartree (table 1) or eV (tables 2, 3)
  std::string flag;  // anomaly tag when the matching published cell is suspect
};

struct TableDocument {
  int id = 0;
  UnitMode mode = UnitMode::Atomic;
  std::string a_rule = "2b";
  double hbar_c = UnitSystem::kDefaultHbarC;
  double amu_to_energy = UnitSystem::kDefaultAmuToEnergy;
  std::vector<std::string> molecules;  // column groups; empty in table 1
  std::vector<TableCell> cells;        // ordered molecule > state > invb > alpha
};

// Bound-state energy for a molecule at screening invb (1/pm), with the table
// convention A = 2 b[pm] and the reduced mass taken from `mol`.
double molecular_energy(const QuantumState& s, const MoleculeSpec& mol,
                        double invb_per_pm, double alpha,
                        const TableOptions& opt = {});

// Regenerates table `id` from the closed-form spectrum. Tables 2 and 3 take
// their molecules (HCl, CH / LiH, CO) from `mols`.
TableDocument generate_table(int id, const std::vector<MoleculeSpec>& mols,
                             const TableOptions& opt = {});

// Deterministic serializations. CSV header is
//   state,invb,alpha,energy            (atomic table)
//   molecule,state,invb,alpha,energy   (molecular tables)
// with energies fixed to 7 (hartree) or 8 (eV) decimals.
std::string to_csv(const TableDocument& doc);
nlohmann::ordered_json to_json(const TableDocument& doc);

// Known inconsistencies in the published reference tabulation, emitted
// alongside generated tables.
nlohmann::ordered_json errata_json();

// Fixed-point energy formatting used by the CSV writer and the CLI.
std::string format_energy(double e, UnitMode mode);

}  // namespace mrsolve
