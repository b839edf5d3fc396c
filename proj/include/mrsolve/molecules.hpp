#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace mrsolve {

struct MoleculeSpec {
  std::string name;
  double mu_amu;  // reduced mass in amu, > 0
};

// HCl, CH, LiH, CO.
const std::vector<MoleculeSpec>& builtin_molecules();

// Parses a molecule list: one "name reduced_mass_amu" pair per line
// ('=' separator allowed, '#' starts a comment). Returns builtins merged with
// the file; later entries override by name (warning to stderr). Throws
// ParseError (with line number) on malformed lines or non-positive masses,
// std::runtime_error if the file cannot be read.
std::vector<MoleculeSpec> load_molecules(const std::filesystem::path& file);

// Lookup by name; throws std::invalid_argument listing known names.
const MoleculeSpec& find_molecule(const std::vector<MoleculeSpec>& mols,
                                  const std::string& name);

}  // namespace mrsolve
