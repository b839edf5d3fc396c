#include "mrsolve/molecules.hpp"

#include "mrsolve/errors.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mrsolve {

const std::vector<MoleculeSpec>& builtin_molecules() {
  static const std::vector<MoleculeSpec> mols = {
      {"HCl", 0.9801045},
      {"CH", 0.929931},
      {"LiH", 0.8801221},
      {"CO", 6.8606719},
  };
  return mols;
}

namespace {
void upsert(std::vector<MoleculeSpec>& mols, const MoleculeSpec& m, int line) {
  for (MoleculeSpec& existing : mols) {
    if (existing.name == m.name) {
      std::fprintf(stderr,
                   "molecules: line %d overrides '%s' (%.7g -> %.7g amu)\n",
                   line, m.name.c_str(), existing.mu_amu, m.mu_amu);
      existing.mu_amu = m.mu_amu;
      return;
    }
  }
  mols.push_back(m);
}
}  // namespace

std::vector<MoleculeSpec> load_molecules(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in)
    throw std::runtime_error("cannot open molecules file: " + file.string());

  std::vector<MoleculeSpec> mols = builtin_molecules();
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    for (char& ch : line)
      if (ch == '=' || ch == '\t' || ch == '\r') ch = ' ';
    std::istringstream ss(line);
    std::string name;
    if (!(ss >> name)) continue;  // blank / comment-only line
    double mu = 0.0;
    std::string extra;
    if (!(ss >> mu) || (ss >> extra))
      throw ParseError("molecules file line " + std::to_string(lineno) +
                           ": expected 'name reduced_mass_amu'",
                       lineno);
    if (!(mu > 0.0))
      throw ParseError("molecules file line " + std::to_string(lineno) +
                           ": reduced mass must be positive",
                       lineno);
    upsert(mols, {name, mu}, lineno);
  }
  return mols;
}

const MoleculeSpec& find_molecule(const std::vector<MoleculeSpec>& mols,
                                  const std::string& name) {
  for (const MoleculeSpec& m : mols)
    if (m.name == name) return m;
  std::string known;
  for (const MoleculeSpec& m : mols) {
    if (!known.empty()) known += ", ";
    known += m.name;
  }
  throw std::invalid_argument("unknown molecule '" + name + "' (known: " + known + ")");
}

}  // namespace mrsolve
