// Acceptance suite: exercises the seven headline requirements end to end and
// prints one [PASS]/[FAIL] line per criterion. Exit code 0 only if all pass.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mrsolve/errors.hpp"
#include "mrsolve/molecules.hpp"
#include "mrsolve/numerov.hpp"
#include "mrsolve/quadrature.hpp"
#include "mrsolve/special_functions.hpp"
#include "mrsolve/spectrum.hpp"
#include "mrsolve/state.hpp"
#include "mrsolve/tables.hpp"
#include "mrsolve/wavefunction.hpp"

#include "reference_values.hpp"

using namespace mrsolve;
namespace fs = std::filesystem;

namespace {

const UnitSystem kAtomic = UnitSystem::atomic();

struct CheckFailure {
  std::string message;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw CheckFailure{message};
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

PotentialParams atomic_params(double invb, double alpha) {
  const double b = 1.0 / invb;
  return PotentialParams{2.0 * b, alpha, b};
}

bool is_suspect_atomic(const refdata::AtomicRow& row) {
  return std::string(row.state) == "2p" && std::fabs(row.invb - 0.100) < 1e-12;
}

// ---------------------------------------------------------------------------
// Criterion 1: the closed-form spectrum reproduces the published atomic table
// to 1e-6 hartree on every cell except the two documented 2p, 1/b = 0.100
// anomalies, which must genuinely disagree. Budget: under one second.
std::string criterion_closed_form_table() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  int cells = 0, excluded = 0;
  for (const refdata::AtomicRow& row : refdata::kAtomicTable) {
    const QuantumState s = state_from_label(row.state);
    for (double alpha : {0.75, 1.5}) {
      const double published = (alpha == 0.75) ? row.e075 : row.e15;
      const double computed =
          energy_nl(s, atomic_params(row.invb, alpha), kAtomic);
      const double dev = std::fabs(computed - published);
      ++cells;
      if (is_suspect_atomic(row)) {
        ++excluded;
        require(dev > 1e-6,
                fmt("suspect cell %s 1/b=%.3f alpha=%g unexpectedly matches",
                    row.state, row.invb, alpha));
      } else {
        require(dev <= 1e-6,
                fmt("%s 1/b=%.3f alpha=%g: |%.9f - %.7f| = %.3g > 1e-6",
                    row.state, row.invb, alpha, computed, published, dev));
        worst = std::max(worst, dev);
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  require(cells == 56 && excluded == 2,
          fmt("unexpected cell bookkeeping: %d cells, %d excluded", cells,
              excluded));
  require(secs < 1.0, fmt("closed-form sweep took %.2f s (budget 1 s)", secs));
  return fmt("54/56 cells within 1e-6 (worst %.2e), 2 anomalous cells "
             "confirmed to disagree, %.3f s",
             worst, secs);
}

// ---------------------------------------------------------------------------
// Criterion 2: the independent Numerov oracle validates both operators. In
// approximate-centrifugal mode it lands on the closed form (<= 1e-6) for all
// 56 atomic cells; in exact mode it reproduces the published exactly-solved
// eigenvalues at 1/b = 0.025 (<= 1e-5 for all 28).
std::string criterion_numerov_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst_approx = 0.0, worst_exact = 0.0;
  int approx_cells = 0, exact_cells = 0;
  for (const refdata::AtomicRow& row : refdata::kAtomicTable) {
    const QuantumState s = state_from_label(row.state);
    for (double alpha : {0.75, 1.5}) {
      const PotentialParams p = atomic_params(row.invb, alpha);
      const double closed = energy_nl(s, p, kAtomic);
      const double approx =
          numerov_eigenvalue(p, s.l, s.n, Centrifugal::Approximate, kAtomic);
      const double dev = std::fabs(approx - closed);
      ++approx_cells;
      require(dev <= 1e-6,
              fmt("numerov(approx) vs closed: %s 1/b=%.3f alpha=%g dev %.3g",
                  row.state, row.invb, alpha, dev));
      worst_approx = std::max(worst_approx, dev);

      const double published_exact =
          (alpha == 0.75) ? row.exact075 : row.exact15;
      if (std::fabs(row.invb - 0.025) < 1e-12 && !std::isnan(published_exact)) {
        const double exact =
            numerov_eigenvalue(p, s.l, s.n, Centrifugal::Exact, kAtomic);
        const double dev_exact = std::fabs(exact - published_exact);
        ++exact_cells;
        require(dev_exact <= 1e-5,
                fmt("numerov(exact) vs published: %s alpha=%g dev %.3g",
                    row.state, alpha, dev_exact));
        worst_exact = std::max(worst_exact, dev_exact);
      }
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  require(approx_cells == 56 && exact_cells == 28,
          fmt("unexpected coverage: %d approx, %d exact", approx_cells,
              exact_cells));
  require(secs < 60.0, fmt("oracle sweep took %.1f s (budget 60 s)", secs));
  return fmt("approx mode matched closed form on 56/56 (worst %.2e); exact "
             "mode matched 28/28 published eigenvalues (worst %.2e); %.1f s",
             worst_approx, worst_exact, secs);
}

// ---------------------------------------------------------------------------
// Criterion 3: the centrifugal-approximation error |E_closed - E_exact| for
// the 2p, alpha = 0.75 state grows strictly with the screening 1/b.
std::string criterion_error_growth() {
  std::vector<double> errs;
  for (double invb : {0.025, 0.050, 0.075}) {
    const PotentialParams p = atomic_params(invb, 0.75);
    const double closed = energy_nl({0, 1}, p, kAtomic);
    const double exact =
        numerov_eigenvalue(p, 1, 0, Centrifugal::Exact, kAtomic);
    errs.push_back(std::fabs(closed - exact));
  }
  require(errs[0] < errs[1] && errs[1] < errs[2],
          fmt("not strictly increasing: %.3e, %.3e, %.3e", errs[0], errs[1],
              errs[2]));
  return fmt("|closed - exact| = %.3e -> %.3e -> %.3e over 1/b = "
             "0.025/0.050/0.075",
             errs[0], errs[1], errs[2]);
}

// ---------------------------------------------------------------------------
// Criterion 4: the molecular tables are reproduced to 5e-5 eV for a single
// amu-to-energy constant inside its physical band, excluding the documented
// anomalies; the CO alpha in {0,1} column anomaly is exactly a factor of two;
// the errata document lists every identified inconsistency.
std::string criterion_molecular_tables() {
  struct Source {
    const char* mol;
    const refdata::MolecularRow* rows;
    bool skip_a01;  // CO's alpha in {0,1} column is the factor-2 anomaly
  };
  const auto& mols = builtin_molecules();
  const Source sources[] = {{"HCl", refdata::kHCl, false},
                            {"CH", refdata::kCH, false},
                            {"LiH", refdata::kLiH, false},
                            {"CO", refdata::kCO, true}};

  auto max_dev_for = [&](double amu_ev) {
    TableOptions opt;
    opt.amu_to_energy = amu_ev;
    double worst = 0.0;
    for (const Source& src : sources) {
      const MoleculeSpec& mol = find_molecule(mols, src.mol);
      for (int i = 0; i < 29; ++i) {
        const refdata::MolecularRow& row = src.rows[i];
        const QuantumState s = state_from_label(row.state);
        const bool suspect_15 =
            std::string(row.state) == "2p" && std::fabs(row.invb - 0.100) < 1e-12;
        const struct {
          double alpha, published;
          bool skip;
        } cols[] = {{0.0, row.e_a01, src.skip_a01},
                    {0.75, row.e_a075, false},
                    {1.5, row.e_a15, suspect_15}};
        for (const auto& col : cols) {
          if (col.skip || std::isnan(col.published)) continue;
          const double computed =
              molecular_energy(s, mol, row.invb, col.alpha, opt);
          worst = std::max(worst, std::fabs(computed - col.published));
        }
      }
    }
    return worst;
  };

  // Scan the plausible band for the constant that the published numbers used.
  double best_amu = 0.0, best_dev = 1e9;
  for (double amu = 931.494e6; amu <= 931.502e6 + 1.0; amu += 1e3) {
    const double dev = max_dev_for(amu);
    if (dev < best_dev) {
      best_dev = dev;
      best_amu = amu;
    }
  }
  require(best_dev <= 5e-5,
          fmt("no amu constant in band reproduces the tables: best %.3g eV at "
              "%.6g eV/amu",
              best_dev, best_amu));

  TableOptions best;
  best.amu_to_energy = best_amu;

  // The excluded 2p, 1/b = 0.100, alpha = 1.5 cells genuinely disagree.
  for (const Source& src : sources) {
    const MoleculeSpec& mol = find_molecule(mols, src.mol);
    for (int i = 0; i < 29; ++i) {
      const refdata::MolecularRow& row = src.rows[i];
      if (std::string(row.state) != "2p" || std::fabs(row.invb - 0.100) > 1e-12)
        continue;
      const double computed =
          molecular_energy({0, 1}, mol, row.invb, 1.5, best);
      require(std::fabs(computed - row.e_a15) > 5e-5,
              fmt("%s 2p 1/b=0.100 alpha=1.5 unexpectedly matches", src.mol));
    }
  }

  // CO alpha in {0,1}: uniform published/computed ratio 2 except the one
  // double-printed cell.
  const MoleculeSpec& co = find_molecule(mols, "CO");
  int ratio_rows = 0;
  for (int i = 0; i < 29; ++i) {
    const refdata::MolecularRow& row = refdata::kCO[i];
    if (std::isnan(row.e_a01)) continue;
    const QuantumState s = state_from_label(row.state);
    const double ratio =
        row.e_a01 / molecular_energy(s, co, row.invb, 0.0, best);
    ++ratio_rows;
    if (std::string(row.state) == "3d" && std::fabs(row.invb - 0.075) < 1e-12)
      require(ratio > 2.005 && ratio < 2.02,
              fmt("CO 3d 1/b=0.075 ratio %.6f outside double-print band",
                  ratio));
    else
      require(ratio > 1.99 && ratio < 2.01,
              fmt("CO %s 1/b=%.3f ratio %.6f not ~2", row.state, row.invb,
                  ratio));
  }
  require(ratio_rows == 29, fmt("expected 29 CO ratio rows, saw %d", ratio_rows));

  // Errata completeness.
  const auto errata = errata_json();
  std::vector<std::string> ids;
  for (const auto& item : errata["items"]) ids.push_back(item["id"]);
  for (const char* id :
       {"co-alpha01-column-factor-2", "co-3p-3d-0.075-double-print",
        "2p-invb-0.100-cells", "normalization-closed-form-factor",
        "force-constant-prefactor"}) {
    bool found = false;
    for (const auto& have : ids) found = found || have == id;
    require(found, fmt("errata item '%s' missing", id));
  }

  return fmt("all included cells within %.2e eV at %.6g eV/amu; CO column "
             "ratio ~2 on 29/29 rows; %zu errata items",
             best_dev, best_amu, ids.size());
}

// ---------------------------------------------------------------------------
// Criterion 5: the corrected closed-form normalization agrees with adaptive
// quadrature of the norm integral to 1e-8 (relative) for every tabulated
// state, and the literal published combination differs by exactly 2 eps per
// squared norm at n = 0.
std::string criterion_normalization() {
  const std::vector<std::pair<QuantumState, const char*>> states = {
      {{0, 1}, "2p"}, {{1, 1}, "3p"}, {{0, 2}, "3d"}, {{2, 1}, "4p"},
      {{1, 2}, "4d"}, {{0, 3}, "4f"}, {{3, 1}, "5p"}, {{2, 2}, "5d"},
      {{1, 3}, "5f"}, {{0, 4}, "5g"}, {{4, 1}, "6p"}, {{3, 2}, "6d"},
      {{2, 3}, "6f"}, {{1, 4}, "6g"}};
  double worst = 0.0;
  int pairs = 0;
  for (double alpha : {0.75, 1.5}) {
    const PotentialParams p = atomic_params(0.025, alpha);
    for (const auto& [s, label] : states) {
      const double closed = normalization_closed(s, p);
      const double quad = normalization_quadrature(s, p);
      const double rel = std::fabs(closed - quad) / quad;
      ++pairs;
      require(rel <= 1e-8,
              fmt("%s alpha=%g: closed %.12e vs quadrature %.12e (rel %.2e)",
                  label, alpha, closed, quad, rel));
      worst = std::max(worst, rel);
    }
  }

  // Literal published combination: squared-norm ratio is exactly 2 eps at
  // n = 0 (single term), and is not a constant rescaling once n >= 1.
  auto literal_ratio = [](const QuantumState& s, const PotentialParams& p) {
    const ShapeParams sp = shape_params(s, p);
    const int n = s.n;
    const double te = 2.0 * sp.epsilon, tl = 2.0 * sp.Lambda;
    const double logG = log_gamma(n + tl + 2.0) +
                        2.0 * log_gamma(n + te + 1.0) -
                        log_gamma(n + te + tl + 2.0);
    std::vector<LogTerm> terms;
    for (int pp = 0; pp <= n; ++pp)
      for (int rr = 0; rr <= n; ++rr) {
        const double x = n + te + rr - pp, y = pp + tl + 3.0;
        double lg = logG + log_gamma(n + te + tl + rr + 2.0) -
                    log_gamma(pp + 1.0) - log_gamma(rr + 1.0) -
                    log_gamma(n - pp + 1.0) - log_gamma(n - rr + 1.0) -
                    log_gamma(pp + tl + 2.0) - log_gamma(n + te - pp + 1.0) -
                    log_gamma(te + rr + 1.0) + log_gamma(x) + log_gamma(y) -
                    log_gamma(x + y) + std::log(x);
        terms.push_back({lg, ((pp + rr) % 2 == 0) ? 1.0 : -1.0});
      }
    const double literal = p.b * ((n % 2 == 0) ? 1.0 : -1.0) *
                           sum_signed_logs(std::move(terms));
    const double corrected = 1.0 / std::pow(normalization_closed(s, p), 2.0);
    return literal / corrected;
  };
  for (double alpha : {0.75, 1.5}) {
    const PotentialParams p = atomic_params(0.025, alpha);
    const double r0 = literal_ratio({0, 1}, p);
    const double te = 2.0 * shape_params({0, 1}, p).epsilon;
    require(std::fabs(r0 / te - 1.0) <= 1e-9,
            fmt("n=0 literal/corrected = %.9f, expected 2 eps = %.9f", r0, te));
    const double r1 = literal_ratio({1, 1}, p);
    const double te1 = 2.0 * shape_params({1, 1}, p).epsilon;
    require(std::fabs(r1 - te1) > 0.01 * te1 && std::fabs(r1 - 1.0) > 0.5,
            fmt("n=1 literal ratio %.6f suspiciously clean", r1));
  }

  return fmt("closed vs quadrature within %.2e (rel) on %d state/alpha "
             "pairs; published literal form confirmed off by 2 eps at n=0",
             worst, pairs);
}

// ---------------------------------------------------------------------------
// Criterion 6: structural property suite (invariances, reductions, shapes).
std::string criterion_properties() {
  const std::vector<QuantumState> states = {
      {0, 1}, {1, 1}, {0, 2}, {2, 1}, {1, 2}, {0, 3}, {3, 1},
      {2, 2}, {1, 3}, {0, 4}, {4, 1}, {3, 2}, {2, 3}, {1, 4}};

  // (a) alpha -> 1 - alpha is bitwise-exact on dyadic alphas, including
  // randomized k/1024 draws; unbound states must fail identically.
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> draw(-2048, 3072);
  std::vector<std::pair<double, double>> pairs = {{0.75, 0.25}, {1.5, -0.5}};
  for (int i = 0; i < 200; ++i) {
    const double a = draw(rng) / 1024.0;
    pairs.push_back({a, 1.0 - a});
  }
  int reflections = 0;
  for (const auto& [a1, a2] : pairs) {
    for (const QuantumState& s : states) {
      const PotentialParams p1{80.0, a1, 40.0};
      const PotentialParams p2{80.0, a2, 40.0};
      double e1 = 0.0, e2 = 0.0;
      bool unbound1 = false, unbound2 = false;
      double ac1 = 0.0, ac2 = 0.0;
      try {
        e1 = energy_nl(s, p1, kAtomic);
      } catch (const NoBoundState& ex) {
        unbound1 = true;
        ac1 = ex.critical_coupling();
      }
      try {
        e2 = energy_nl(s, p2, kAtomic);
      } catch (const NoBoundState& ex) {
        unbound2 = true;
        ac2 = ex.critical_coupling();
      }
      require(unbound1 == unbound2,
              fmt("reflection changed boundness at alpha=%g", a1));
      if (unbound1)
        require(ac1 == ac2, fmt("carried A_c differs at alpha=%g", a1));
      else
        require(e1 == e2,
                fmt("E(alpha=%g) != E(alpha=%g) for n=%d l=%d", a1, a2, s.n,
                    s.l));
      ++reflections;
    }
  }

  // (b) alpha in {0, 1}: energies depend on n + l only and the two alpha
  // values coincide.
  for (const auto& shell :
       {std::vector<QuantumState>{{0, 2}, {1, 1}, {2, 0}},
        std::vector<QuantumState>{{0, 3}, {1, 2}, {2, 1}, {3, 0}}}) {
    const double e0 = energy_nl(shell[0], {80.0, 0.0, 40.0}, kAtomic);
    for (const QuantumState& s : shell) {
      for (double alpha : {0.0, 1.0}) {
        const double e = energy_nl(s, {80.0, alpha, 40.0}, kAtomic);
        require(std::fabs(e - e0) <= 1e-14 * std::fabs(e0),
                fmt("degeneracy broken for n=%d l=%d alpha=%g", s.n, s.l,
                    alpha));
      }
    }
  }

  // (c) quantization residual vanishes across the full atomic grid.
  for (const refdata::AtomicRow& row : refdata::kAtomicTable) {
    const QuantumState s = state_from_label(row.state);
    for (double alpha : {0.75, 1.5}) {
      const PotentialParams p = atomic_params(row.invb, alpha);
      require(std::fabs(quantization_residual(s, p)) <=
                  1e-10 * std::max(1.0, p.A),
              fmt("quantization residual too large for %s", row.state));
    }
  }

  // (d) wavefunction node counts equal n.
  for (const QuantumState& s :
       {QuantumState{0, 1}, {2, 1}, {4, 1}, {1, 4}, {2, 3}}) {
    const PotentialParams p = atomic_params(0.025, 0.75);
    const RadialFunction rf =
        radial_wavefunction(s, p, default_radial_grid(s, p));
    require(rf.nodes == s.n,
            fmt("node count %d != n = %d for l=%d", rf.nodes, s.n, s.l));
  }

  // (e) far-tail decay rate equals epsilon / b.
  for (double alpha : {0.75, 1.5}) {
    const PotentialParams p = atomic_params(0.025, alpha);
    for (const QuantumState& s : {QuantumState{0, 1}, {1, 2}}) {
      const ShapeParams sp = shape_params(s, p);
      const double r1 = 20.0 * p.b, r2 = 21.0 * p.b;
      const double slope =
          (std::log(std::fabs(radial_unnormalized(s, p, r2))) -
           std::log(std::fabs(radial_unnormalized(s, p, r1)))) /
          (r2 - r1);
      require(std::fabs(slope + sp.epsilon / p.b) <=
                  1e-6 * (sp.epsilon / p.b),
              fmt("tail slope %.9f != -eps/b = %.9f", slope,
                  -sp.epsilon / p.b));
    }
  }

  // (f) screened-Coulomb reduction: route equality, frozen value, and
  // convergence to the Coulomb limit as the screening vanishes.
  const double h = hulthen_energy({0, 0}, 1.0, 0.025, kAtomic);
  require(std::fabs(h - (-0.487578125)) <= 1e-15,
          fmt("frozen screened-Coulomb value drifted: %.12f", h));
  require(std::fabs(h - energy_nl({0, 0}, {80.0, 0.0, 40.0}, kAtomic)) <=
              1e-14 * std::fabs(h),
          "reduction route disagrees with the general closed form");
  const double coul = coulomb_limit({0, 0}, 1.0, kAtomic);
  require(coul == -0.5, "Coulomb limit is not -1/2 hartree");
  double prev_gap = 1e9;
  for (double delta : {1e-2, 1e-3, 1e-4}) {
    const double gap = std::fabs(hulthen_energy({0, 0}, 1.0, delta, kAtomic) -
                                 coul);
    require(gap < 0.51 * delta && gap < 0.2 * prev_gap,
            fmt("no linear convergence to the Coulomb limit at delta=%g",
                delta));
    prev_gap = gap;
  }

  // (g) the unit system enters only through the energy prefactor.
  const UnitSystem mol = UnitSystem::molecular(6.8606719);
  const PotentialParams p{80.0, 0.75, 40.0};
  const double expected = mol.energy_prefactor(p.b) /
                          kAtomic.energy_prefactor(p.b);
  for (const QuantumState& s : states) {
    const double ratio = energy_nl(s, p, mol) / energy_nl(s, p, kAtomic);
    require(std::fabs(ratio / expected - 1.0) <= 1e-12,
            fmt("unit threading broken for n=%d l=%d", s.n, s.l));
  }

  return fmt("%d bitwise reflection checks, shell degeneracy, quantization "
             "residuals, node counts, tail slopes, reduction limits, unit "
             "threading all hold",
             reflections);
}

// ---------------------------------------------------------------------------
// Criterion 7: regeneration is deterministic — the CLI produces byte-identical
// tables and errata across runs, and the library serializers are pure.
std::string criterion_determinism() {
  const fs::path dir = fs::temp_directory_path() / "mrsolve_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);

  auto shell = [&](const std::string& args, const fs::path& out) {
    const std::string cmd = "\"" MRSOLVE_BIN "\" " + args + " > \"" +
                            out.string() + "\" 2> \"" +
                            (dir / "stderr.txt").string() + "\"";
    const int status = std::system(cmd.c_str());
    require(WIFEXITED(status) && WEXITSTATUS(status) == 0,
            fmt("CLI failed: %s", args.c_str()));
  };
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };

  const fs::path a_csv = dir / "a.csv", b_csv = dir / "b.csv";
  const fs::path a_err = dir / "a_errata.json", b_err = dir / "b_errata.json";
  shell("table --id 1 --out \"" + a_csv.string() + "\" --errata \"" +
            a_err.string() + "\"",
        dir / "a.out");
  shell("table --id 1 --out \"" + b_csv.string() + "\" --errata \"" +
            b_err.string() + "\"",
        dir / "b.out");
  require(!slurp(a_csv).empty(), "CLI produced an empty table");
  require(slurp(a_csv) == slurp(b_csv), "table CSV differs between runs");
  require(slurp(a_err) == slurp(b_err), "errata differs between runs");

  const fs::path j1 = dir / "t3a.json", j2 = dir / "t3b.json";
  shell("table --id 3 --format json --no-errata", j1);
  shell("table --id 3 --format json --no-errata", j2);
  require(!slurp(j1).empty() && slurp(j1) == slurp(j2),
          "table JSON differs between runs");

  const auto& mols = builtin_molecules();
  require(to_csv(generate_table(2, mols)) == to_csv(generate_table(2, mols)),
          "library serialization is not pure");

  return "CLI CSV/JSON/errata and library serializations byte-identical "
         "across regenerations";
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<std::string()> run;
  };
  const std::vector<Criterion> criteria = {
      {"closed-form spectrum reproduces the published atomic table",
       criterion_closed_form_table},
      {"independent Numerov oracle validates both operators",
       criterion_numerov_oracle},
      {"centrifugal-approximation error grows with screening",
       criterion_error_growth},
      {"molecular tables reproduced and anomalies quantified",
       criterion_molecular_tables},
      {"dual-route normalization agreement", criterion_normalization},
      {"invariance and reduction property suite", criterion_properties},
      {"deterministic table regeneration", criterion_determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = criteria[i].run();
    } catch (const CheckFailure& f) {
      ok = false;
      detail = f.message;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("unexpected exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::printf("[%s] criterion %zu: %s — %s (%.2f s)\n", ok ? "PASS" : "FAIL",
                i + 1, criteria[i].name, detail.c_str(), secs);
    std::fflush(stdout);
    failures += !ok;
  }
  if (failures > 0)
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
