#pragma once

#include "liepurity/core.hpp"

#include <map>
#include <string>
#include <vector>

namespace liepurity::sweep {

/// Inclusive linear range "start:stop:steps" with steps >= 2, or a single value "x".
struct Range {
    double start = 0.0;
    double stop = 0.0;
    int steps = 1;

    std::vector<double> values() const;
    static Range parse(const std::string& text);
};

inline constexpr const char* kXyColumns[] = {"gamma",        "g",   "N",     "purity_uN",
                                             "purity_thermo", "shifted_purity", "local_purity",
                                             "mx2",          "mz",  "var_n", "c1",
                                             "c2",           "dc1_dg"};

inline constexpr const char* kLmgColumns[] = {"V",   "W",         "N",
                                              "energy_per_particle", "purity_jz", "n_up",
                                              "classical_energy",    "classical_purity"};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// XY-chain scan over g at fixed gamma and N. `columns` selects and orders a subset
/// of kXyColumns (empty = all); expensive quantities are only computed when selected.
Table xy_sweep_table(double gamma, const Range& g_range, int n_sites,
                     const std::vector<std::string>& columns = {});

/// LMG scan over (V, W); fixed schema kLmgColumns with optional selection.
/// first_order_w, when nonempty, receives the W values where the V-derivative jump
/// at V=0 exceeded `jump_threshold`.
Table lmg_sweep_table(const Range& v_range, const Range& w_range, int n,
                      const std::vector<std::string>& columns = {},
                      double jump_threshold = 0.05,
                      std::vector<double>* first_order_w = nullptr);

/// Fermion-number distribution Omega(n) as rows (n, prob).
Table xy_dist_table(int n_sites, double g, double gamma);

/// Writes the table as CSV with 15-significant-digit values; byte-identical for
/// identical inputs.
void write_csv(const std::string& path, const Table& table);
std::string csv_string(const Table& table);

/// Sidecar metadata (full spec, library version, wall time) next to a CSV.
void write_sidecar(const std::string& csv_path, const std::string& command,
                   const std::map<std::string, std::string>& spec, double wall_seconds);

/// Re-evaluates `count` deterministically-chosen rows of an XY sweep table through
/// fresh library calls; throws on any mismatch. Used by the CLI self-test mode.
void spot_check_xy(const Table& table, double gamma, int n_sites, int count = 5);
void spot_check_lmg(const Table& table, int n, int count = 5);

std::string library_version();

} // namespace liepurity::sweep
