#include "liepurity/sweep.hpp"

#include "liepurity/lmg.hpp"
#include "liepurity/parallel.hpp"
#include "liepurity/xy_chain.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

namespace liepurity::sweep {

std::string library_version() { return "0.1.0"; }

std::vector<double> Range::values() const {
    if (steps < 1) throw SpecError("range: steps must be >= 1");
    if (steps == 1) {
        if (start != stop) throw SpecError("range: a single-step range needs start == stop");
        return {start};
    }
    std::vector<double> out(static_cast<std::size_t>(steps), 0.0);
    for (int i = 0; i < steps; ++i)
        out[std::size_t(i)] = start + (stop - start) * double(i) / double(steps - 1);
    return out;
}

Range Range::parse(const std::string& text) {
    Range r;
    const auto c1 = text.find(':');
    if (c1 == std::string::npos) {
        r.start = r.stop = std::stod(text);
        r.steps = 1;
        return r;
    }
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos) throw SpecError("range: expected start:stop:steps, got '" + text + "'");
    try {
        r.start = std::stod(text.substr(0, c1));
        r.stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
        r.steps = std::stoi(text.substr(c2 + 1));
    } catch (const std::exception&) {
        throw SpecError("range: cannot parse '" + text + "'");
    }
    if (r.steps < 2) throw SpecError("range: swept axes need steps >= 2");
    return r;
}

namespace {

std::vector<std::string> select_columns(const std::vector<std::string>& requested,
                                        const char* const* schema, std::size_t schema_len) {
    std::vector<std::string> all(schema, schema + schema_len);
    if (requested.empty()) return all;
    for (const auto& name : requested) {
        bool known = false;
        for (const auto& col : all) known = known || col == name;
        if (!known) throw SpecError("unknown column '" + name + "'");
    }
    return requested;
}

bool wants(const std::vector<std::string>& cols, const std::string& name) {
    for (const auto& c : cols) {
        if (c == name) return true;
    }
    return false;
}

struct XyRowValues {
    std::map<std::string, double> v;
};

} // namespace

Table xy_sweep_table(double gamma, const Range& g_range, int n_sites,
                     const std::vector<std::string>& columns) {
    const auto cols = select_columns(columns, kXyColumns, std::size(kXyColumns));
    const auto gs = g_range.values();

    const bool need_c1 = wants(cols, "c1") || wants(cols, "dc1_dg");
    const bool need_deriv = wants(cols, "dc1_dg");
    if (need_deriv) {
        for (std::size_t i = 1; i < gs.size(); ++i) {
            const bool near_gc = gs[i] > 0.45 && gs[i - 1] < 0.55;
            if (near_gc && gs[i] - gs[i - 1] > 1e-2 + 1e-12)
                throw SpecError("xy sweep: grid spacing above 1e-2 near g_c is too coarse for dc1_dg");
        }
    }

    std::vector<XyRowValues> rows(gs.size());
    parallel_for(gs.size(), [&](std::size_t i) {
        const double g = gs[i];
        xy::XyParams p{n_sites, g, gamma};
        auto& r = rows[i].v;
        r["gamma"] = gamma;
        r["g"] = g;
        r["N"] = double(n_sites);
        if (wants(cols, "purity_uN") || wants(cols, "shifted_purity"))
            r["purity_uN"] = xy::purity_uN_finite(p);
        if (wants(cols, "purity_thermo"))
            r["purity_thermo"] = gamma > 0 ? xy::purity_uN_thermo(g, gamma) : 1.0;
        if (wants(cols, "shifted_purity"))
            r["shifted_purity"] = r["purity_uN"] - 1.0 / (1.0 + gamma);
        if (wants(cols, "local_purity")) r["local_purity"] = xy::local_purity_bcs(p);
        if (wants(cols, "mx2")) r["mx2"] = xy::mx2_order_parameter(g, gamma, n_sites);
        if (wants(cols, "mz")) r["mz"] = xy::mz_magnetization(p);
        if (wants(cols, "var_n")) r["var_n"] = xy::number_variance(p);
        if (need_c1) r["c1"] = xy::concurrence(xy::two_site_rdm(p, 1));
        if (wants(cols, "c2")) r["c2"] = xy::concurrence(xy::two_site_rdm(p, 2));
    });

    if (need_deriv) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const std::size_t lo = (i == 0) ? 0 : i - 1;
            const std::size_t hi = (i + 1 == rows.size()) ? i : i + 1;
            if (hi == lo) throw SpecError("xy sweep: dc1_dg needs at least two grid points");
            rows[i].v["dc1_dg"] = (rows[hi].v["c1"] - rows[lo].v["c1"]) / (gs[hi] - gs[lo]);
        }
    }

    Table table;
    table.columns = cols;
    table.rows.reserve(rows.size());
    for (auto& r : rows) {
        std::vector<double> line;
        line.reserve(cols.size());
        for (const auto& c : cols) line.push_back(r.v.at(c));
        table.rows.push_back(std::move(line));
    }
    return table;
}

Table lmg_sweep_table(const Range& v_range, const Range& w_range, int n,
                      const std::vector<std::string>& columns, double jump_threshold,
                      std::vector<double>* first_order_w) {
    const auto cols = select_columns(columns, kLmgColumns, std::size(kLmgColumns));
    const auto result = lmg::lmg_sweep(v_range.values(), w_range.values(), n, jump_threshold);

    Table table;
    table.columns = cols;
    table.rows.reserve(result.rows.size());
    for (const auto& row : result.rows) {
        std::map<std::string, double> named{{"V", row.v},
                                            {"W", row.w},
                                            {"N", double(row.n)},
                                            {"energy_per_particle", row.energy_per_particle},
                                            {"purity_jz", row.purity_jz},
                                            {"n_up", row.n_up},
                                            {"classical_energy", row.classical_energy},
                                            {"classical_purity", row.classical_purity}};
        std::vector<double> line;
        line.reserve(cols.size());
        for (const auto& c : cols) line.push_back(named.at(c));
        table.rows.push_back(std::move(line));
    }
    if (first_order_w) {
        first_order_w->clear();
        for (const auto& hit : result.first_order)
            if (hit.detected) first_order_w->push_back(hit.w);
    }
    return table;
}

Table xy_dist_table(int n_sites, double g, double gamma) {
    const auto dist = xy::number_distribution(xy::XyParams{n_sites, g, gamma});
    Table table;
    table.columns = {"n", "prob"};
    for (Eigen::Index m = 0; m < dist.probs.size(); ++m)
        table.rows.push_back({double(m), dist.probs(m)});
    return table;
}

std::string csv_string(const Table& table) {
    std::ostringstream os;
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        os << (i ? "," : "") << table.columns[i];
    os << "\n";
    char buf[64];
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%.15g", row[i]);
            os << (i ? "," : "") << buf;
        }
        os << "\n";
    }
    return os.str();
}

void write_csv(const std::string& path, const Table& table) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ResourceError("write_csv: cannot open '" + path + "' for writing");
    out << csv_string(table);
    if (!out) throw ResourceError("write_csv: failed writing '" + path + "'");
}

void write_sidecar(const std::string& csv_path, const std::string& command,
                   const std::map<std::string, std::string>& spec, double wall_seconds) {
    nlohmann::json j;
    j["command"] = command;
    j["spec"] = spec;
    j["library_version"] = library_version();
    j["wall_time_seconds"] = wall_seconds;
    const std::string path = csv_path + ".meta.json";
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ResourceError("write_sidecar: cannot open '" + path + "'");
    out << j.dump(2) << "\n";
}

namespace {

std::size_t column_index(const Table& table, const std::string& name) {
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        if (table.columns[i] == name) return i;
    throw SpecError("spot check: table lacks column '" + name + "'");
}

} // namespace

void spot_check_xy(const Table& table, double gamma, int n_sites, int count) {
    if (table.rows.empty()) return;
    std::mt19937 rng(12345);
    std::uniform_int_distribution<std::size_t> pick(0, table.rows.size() - 1);
    const std::size_t ig = column_index(table, "g");
    for (int trial = 0; trial < count; ++trial) {
        const std::size_t i = pick(rng);
        const double g = table.rows[i][ig];
        xy::XyParams p{n_sites, g, gamma};
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            const std::string& name = table.columns[c];
            double fresh;
            if (name == "gamma") fresh = gamma;
            else if (name == "g") fresh = g;
            else if (name == "N") fresh = double(n_sites);
            else if (name == "purity_uN") fresh = xy::purity_uN_finite(p);
            else if (name == "purity_thermo") fresh = gamma > 0 ? xy::purity_uN_thermo(g, gamma) : 1.0;
            else if (name == "shifted_purity") fresh = xy::purity_uN_finite(p) - 1.0 / (1.0 + gamma);
            else if (name == "local_purity") fresh = xy::local_purity_bcs(p);
            else if (name == "mx2") fresh = xy::mx2_order_parameter(g, gamma, n_sites);
            else if (name == "mz") fresh = xy::mz_magnetization(p);
            else if (name == "var_n") fresh = xy::number_variance(p);
            else if (name == "c1") fresh = xy::concurrence(xy::two_site_rdm(p, 1));
            else if (name == "c2") fresh = xy::concurrence(xy::two_site_rdm(p, 2));
            else continue; // dc1_dg is a grid quantity, covered through its c1 inputs
            if (fresh != table.rows[i][c])
                throw std::logic_error("spot_check_xy: row " + std::to_string(i) + " column " +
                                       name + " is not independently recomputable");
        }
    }
}

void spot_check_lmg(const Table& table, int n, int count) {
    if (table.rows.empty()) return;
    std::mt19937 rng(12345);
    std::uniform_int_distribution<std::size_t> pick(0, table.rows.size() - 1);
    const std::size_t iv = column_index(table, "V");
    const std::size_t iw = column_index(table, "W");
    for (int trial = 0; trial < count; ++trial) {
        const std::size_t i = pick(rng);
        const double v = table.rows[i][iv];
        const double w = table.rows[i][iw];
        const auto sol = lmg::solve(lmg::LmgParams{n, v, w});
        const auto cls = lmg::classical_minimum(v, w);
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            const std::string& name = table.columns[c];
            double fresh;
            if (name == "V") fresh = v;
            else if (name == "W") fresh = w;
            else if (name == "N") fresh = double(n);
            else if (name == "energy_per_particle") fresh = sol.energies(0) / n;
            else if (name == "purity_jz") fresh = sol.purity_jz;
            else if (name == "n_up") fresh = sol.n_up;
            else if (name == "classical_energy") fresh = cls.energy_per_particle;
            else if (name == "classical_purity") fresh = cls.purity_jz;
            else continue;
            if (fresh != table.rows[i][c])
                throw std::logic_error("spot_check_lmg: row " + std::to_string(i) + " column " +
                                       name + " is not independently recomputable");
        }
    }
}

} // namespace liepurity::sweep
