#include "liepurity/ed_oracle.hpp"
#include "liepurity/fit.hpp"
#include "liepurity/lmg.hpp"
#include "liepurity/operators.hpp"
#include "liepurity/purity.hpp"
#include "liepurity/states.hpp"
#include "liepurity/sweep.hpp"
#include "liepurity/xy_chain.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace liepurity;
using nlohmann::json;

namespace {

using clock_type = std::chrono::steady_clock;

double elapsed(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
    if (!f) throw ResourceError("cannot open '" + out_path + "' for writing");
    f << j.dump(2) << "\n";
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<int> parse_dims(const std::string& text) {
    std::vector<int> dims;
    for (const auto& part : split_list(text)) dims.push_back(std::stoi(part));
    return dims;
}

json state_to_json(const StateVector& psi, const std::string& kind) {
    json tag;
    switch (psi.tag().kind) {
    case BasisKind::QubitChain: tag["type"] = "qubit"; break;
    case BasisKind::SpinChain: tag["type"] = "spin"; break;
    case BasisKind::SpinJ: tag["type"] = "spinJ"; break;
    case BasisKind::FermionFock: tag["type"] = "fermion"; break;
    }
    tag["sites"] = psi.tag().sites;
    tag["spin"] = psi.tag().spin;

    json amps = json::array();
    for (Eigen::Index i = 0; i < psi.dim(); ++i) {
        const Complex a = psi.amplitudes()(i);
        if (a == Complex(0.0, 0.0)) continue;
        amps.push_back({{"index", i}, {"re", std::real(a)}, {"im", std::imag(a)}});
    }
    return json{{"kind", kind}, {"tag", tag}, {"dim", psi.dim()}, {"amplitudes", amps}};
}

StateVector state_from_json(const json& j) {
    const auto& tag = j.at("tag");
    const std::string type = tag.at("type").get<std::string>();
    const int sites = tag.at("sites").get<int>();
    const double spin = tag.at("spin").get<double>();
    BasisTag bt = BasisTag::qubits(1);
    if (type == "qubit") bt = BasisTag::qubits(sites);
    else if (type == "spin") bt = BasisTag::spin_chain(sites, spin);
    else if (type == "spinJ") bt = BasisTag::spin_j(spin);
    else if (type == "fermion") bt = BasisTag::fermions(sites);
    else throw SpecError("state file: unknown tag type '" + type + "'");

    Vector amp = Vector::Zero(j.at("dim").get<Eigen::Index>());
    for (const auto& entry : j.at("amplitudes"))
        amp(entry.at("index").get<Eigen::Index>()) =
            Complex(entry.at("re").get<double>(), entry.at("im").get<double>());
    return StateVector(std::move(amp), bt);
}

ObservableBasis basis_for(const std::string& name, const StateVector& psi,
                          const std::string& dims_text) {
    const BasisTag& tag = psi.tag();
    if (name == "pauli") {
        if (tag.kind != BasisKind::QubitChain) throw SpecError("basis 'pauli' needs a qubit chain");
        return pauli_basis(tag.sites);
    }
    if (name == "local") {
        std::vector<int> dims;
        if (!dims_text.empty()) {
            dims = parse_dims(dims_text);
        } else if (tag.kind == BasisKind::QubitChain) {
            dims.assign(std::size_t(tag.sites), 2);
        } else if (tag.kind == BasisKind::SpinChain) {
            dims.assign(std::size_t(tag.sites), int(std::lround(2 * tag.spin + 1)));
        } else {
            throw SpecError("basis 'local' needs --dims for this state");
        }
        return local_algebra_basis(dims);
    }
    if (name == "su") return su_basis(int(psi.dim()));
    if (name == "uN" || name == "so2N") {
        if (tag.kind != BasisKind::FermionFock)
            throw SpecError("basis '" + name + "' needs a fermionic state");
        const auto f = jw_fermion_ops(tag.sites);
        return name == "uN" ? uN_basis(f) : so2N_extension(f);
    }
    if (name == "jz" || name == "su2J") {
        if (tag.kind != BasisKind::SpinJ)
            throw SpecError("basis '" + name + "' needs a spin-J multiplet state");
        const auto j = spin_matrices(tag.spin);
        std::vector<HermitianOperator> ops;
        if (name == "jz") ops = {j[2]};
        else ops = {j[0], j[1], j[2]};
        Vector highest = Vector::Zero(psi.dim());
        highest(0) = 1.0; // |J_z = +J>
        return make_observable_basis(name, std::move(ops), {highest});
    }
    throw SpecError("unknown basis '" + name + "'");
}

} // namespace

int main(int argc, char** argv) {
    // grid-level worker threads own the parallelism; keep BLAS single-threaded
    setenv("OPENBLAS_NUM_THREADS", "1", 0);
    setenv("OMP_NUM_THREADS", "1", 0);

    CLI::App app{"Lie-algebraic relative purity and quantum phase transitions"};
    app.set_config("--config", "", "plain-text INI config; command-line flags win");
    app.require_subcommand(1);

    auto* state_cmd = app.add_subcommand("state", "state construction");
    state_cmd->require_subcommand(1);
    auto* make_cmd = state_cmd->add_subcommand("make", "build a named state, emit amplitudes as JSON");
    std::string kind, sites_json, boundary = "open", state_out;
    int mk_n = 2;
    double mk_s = 0.5, mk_g = 0.0, mk_gamma = 1.0;
    make_cmd->add_option("--kind", kind, "F|W|GHZ|Bell|cluster|product|aklt|bcs")->required();
    make_cmd->add_option("--n", mk_n, "number of sites")->required();
    make_cmd->add_option("--s", mk_s, "spin per site (default 1/2)");
    make_cmd->add_option("--boundary", boundary, "open|periodic");
    make_cmd->add_option("--sites", sites_json, "product-state kets, JSON [[[re,im],...],...]");
    make_cmd->add_option("--g", mk_g, "BCS coupling g");
    make_cmd->add_option("--gamma", mk_gamma, "BCS anisotropy gamma");
    make_cmd->add_option("--out", state_out, "output path (default stdout)");

    auto* purity_cmd = app.add_subcommand("purity", "purity evaluation");
    purity_cmd->require_subcommand(1);
    auto* compute_cmd = purity_cmd->add_subcommand("compute", "relative purity of a stored state");
    std::string state_file, basis_name = "local", dims_text, purity_out;
    compute_cmd->add_option("--state", state_file, "state JSON from 'state make'")->required();
    compute_cmd->add_option("--basis", basis_name, "local|pauli|su|uN|so2N|jz|su2J");
    compute_cmd->add_option("--dims", dims_text, "subsystem dims for 'local', e.g. 2,3,2");
    compute_cmd->add_option("--out", purity_out, "output path (default stdout)");

    auto* lmg_cmd = app.add_subcommand("lmg", "LMG model scans");
    lmg_cmd->require_subcommand(1);
    auto* lmg_sweep_cmd = lmg_cmd->add_subcommand("sweep", "grid scan over (V, W)");
    std::string lmg_v, lmg_w, lmg_out, lmg_columns;
    int lmg_n = 500;
    double jump_threshold = 0.05;
    bool lmg_selftest = false;
    lmg_sweep_cmd->add_option("--v", lmg_v, "V range start:stop:steps")->required();
    lmg_sweep_cmd->add_option("--w", lmg_w, "W range start:stop:steps")->required();
    lmg_sweep_cmd->add_option("--n", lmg_n, "particle number")->required();
    lmg_sweep_cmd->add_option("--out", lmg_out, "output CSV")->required();
    lmg_sweep_cmd->add_option("--columns", lmg_columns, "column selection");
    lmg_sweep_cmd->add_option("--jump-threshold", jump_threshold, "first-order dE/dV jump threshold");
    lmg_sweep_cmd->add_flag("--selftest", lmg_selftest, "re-check 5 random rows");

    auto* xy_cmd = app.add_subcommand("xy", "anisotropic XY chain scans");
    xy_cmd->require_subcommand(1);
    auto* xy_sweep_cmd = xy_cmd->add_subcommand("sweep", "scan over g at fixed gamma");
    std::string xy_g, xy_out, xy_columns;
    double xy_gamma = 1.0;
    int xy_n = 400;
    bool xy_selftest = false;
    xy_sweep_cmd->add_option("--gamma", xy_gamma, "anisotropy")->required();
    xy_sweep_cmd->add_option("--g", xy_g, "g range start:stop:steps")->required();
    xy_sweep_cmd->add_option("--n", xy_n, "chain length (even)")->required();
    xy_sweep_cmd->add_option("--out", xy_out, "output CSV")->required();
    xy_sweep_cmd->add_option("--columns", xy_columns, "column selection");
    xy_sweep_cmd->add_flag("--selftest", xy_selftest, "re-check 5 random rows");

    auto* xy_dist_cmd = xy_cmd->add_subcommand("dist", "fermion-number distribution Omega(n)");
    int dist_n = 400;
    double dist_g = 0.4, dist_gamma = 1.0;
    std::string dist_out;
    xy_dist_cmd->add_option("--n", dist_n, "chain length (even)")->required();
    xy_dist_cmd->add_option("--g", dist_g, "coupling")->required();
    xy_dist_cmd->add_option("--gamma", dist_gamma, "anisotropy")->required();
    xy_dist_cmd->add_option("--out", dist_out, "output CSV")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "dense exact-diagonalization cross-checks");
    oracle_cmd->require_subcommand(1);
    auto* oxy = oracle_cmd->add_subcommand("xy", "XY chain ED");
    int oxy_n = 8, oxy_parity = 0;
    double oxy_g = 0.3, oxy_gamma = 1.0;
    std::string oxy_out;
    oxy->add_option("--n", oxy_n, "sites (even, <= 12)")->required();
    oxy->add_option("--g", oxy_g, "coupling")->required();
    oxy->add_option("--gamma", oxy_gamma, "anisotropy")->required();
    oxy->add_option("--parity", oxy_parity, "restrict to K sector (+1/-1; default: true ground)");
    oxy->add_option("--out", oxy_out, "output CSV (default stdout)");

    auto* olmg = oracle_cmd->add_subcommand("lmg", "collective-spin LMG ED on 2^N qubits");
    int olmg_n = 8;
    double olmg_v = 1.0, olmg_w = 0.0;
    std::string olmg_out;
    olmg->add_option("--n", olmg_n, "particles (even, <= 10)")->required();
    olmg->add_option("--v", olmg_v, "V coupling")->required();
    olmg->add_option("--w", olmg_w, "W coupling")->required();
    olmg->add_option("--out", olmg_out, "output CSV (default stdout)");

    auto* fit_cmd = app.add_subcommand("fit", "least-squares exponent fits on CSV columns");
    std::string fit_csv, fit_x, fit_y, fit_model = "power", fit_window, fit_out;
    double fit_x0 = 0.0, fit_y0 = 0.0;
    fit_cmd->add_option("--csv", fit_csv, "input CSV")->required();
    fit_cmd->add_option("--x", fit_x, "abscissa column")->required();
    fit_cmd->add_option("--y", fit_y, "ordinate column")->required();
    fit_cmd->add_option("--model", fit_model, "power|log");
    fit_cmd->add_option("--x0", fit_x0, "fit against x - x0");
    fit_cmd->add_option("--y0", fit_y0, "fit y - y0");
    fit_cmd->add_option("--window", fit_window, "keep rows with x - x0 in start:stop");
    fit_cmd->add_option("--out", fit_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const auto t0 = clock_type::now();

        if (make_cmd->parsed()) {
            StateVector psi = [&]() -> StateVector {
                if (kind == "aklt")
                    return aklt_vbs(mk_n,
                                    boundary == "periodic" ? Boundary::Periodic : Boundary::Open);
                if (kind == "bcs") return bcs_vector(mk_n, mk_g, mk_gamma);
                std::vector<Vector> site_states;
                if (!sites_json.empty()) {
                    const json js = json::parse(sites_json);
                    for (const auto& site : js) {
                        Vector v(Eigen::Index(site.size()));
                        for (std::size_t i = 0; i < site.size(); ++i)
                            v(Eigen::Index(i)) =
                                Complex(site[i][0].get<double>(), site[i][1].get<double>());
                        site_states.push_back(std::move(v));
                    }
                }
                const SpinChainSpec spec{
                    mk_n, mk_s, boundary == "periodic" ? Boundary::Periodic : Boundary::Open};
                return named_state(parse_state_kind(kind), spec, site_states);
            }();
            emit(state_to_json(psi, kind), state_out);
        } else if (compute_cmd->parsed()) {
            std::ifstream in(state_file);
            if (!in) throw ResourceError("cannot read state file '" + state_file + "'");
            json js;
            in >> js;
            const StateVector psi = state_from_json(js);
            const auto basis = basis_for(basis_name, psi, dims_text);
            const auto report = relative_purity(basis, psi);
            json out{{"basis", basis.name},
                     {"value", report.value},
                     {"K", report.K_used},
                     {"per_generator",
                      std::vector<double>(report.per_generator.data(),
                                          report.per_generator.data() + report.per_generator.size())}};
            emit(out, purity_out);
        } else if (lmg_sweep_cmd->parsed()) {
            std::vector<double> first_order;
            const auto table =
                sweep::lmg_sweep_table(sweep::Range::parse(lmg_v), sweep::Range::parse(lmg_w), lmg_n,
                                       split_list(lmg_columns), jump_threshold, &first_order);
            sweep::write_csv(lmg_out, table);
            sweep::write_sidecar(lmg_out, "lmg sweep",
                                 {{"v", lmg_v},
                                  {"w", lmg_w},
                                  {"n", std::to_string(lmg_n)},
                                  {"columns", lmg_columns},
                                  {"jump_threshold", std::to_string(jump_threshold)}},
                                 elapsed(t0));
            for (double w : first_order)
                std::cerr << "first-order line detected at V=0, W=" << w << "\n";
            if (lmg_selftest) {
                sweep::spot_check_lmg(table, lmg_n);
                std::cerr << "selftest ok: 5 rows recomputed\n";
            }
        } else if (xy_sweep_cmd->parsed()) {
            const auto table = sweep::xy_sweep_table(xy_gamma, sweep::Range::parse(xy_g), xy_n,
                                                     split_list(xy_columns));
            sweep::write_csv(xy_out, table);
            sweep::write_sidecar(xy_out, "xy sweep",
                                 {{"gamma", std::to_string(xy_gamma)},
                                  {"g", xy_g},
                                  {"n", std::to_string(xy_n)},
                                  {"columns", xy_columns}},
                                 elapsed(t0));
            if (xy_selftest) {
                sweep::spot_check_xy(table, xy_gamma, xy_n);
                std::cerr << "selftest ok: 5 rows recomputed\n";
            }
        } else if (xy_dist_cmd->parsed()) {
            const auto table = sweep::xy_dist_table(dist_n, dist_g, dist_gamma);
            sweep::write_csv(dist_out, table);
            sweep::write_sidecar(dist_out, "xy dist",
                                 {{"n", std::to_string(dist_n)},
                                  {"g", std::to_string(dist_g)},
                                  {"gamma", std::to_string(dist_gamma)}},
                                 elapsed(t0));
        } else if (oxy->parsed()) {
            const auto ed = oxy_parity == 0
                                ? oracle::xy_ed(oxy_n, oxy_g, oxy_gamma)
                                : oracle::xy_ed_sector(oxy_n, oxy_g, oxy_gamma, oxy_parity);
            const auto f = jw_fermion_ops(oxy_n);
            sweep::Table t;
            t.columns = {"N", "g", "gamma", "energy", "parity", "purity_uN", "mz"};
            t.rows = {{double(oxy_n), oxy_g, oxy_gamma, ed.ground_energy, double(ed.parity),
                       uN_purity_sparse(f, ed.ground_state.amplitudes()),
                       oracle::pauli_string_expectation(ed.ground_state.amplitudes(), oxy_n,
                                                        {{1, 'z'}})}};
            if (oxy_out.empty()) std::cout << sweep::csv_string(t);
            else sweep::write_csv(oxy_out, t);
        } else if (olmg->parsed()) {
            const auto ed = oracle::lmg_collective(olmg_n, olmg_v, olmg_w);
            double jz = 0.0;
            const Vector& amp = ed.ed.ground_state.amplitudes();
            for (Eigen::Index b = 0; b < amp.size(); ++b) {
                int ups = 0;
                for (int s = 0; s < olmg_n; ++s)
                    if (!(b & (Eigen::Index(1) << s))) ++ups;
                jz += (ups - 0.5 * olmg_n) * std::norm(amp(b));
            }
            sweep::Table t;
            t.columns = {"N",  "V",  "W",         "energy", "parity",
                         "jz", "purity_jz", "n_up",   "j2",     "max_j_sector"};
            t.rows = {{double(olmg_n), olmg_v, olmg_w, ed.ed.ground_energy, double(ed.ed.parity), jz,
                       4.0 * jz * jz / (double(olmg_n) * olmg_n), 0.5 + jz / olmg_n, ed.j2_expect,
                       ed.in_max_j_sector ? 1.0 : 0.0}};
            if (olmg_out.empty()) std::cout << sweep::csv_string(t);
            else sweep::write_csv(olmg_out, t);
        } else if (fit_cmd->parsed()) {
            std::ifstream in(fit_csv);
            if (!in) throw ResourceError("cannot read CSV '" + fit_csv + "'");
            std::string header;
            std::getline(in, header);
            const auto cols = split_list(header);
            std::ptrdiff_t ix = -1, iy = -1;
            for (std::size_t i = 0; i < cols.size(); ++i) {
                if (cols[i] == fit_x) ix = std::ptrdiff_t(i);
                if (cols[i] == fit_y) iy = std::ptrdiff_t(i);
            }
            if (ix < 0) throw SpecError("unknown column '" + fit_x + "'");
            if (iy < 0) throw SpecError("unknown column '" + fit_y + "'");

            double wlo = -1e300, whi = 1e300;
            if (!fit_window.empty()) {
                const auto c = fit_window.find(':');
                if (c == std::string::npos) throw SpecError("window: expected start:stop");
                wlo = std::stod(fit_window.substr(0, c));
                whi = std::stod(fit_window.substr(c + 1));
            }

            std::vector<double> xs, ys;
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                const auto fields = split_list(line);
                const double xt = std::stod(fields.at(std::size_t(ix))) - fit_x0;
                const double yt = std::stod(fields.at(std::size_t(iy))) - fit_y0;
                if (xt < wlo || xt > whi) continue;
                xs.push_back(std::abs(xt));
                ys.push_back(yt);
            }
            if (xs.size() < 8) throw SpecError("fit: fewer than 8 points in window");

            fit::FitResult res;
            if (fit_model == "power") res = fit::power_fit(xs, ys);
            else if (fit_model == "log") res = fit::log_fit(xs, ys);
            else throw SpecError("fit: model must be power or log");
            json out{{"model", fit_model},         {"slope", res.slope},
                     {"intercept", res.intercept}, {"slope_stderr", res.slope_stderr},
                     {"amplitude", res.amplitude}, {"residual_rms", res.residual_rms},
                     {"n_points", res.n_points}};
            emit(out, fit_out);
        }
        return 0;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
