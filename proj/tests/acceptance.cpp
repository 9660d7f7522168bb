// Acceptance suite: one pass/fail line per criterion, nonzero exit on any failure.
// Criteria 1, 2 and 5 also enforce wall-time budgets.

#include "liepurity/ed_oracle.hpp"
#include "liepurity/fit.hpp"
#include "liepurity/lmg.hpp"
#include "liepurity/operators.hpp"
#include "liepurity/parallel.hpp"
#include "liepurity/purity.hpp"
#include "liepurity/states.hpp"
#include "liepurity/sweep.hpp"
#include "liepurity/xy_chain.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <vector>

using namespace liepurity;

namespace {

struct Check {
    std::vector<std::string> failures;
    std::mutex mu;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            std::lock_guard<std::mutex> lock(mu);
            failures.push_back(what);
        }
    }
    template <typename T>
    void within(T value, T target, T tol, const std::string& what) {
        if (!(std::abs(value - target) <= tol)) {
            std::ostringstream os;
            os << what << ": got " << value << ", want " << target << " +- " << tol;
            require(false, os.str());
        }
    }
};

Vector random_state(std::mt19937& rng, Eigen::Index dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    v /= v.norm();
    return v;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> out;
    for (int i = 0; i < n; ++i) out.push_back(lo * std::pow(hi / lo, double(i) / (n - 1)));
    return out;
}

// ---- criterion bodies -------------------------------------------------------

void criterion1(Check& c) {
    for (double gamma : {0.25, 0.5, 1.0})
        for (double g : {0.55, 0.7, 1.0})
            c.within(xy::purity_uN_thermo(g, gamma), 1.0 / (1.0 + gamma), 1e-15,
                     "ordered-phase plateau");
    for (double g = 0.0; g <= 0.5 + 1e-12; g += 0.05)
        c.within(xy::purity_uN_thermo(g, 1.0), 1.0 - 2.0 * g * g, 1e-15, "Ising curve 1-2g^2");
    for (double gamma : {0.25, 0.5, 1.0})
        for (int i = 0; i <= 100; ++i) {
            const double g = 0.01 * i;
            c.within(xy::purity_uN_finite({4096, g, gamma}), xy::purity_uN_thermo(g, gamma), 3e-3,
                     "finite N=4096 vs thermodynamic closed form");
        }
}

void criterion2(Check& c) {
    const std::vector<int> sizes{8, 10, 12};
    const std::vector<double> gs{0.1, 0.3, 0.5, 0.7, 0.9};
    const std::vector<double> gammas{0.25, 0.5, 1.0};

    std::vector<FermionOps> fermis;
    for (int n : sizes) fermis.push_back(jw_fermion_ops(n));

    struct Point {
        int n_index;
        double g, gamma;
    };
    std::vector<Point> points;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        for (double g : gs)
            for (double gamma : gammas) points.push_back({int(i), g, gamma});

    parallel_for(points.size(), [&](std::size_t idx) {
        const auto [ni, g, gamma] = points[idx];
        const int n = sizes[std::size_t(ni)];
        const xy::XyParams p{n, g, gamma};
        std::ostringstream tag;
        tag << "(N=" << n << ", g=" << g << ", gamma=" << gamma << ") ";

        const auto ed = oracle::xy_ed_sector(n, g, gamma, +1);
        const Vector& psi = ed.ground_state.amplitudes();

        c.within(uN_purity_sparse(fermis[std::size_t(ni)], psi), xy::purity_uN_finite(p), 1e-9,
                 tag.str() + "u(N) purity vs ED");
        const double mz_ed = oracle::pauli_string_expectation(psi, n, {{1, 'z'}});
        c.within(xy::local_purity_bcs(p), mz_ed * mz_ed, 1e-9, tag.str() + "local purity vs ED");
        for (int r = 1; r <= 3; ++r) {
            const auto analytic = xy::spin_correlators(p, r);
            const auto brute = oracle::state_spin_correlators(psi, n, r);
            c.within(analytic.z_single, brute.z_single, 1e-9, tag.str() + "sz vs ED");
            c.within(analytic.xx, brute.xx, 1e-9, tag.str() + "xx vs ED");
            c.within(analytic.yy, brute.yy, 1e-9, tag.str() + "yy vs ED");
            c.within(analytic.zz, brute.zz, 1e-9, tag.str() + "zz vs ED");
        }
        for (int r : {1, 2}) {
            const double ca = xy::concurrence(xy::two_site_rdm(p, r));
            const double cb =
                xy::concurrence(oracle::two_site_rdm_from_state(psi, n, 1, 1 + r));
            c.within(ca, cb, 1e-9, tag.str() + "C(" + std::to_string(r) + ") vs ED");
        }
    });
}

void criterion3(Check& c) {
    const double h = 1e-4;
    for (double gamma : {0.25, 0.5, 1.0}) {
        const double dl =
            (xy::purity_uN_thermo(0.5, gamma) - xy::purity_uN_thermo(0.5 - h, gamma)) / h;
        const double dr =
            (xy::purity_uN_thermo(0.5 + h, gamma) - xy::purity_uN_thermo(0.5, gamma)) / h;
        c.require(std::abs(dl - dr) > 0.5, "derivative kink at g_c");
    }

    // scaling fit at gamma=1 inside g in [0.40, 0.499]; for smaller gamma the pure
    // power-law regime starts below that window's resolution (crossover scale
    // gamma^2/4(1-gamma^2)), so the 2/gamma amplitude law is pinned by direct
    // small-distance ratios instead
    const auto deltas = log_spaced(1e-3, 0.05, 30);
    std::vector<double> vals;
    for (double d : deltas) vals.push_back(xy::shifted_purity(0.5 - d, 1.0));
    const auto fitres = fit::power_fit(deltas, vals);
    c.within(fitres.slope, 1.0, 0.05, "nu exponent at gamma=1");
    c.require(std::abs(fitres.amplitude - 2.0) <= 0.2, "disorder-parameter amplitude 2 at gamma=1");

    for (double gamma : {0.25, 0.5, 1.0}) {
        const double d = 1e-5;
        const double ratio = xy::shifted_purity(0.5 - d, gamma) / (2.0 * d / gamma);
        c.within(ratio, 1.0, 0.1, "P' -> 2(g_c - g)/gamma amplitude law");
    }
}

void criterion4(Check& c) {
    for (auto [n, g, gamma] :
         {std::tuple{64, 0.3, 1.0}, {400, 0.35, 1.0}, {128, 0.7, 0.5}, {256, 0.5, 0.25}}) {
        const xy::XyParams p{n, g, gamma};
        c.within(xy::purity_uN_finite(p), 1.0 - 2.0 / n * xy::number_variance(p), 1e-12,
                 "purity = 1 - (2/N) Var");
        const auto dist = xy::number_distribution(p);
        const auto sol = xy::bogoliubov_solve(p);
        long double mean_modes = 0.0L;
        for (Eigen::Index i = 0; i < sol.ks.size(); ++i)
            if (sol.ks(i) > 0) mean_modes += 2.0L * sol.v(i) * sol.v(i);
        c.within(dist.mean, double(mean_modes), 1e-12, "distribution mean vs mode sum");
        c.within(dist.variance, xy::number_variance(p), 1e-12, "distribution variance vs mode sum");
    }
    for (int n : {6, 8, 10}) {
        const auto f = jw_fermion_ops(n);
        for (auto [g, gamma] : {std::pair{0.35, 1.0}, {0.6, 0.5}}) {
            const auto bcs = bcs_vector(n, g, gamma);
            c.within(1.0 - xy::purity_uN_finite({n, g, gamma}),
                     r_part_sparse(f, bcs.amplitudes()), 1e-10,
                     "pairing-sector residual decomposition");
        }
    }
}

void criterion5(Check& c) {
    for (auto [v, w] : {std::pair{0.5, 0.0}, {2.0, 0.0}, {3.0, 1.0}, {1e-3, -2.0}}) {
        const auto sol = lmg::solve({2000, v, w});
        const auto cls = lmg::classical_minimum(v, w);
        std::ostringstream tag;
        tag << "(V=" << v << ", W=" << w << ") ";
        c.within(sol.energies(0) / 2000.0, cls.energy_per_particle, 5e-3,
                 tag.str() + "quantum energy vs classical minimum");
        const double d = lmg::delta(v, w);
        c.within(sol.purity_jz, std::min(1.0, 1.0 / (d * d)), 0.01, tag.str() + "J_z purity");
    }
    std::vector<double> vgrid;
    for (int i = -4; i <= 4; ++i) vgrid.push_back(0.05 * i);
    const auto sweep = lmg::lmg_sweep(vgrid, {-2.0}, 1000);
    c.require(sweep.first_order.size() == 1 && sweep.first_order[0].detected,
              "first-order V-derivative jump detected at W=-2");
    // thermodynamic-degeneracy substitute: exponential gap closing at Delta=2
    c.require(lmg::solve({400, 2.0, 0.0}).gap < 1e-6, "gap closes at N=400, Delta=2");
}

void criterion6(Check& c) {
    const auto fitres = lmg::classical_exponent(0.0, log_spaced(1e-4, 0.05, 30));
    c.within(fitres.slope, 1.0, 0.02, "order-parameter exponent on the classical path");
}

void criterion7(Check& c) {
    std::mt19937 rng(2024);
    int states_done = 0;
    for (int n = 2; n <= 8; ++n) {
        const int count = (n <= 6) ? 14 : 16;
        for (int trial = 0; trial < count && states_done < 100; ++trial, ++states_done) {
            const StateVector psi(random_state(rng, Eigen::Index(1) << n), BasisTag::qubits(n));
            const double q = meyer_wallach_Q(psi);
            const double p = local_purity(psi, std::vector<int>(std::size_t(n), 2));
            c.require(std::abs(q - (1.0 - p)) < 1e-12, "Q = 1 - P_local");
        }
    }
    c.require(states_done == 100, "exercised 100 random states");
}

void criterion8(Check& c) {
    for (int n = 3; n <= 10; ++n) {
        const auto ghz = named_state(StateKind::GHZ, {n, 0.5, Boundary::Open});
        c.require(local_purity(ghz, std::vector<int>(std::size_t(n), 2)) < 1e-10, "GHZ purity 0");
    }
    for (int n = 2; n <= 10; ++n) {
        const auto cluster = named_state(StateKind::Cluster, {n, 0.5, Boundary::Open});
        c.require(local_purity(cluster, std::vector<int>(std::size_t(n), 2)) < 1e-10,
                  "cluster purity 0");
    }
    for (int n : {4, 6}) {
        const auto vbs = aklt_vbs(n);
        c.require(local_purity(vbs, std::vector<int>(std::size_t(n), 3)) < 1e-10,
                  "AKLT local su(3) purity 0");
    }
    c.require(relative_purity(local_algebra_basis({3, 3, 3, 3}), aklt_vbs(4)).value < 1e-10,
              "AKLT generator-route purity 0");

    // product states score exactly 1
    std::mt19937 rng(77);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (const auto& dims :
         {std::vector<int>{2, 2, 2, 2, 2, 2}, {3, 3, 3}, {2, 3, 2}, {4, 2, 3}}) {
        Vector v = Vector::Ones(1);
        for (int d : dims) {
            Vector site(d);
            for (int i = 0; i < d; ++i) site(i) = Complex(gauss(rng), gauss(rng));
            site /= site.norm();
            Vector next(v.size() * d);
            for (Eigen::Index a = 0; a < v.size(); ++a)
                for (Eigen::Index b = 0; b < d; ++b) next(a * d + b) = v(a) * site(b);
            v = next;
        }
        const StateVector psi(v, BasisTag::spin_j((v.size() - 1) / 2.0));
        c.within(local_purity(psi, dims), 1.0, 1e-12, "product-state purity 1");
    }

    // Slater determinants score exactly 1 for u(N)
    const int n_modes = 6;
    const auto f = jw_fermion_ops(n_modes);
    Vector vac = Vector::Zero(f.dim());
    vac(f.dim() - 1) = 1.0;
    for (int n_part : {1, 2, 3}) {
        // rotated modes d_a^dag = sum_j U_aj c_j^dag from a deterministic unitary
        Matrix gen = Matrix::Zero(n_modes, n_modes);
        for (int a = 0; a < n_modes; ++a)
            for (int b = 0; b < n_modes; ++b)
                gen(a, b) = Complex(std::sin(0.3 * (a + 1) * (b + 1) + n_part),
                                    0.2 * (a - b));
        const Matrix u = expm_i(Matrix(0.5 * (gen + gen.adjoint())));
        Vector slater = vac;
        for (int a = 0; a < n_part; ++a) {
            Vector next = Vector::Zero(f.dim());
            for (int j = 1; j <= n_modes; ++j) next += u(a, j - 1) * apply_cdag(f, j, slater);
            slater = next;
        }
        slater /= slater.norm();
        c.within(uN_purity_sparse(f, slater), 1.0, 1e-12, "Slater determinant u(N) purity 1");
    }
    Vector pos_slater = apply_cdag(f, 4, apply_cdag(f, 1, vac));
    pos_slater /= pos_slater.norm();
    c.within(relative_purity(uN_basis(f), StateVector(pos_slater, BasisTag::fermions(n_modes))).value,
             1.0, 1e-12, "mode-basis Slater u(N) purity 1");
}

void criterion9(Check& c) {
    for (double g = 0.0; g <= 1.0 + 1e-12; g += 0.05)
        c.within(xy::purity_uN_finite({512, g, 0.0}), 1.0, 1e-12, "isotropic purity pinned at 1");

    const auto deltas = log_spaced(1e-3, 0.04, 25); // g in [0.501, 0.54]
    std::vector<double> mz_shift, local_loss;
    for (double d : deltas) {
        const double mz = xy::mz_magnetization({65536, 0.5 + d, 0.0});
        mz_shift.push_back(mz + 1.0);
        local_loss.push_back(1.0 - mz * mz);
    }
    c.within(fit::power_fit(deltas, mz_shift).slope, 0.5, 0.05, "chi from M_z + 1");
    c.within(fit::power_fit(deltas, local_loss).slope, 0.5, 0.05, "chi from 1 - P_local");
}

void criterion10(Check& c) {
    std::mt19937 rng(4242);
    std::normal_distribution<double> gauss(0.0, 0.6);

    const auto invariant_under_rotations = [&](const ObservableBasis& basis) {
        const Vector v = random_state(rng, basis.dim());
        const auto purity_of = [&](const Vector& s) {
            double p = 0.0;
            for (const auto& op : basis.ops) {
                const double e = std::real(s.dot(op.mat() * s));
                p += e * e;
            }
            return basis.K * p;
        };
        const double p0 = purity_of(v);
        for (int rot = 0; rot < 50; ++rot) {
            Matrix gen = Matrix::Zero(basis.dim(), basis.dim());
            for (const auto& op : basis.ops) gen += gauss(rng) * op.mat();
            const Vector rotated = expm_i(gen) * v;
            if (!(std::abs(purity_of(rotated) - p0) < 1e-10)) {
                c.require(false, "purity drift under a group rotation of " + basis.name);
                return;
            }
        }
    };

    invariant_under_rotations(pauli_basis(3));
    invariant_under_rotations(gell_mann_basis());
    invariant_under_rotations(su_basis(4));
    invariant_under_rotations(local_algebra_basis({2, 3}));
    invariant_under_rotations(local_algebra_basis({2, 2, 2, 2}));
    invariant_under_rotations(uN_basis(jw_fermion_ops(4)));
    invariant_under_rotations(so2N_extension(jw_fermion_ops(3)));
    {
        const auto j = spin_matrices(2.0);
        Vector top = Vector::Zero(5);
        top(0) = 1.0;
        invariant_under_rotations(
            make_observable_basis("spin-2 su(2)", {j[0], j[1], j[2]}, {top}));
        invariant_under_rotations(make_observable_basis("spin-2 so(2)", {j[2]}, {top}));
    }
}

struct Criterion {
    int id;
    std::string label;
    std::function<void(Check&)> body;
    double budget_seconds; // 0 = no budget
};

} // namespace

int main() {
    setenv("OPENBLAS_NUM_THREADS", "1", 0);
    setenv("OMP_NUM_THREADS", "1", 0);

    const std::vector<Criterion> criteria{
        {1, "closed-form u(N) purity and finite-size agreement", criterion1, 5.0},
        {2, "XY oracle equivalence on the (N, g, gamma) grid", criterion2, 120.0},
        {3, "derivative kink at g_c and nu = 1 with amplitude 2/gamma", criterion3, 0.0},
        {4, "fermion-number fluctuation identities", criterion4, 0.0},
        {5, "LMG quantum-classical agreement and first-order line", criterion5, 60.0},
        {6, "LMG order-parameter exponent alpha = beta = 1", criterion6, 0.0},
        {7, "Meyer-Wallach equivalence Q = 1 - P_local", criterion7, 0.0},
        {8, "maximally entangled states at 0, product/Slater states at 1", criterion8, 0.0},
        {9, "isotropic chain: purity 1 and chi = 1/2", criterion9, 0.0},
        {10, "purity invariance under 50 algebra-group rotations per basis", criterion10, 0.0},
    };

    int failed = 0;
    for (const auto& crit : criteria) {
        Check check;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            crit.body(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (crit.budget_seconds > 0 && secs > crit.budget_seconds) {
            std::ostringstream os;
            os << "runtime " << secs << " s exceeds the " << crit.budget_seconds << " s budget";
            check.require(false, os.str());
        }
        const bool ok = check.failures.empty();
        if (!ok) ++failed;
        std::printf("%s  %2d. %s (%.1f s)\n", ok ? "PASS" : "FAIL", crit.id, crit.label.c_str(),
                    secs);
        for (const auto& f : check.failures) std::printf("      - %s\n", f.c_str());
    }
    if (failed == 0) {
        std::printf("acceptance: all %zu criteria passed\n", criteria.size());
        return 0;
    }
    std::printf("acceptance: %d criteria failed\n", failed);
    return 1;
}
