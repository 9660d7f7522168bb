#include "liepurity/lmg.hpp"

#include "lapack_eig.hpp"
#include "liepurity/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace liepurity::lmg {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_params(const LmgParams& p) {
    if (p.n_particles < 2 || p.n_particles % 2 != 0)
        throw SpecError("lmg: N must be even and >= 2");
}

double jm2_element(double j, double m) {
    // <m-2| J_-^2 |m>
    return std::sqrt((j * (j + 1) - m * (m - 1)) * (j * (j + 1) - (m - 1) * (m - 2)));
}

struct ParityBlock {
    Eigen::VectorXd diag;
    Eigen::VectorXd sub;
    std::vector<int> index; // positions in the m-descending basis
};

// indices i with m = J - i; even i carries inversion parity +1 (N even)
ParityBlock build_block(const LmgParams& p, int start) {
    const int n = p.n_particles;
    const double j = 0.5 * n;
    ParityBlock blk;
    for (int i = start; i <= n; i += 2) blk.index.push_back(i);
    const int len = int(blk.index.size());
    blk.diag.resize(len);
    blk.sub.resize(std::max(0, len - 1));
    for (int t = 0; t < len; ++t) {
        const double m = j - blk.index[std::size_t(t)];
        blk.diag(t) = m + (p.w / n) * (j * (j + 1) - m * m);
        if (t + 1 < len) blk.sub(t) = (p.v / (2.0 * n)) * jm2_element(j, m);
    }
    return blk;
}

double classical_h(double v, double w, double theta, double phi) {
    const double s2 = std::sin(theta) * std::sin(theta);
    return 0.5 * std::cos(theta) + 0.25 * s2 * (v * std::cos(2.0 * phi) + w);
}

} // namespace

HermitianOperator build_hamiltonian(const LmgParams& p) {
    check_params(p);
    const int n = p.n_particles;
    const double j = 0.5 * n;
    Matrix h = Matrix::Zero(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
        const double m = j - i;
        h(i, i) = m + (p.w / n) * (j * (j + 1) - m * m);
        if (i + 2 <= n) {
            const double elem = (p.v / (2.0 * n)) * jm2_element(j, m);
            h(i + 2, i) = elem;
            h(i, i + 2) = elem;
        }
    }
    return HermitianOperator(std::move(h));
}

LmgSolution solve(const LmgParams& p) {
    check_params(p);
    const int n = p.n_particles;
    const double j = 0.5 * n;

    const ParityBlock even = build_block(p, 0);
    const ParityBlock odd = build_block(p, 1);

    Eigen::VectorXd ev = lapack::stevr_values(even.diag, even.sub);
    Eigen::VectorXd ov = lapack::stevr_values(odd.diag, odd.sub);
    Eigen::VectorXd all(n + 1);
    std::merge(ev.data(), ev.data() + ev.size(), ov.data(), ov.data() + ov.size(), all.data());

    const bool even_wins = ev(0) <= ov(0);
    const ParityBlock& blk = even_wins ? even : odd;
    lapack::LowestPair pair = even_wins ? lapack::stevr_lowest(even.diag, even.sub)
                                        : lapack::stevr_lowest(odd.diag, odd.sub);

    Vector full = Vector::Zero(n + 1);
    for (std::size_t t = 0; t < blk.index.size(); ++t)
        full(blk.index[t]) = pair.vector(Eigen::Index(t));
    for (Eigen::Index i = 0; i <= n; ++i) {
        if (std::abs(full(i)) > 1e-8) {
            if (std::real(full(i)) < 0) full = -full;
            break;
        }
    }
    full /= full.norm();

    double jz = 0.0;
    for (int i = 0; i <= n; ++i) jz += (j - i) * std::norm(full(i));

    LmgSolution sol{std::move(all), StateVector(std::move(full), BasisTag::spin_j(j)),
                    jz, 4.0 * jz * jz / (double(n) * n), 0.5 + jz / n,
                    even_wins ? +1 : -1, 0.0};
    sol.gap = sol.energies(1) - sol.energies(0);
    return sol;
}

ClassicalMinimum classical_minimum(double v, double w) {
    const double d = delta(v, w);
    ClassicalMinimum out;
    if (d <= 1.0) {
        out.theta = kPi;
        out.phi = 0.0;
        out.energy_per_particle = -0.5;
        out.n_up = 0.0;
        out.purity_jz = 1.0;
        return out;
    }
    out.theta = std::acos(-1.0 / d);
    out.energy_per_particle = -0.25 / d - 0.25 * d;
    out.n_up = 0.5 * (1.0 - 1.0 / d);
    out.purity_jz = 1.0 / (d * d);
    out.degenerate = true;
    if (v > 0) {
        out.phi = 0.5 * kPi; // yz plane, +-pi/2 equivalent
    } else if (v < 0) {
        out.phi = 0.0; // xz plane
    } else {
        out.phi_free = true; // gauge line V=0, W<-1
    }
    return out;
}

ClassicalMinimum classical_minimum_numeric(double v, double w) {
    double t_lo = 0.0, t_hi = kPi;
    double p_lo = -kPi, p_hi = kPi;
    double best_t = 0.0, best_p = 0.0, best_h = 1e300;
    const int grid = 61;
    for (int round = 0; round < 14; ++round) {
        best_h = 1e300;
        for (int it = 0; it < grid; ++it)
            for (int ip = 0; ip < grid; ++ip) {
                const double theta = t_lo + (t_hi - t_lo) * it / (grid - 1);
                const double phi = p_lo + (p_hi - p_lo) * ip / (grid - 1);
                const double h = classical_h(v, w, theta, phi);
                if (h < best_h) {
                    best_h = h;
                    best_t = theta;
                    best_p = phi;
                }
            }
        const double t_span = 0.55 * (t_hi - t_lo) / 2.0;
        const double p_span = 0.55 * (p_hi - p_lo) / 2.0;
        t_lo = std::max(0.0, best_t - t_span);
        t_hi = std::min(kPi, best_t + t_span);
        p_lo = best_p - p_span;
        p_hi = best_p + p_span;
    }
    ClassicalMinimum out;
    out.theta = best_t;
    out.phi = best_p;
    out.energy_per_particle = best_h;
    out.n_up = 0.5 * (1.0 + std::cos(best_t));
    out.purity_jz = std::cos(best_t) * std::cos(best_t);
    return out;
}

SweepResult lmg_sweep(const std::vector<double>& v_grid, const std::vector<double>& w_grid, int n,
                      double jump_threshold) {
    if (v_grid.empty() || w_grid.empty()) throw SpecError("lmg_sweep: empty grid");
    SweepResult out;
    out.rows.resize(v_grid.size() * w_grid.size());

    parallel_for(out.rows.size(), [&](std::size_t idx) {
        const std::size_t iw = idx / v_grid.size();
        const std::size_t iv = idx % v_grid.size();
        const LmgParams p{n, v_grid[iv], w_grid[iw]};
        const LmgSolution sol = solve(p);
        const ClassicalMinimum cls = classical_minimum(p.v, p.w);
        out.rows[idx] = SweepRow{p.v, p.w, n, sol.energies(0) / n, sol.purity_jz, sol.n_up,
                                 cls.energy_per_particle, cls.purity_jz};
    });

    // slope jump across V=0, per W, from the adjacent grid intervals on each side
    for (std::size_t iw = 0; iw < w_grid.size(); ++iw) {
        std::ptrdiff_t last_neg = -1, first_pos = -1;
        for (std::size_t iv = 0; iv < v_grid.size(); ++iv) {
            if (v_grid[iv] <= 0.0) last_neg = std::ptrdiff_t(iv);
            if (first_pos < 0 && v_grid[iv] >= 0.0) first_pos = std::ptrdiff_t(iv);
        }
        if (last_neg < 1 || first_pos < 0 || std::size_t(first_pos) + 1 >= v_grid.size()) continue;
        auto energy = [&](std::ptrdiff_t iv) {
            return out.rows[iw * v_grid.size() + std::size_t(iv)].energy_per_particle;
        };
        const double left = (energy(last_neg) - energy(last_neg - 1)) /
                            (v_grid[std::size_t(last_neg)] - v_grid[std::size_t(last_neg - 1)]);
        const double right = (energy(first_pos + 1) - energy(first_pos)) /
                             (v_grid[std::size_t(first_pos + 1)] - v_grid[std::size_t(first_pos)]);
        FirstOrderHit hit{w_grid[iw], std::abs(right - left), false};
        hit.detected = hit.slope_jump > jump_threshold;
        out.first_order.push_back(hit);
    }
    return out;
}

namespace {

fit::FitResult exponent_fit(const std::vector<double>& deltas,
                            const std::function<double(double)>& n_up_of_delta) {
    if (deltas.size() < 8)
        throw SpecError("lmg exponent fit: need at least 8 points (ill-conditioned window)");
    std::vector<double> ys;
    ys.reserve(deltas.size());
    for (double d : deltas) {
        if (!(d > 0)) throw SpecError("lmg exponent fit: path must approach Delta=1 from above");
        ys.push_back(n_up_of_delta(d));
    }
    return fit::power_fit(deltas, ys);
}

} // namespace

fit::FitResult classical_exponent(double w, const std::vector<double>& deltas) {
    return exponent_fit(deltas, [&](double d) { return classical_minimum(w + 1.0 + d, w).n_up; });
}

fit::FitResult quantum_exponent(int n, double w, const std::vector<double>& deltas) {
    std::vector<double> ys(deltas.size());
    if (deltas.size() < 8)
        throw SpecError("lmg exponent fit: need at least 8 points (ill-conditioned window)");
    parallel_for(deltas.size(), [&](std::size_t i) {
        if (!(deltas[i] > 0)) throw SpecError("lmg exponent fit: Delta must exceed 1");
        ys[i] = solve(LmgParams{n, w + 1.0 + deltas[i], w}).n_up;
    });
    return fit::power_fit(deltas, ys);
}

} // namespace liepurity::lmg
