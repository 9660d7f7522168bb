#include "liepurity/ed_oracle.hpp"

#include "lapack_eig.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

namespace liepurity::oracle {

namespace {

using Index = Eigen::Index;

int site_bit(int n_sites, int site) { return n_sites - site; }

double spin_sign(Index b, int n_sites, int site) {
    return (b & (Index(1) << site_bit(n_sites, site))) ? -1.0 : 1.0; // bit set = down
}

// Scatter a parity-sector eigenvector into the full 2^N space with the sector's
// basis list, fix the overall sign, and wrap it as a StateVector.
StateVector assemble_state(const Eigen::VectorXd& sector_vec, const std::vector<Index>& states,
                           int n_sites) {
    Vector full = Vector::Zero(Index(1) << n_sites);
    for (std::size_t i = 0; i < states.size(); ++i) full(states[i]) = sector_vec(Index(i));
    for (Index i = 0; i < full.size(); ++i) {
        if (std::abs(full(i)) > 1e-8) {
            if (std::real(full(i)) < 0) full = -full;
            break;
        }
    }
    full /= full.norm();
    return StateVector(std::move(full), BasisTag::qubits(n_sites));
}

struct SectorSolve {
    lapack::LowestPair pair;
    std::vector<Index> states;
};

// Dense XY Hamiltonian restricted to one fermion-parity sector (popcount parity of
// the down-spin bits). Periodic chain, bonds (i, i+1) with (N, 1) wrapping.
SectorSolve solve_xy_sector(int n, double g, double gamma, int down_parity) {
    const Index dim = Index(1) << n;
    std::vector<Index> states;
    states.reserve(std::size_t(dim) / 2);
    std::vector<Index> pos(std::size_t(dim), -1);
    for (Index b = 0; b < dim; ++b) {
        if (std::popcount(std::uint64_t(b)) % 2 == down_parity) {
            pos[std::size_t(b)] = Index(states.size());
            states.push_back(b);
        }
    }

    const Index sdim = Index(states.size());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(sdim, sdim);
    for (Index row = 0; row < sdim; ++row) {
        const Index b = states[std::size_t(row)];
        double diag = 0.0;
        for (int site = 1; site <= n; ++site) diag += spin_sign(b, n, site);
        h(row, row) += diag;
        for (int site = 1; site <= n; ++site) {
            const int next = (site % n) + 1;
            const double si = spin_sign(b, n, site);
            const double sj = spin_sign(b, n, next);
            // sx sx flips the bond with +1; sy sy flips with -si*sj
            const double coeff = -g * ((1.0 + gamma) - (1.0 - gamma) * si * sj);
            const Index flipped =
                b ^ (Index(1) << site_bit(n, site)) ^ (Index(1) << site_bit(n, next));
            h(pos[std::size_t(flipped)], row) += coeff;
        }
    }

    SectorSolve out;
    out.pair = lapack::syevr_lowest(std::move(h));
    out.states = std::move(states);
    return out;
}

void check_residual(const Vector& psi, double energy, int n, double g, double gamma) {
    // apply H in the full space term by term
    Vector hpsi = Vector::Zero(psi.size());
    for (int site = 1; site <= n; ++site) {
        const int next = (site % n) + 1;
        Vector xx = apply_sigma(apply_sigma(psi, n, site, 'x'), n, next, 'x');
        Vector yy = apply_sigma(apply_sigma(psi, n, site, 'y'), n, next, 'y');
        hpsi += -g * ((1.0 + gamma) * xx + (1.0 - gamma) * yy);
        hpsi += apply_sigma(psi, n, site, 'z');
    }
    const double resid = (hpsi - energy * psi).norm();
    if (resid > 1e-9 * std::max(1.0, std::abs(energy)))
        throw std::logic_error("xy_ed: eigenpair residual above 1e-9");
}

} // namespace

namespace {

void check_xy_size(int n_sites) {
    if (n_sites < 2 || n_sites % 2 != 0) throw SpecError("xy_ed: N must be even and >= 2");
    if (n_sites > 12) throw ResourceError("xy_ed: N > 12 is beyond the dense ED budget");
}

} // namespace

EdResult xy_ed(int n_sites, double g, double gamma) {
    check_xy_size(n_sites);
    SectorSolve even = solve_xy_sector(n_sites, g, gamma, 0); // K = +1
    SectorSolve odd = solve_xy_sector(n_sites, g, gamma, 1);  // K = -1

    const bool even_wins = even.pair.value <= odd.pair.value;
    const SectorSolve& win = even_wins ? even : odd;
    EdResult out{win.pair.value, assemble_state(win.pair.vector, win.states, n_sites),
                 even_wins ? +1 : -1, even.pair.value, odd.pair.value};
    check_residual(out.ground_state.amplitudes(), out.ground_energy, n_sites, g, gamma);
    return out;
}

EdResult xy_ed_sector(int n_sites, double g, double gamma, int parity) {
    check_xy_size(n_sites);
    if (parity != +1 && parity != -1) throw SpecError("xy_ed_sector: parity must be +1 or -1");
    SectorSolve sec = solve_xy_sector(n_sites, g, gamma, parity == +1 ? 0 : 1);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    EdResult out{sec.pair.value, assemble_state(sec.pair.vector, sec.states, n_sites), parity,
                 parity == +1 ? sec.pair.value : nan, parity == -1 ? sec.pair.value : nan};
    check_residual(out.ground_state.amplitudes(), out.ground_energy, n_sites, g, gamma);
    return out;
}

LmgEdResult lmg_collective(int n_particles, double v, double w) {
    const int n = n_particles;
    if (n < 2 || n % 2 != 0) throw SpecError("lmg_collective: N must be even and >= 2");
    if (n > 10) throw ResourceError("lmg_collective: N > 10 is beyond the dense ED budget");
    const Index dim = Index(1) << n;

    // H = J_z + (V/2N)(J+^2 + J-^2) + (W/2N)(J+J- + J-J+) with J_a = sum_j sigma_a^j / 2
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (Index b = 0; b < dim; ++b) {
        double m = 0.0;
        for (int site = 1; site <= n; ++site) m += 0.5 * spin_sign(b, n, site);
        h(b, b) += m + 0.5 * w; // j=l terms of J+J- + J-J+ give N/2 * W/N
        for (int s1 = 1; s1 <= n; ++s1) {
            for (int s2 = 1; s2 <= n; ++s2) {
                if (s1 == s2) continue;
                const bool up1 = spin_sign(b, n, s1) > 0;
                const bool up2 = spin_sign(b, n, s2) > 0;
                const Index flipped =
                    b ^ (Index(1) << site_bit(n, s1)) ^ (Index(1) << site_bit(n, s2));
                if (s1 < s2 && up1 == up2) h(flipped, b) += v / n; // pair raise/lower, x2 ordered
                if (up1 && !up2) h(flipped, b) += w / n;           // transfer, x2 across the sums
            }
        }
    }

    const Eigen::VectorXd low2 = lapack::syevr_lowest_values(h, 2);
    lapack::LowestPair pair = lapack::syevr_lowest(std::move(h));
    Vector full(dim);
    for (Index i = 0; i < dim; ++i) full(i) = pair.vector(i);
    for (Index i = 0; i < dim; ++i) {
        if (std::abs(full(i)) > 1e-8) {
            if (std::real(full(i)) < 0) full = -full;
            break;
        }
    }
    full /= full.norm();

    // <J^2> via || J_a psi ||^2
    double j2 = 0.0;
    for (char alpha : {'x', 'y', 'z'}) {
        Vector jpsi = Vector::Zero(dim);
        for (int site = 1; site <= n; ++site) jpsi += 0.5 * apply_sigma(full, n, site, alpha);
        j2 += jpsi.squaredNorm();
    }

    const double kexp = parity_expectation(full, n);
    LmgEdResult out{EdResult{pair.value, StateVector(std::move(full), BasisTag::qubits(n)),
                             std::abs(kexp) > 0.99 ? (kexp > 0 ? +1 : -1) : 0, 0.0, 0.0},
                    j2, false, low2(1)};
    const double j_max = 0.5 * n;
    out.in_max_j_sector = std::abs(j2 - j_max * (j_max + 1.0)) < 1e-9 * std::max(1.0, j_max * j_max);
    return out;
}

Vector apply_sigma(const Vector& v, int n_sites, int site, char alpha) {
    if (site < 1 || site > n_sites) throw SpecError("apply_sigma: site out of range");
    const Index mask = Index(1) << site_bit(n_sites, site);
    Vector out(v.size());
    const Complex i_unit(0.0, 1.0);
    for (Index b = 0; b < v.size(); ++b) {
        switch (alpha) {
        case 'x': out(b ^ mask) = v(b); break;
        case 'y': out(b ^ mask) = (b & mask) ? -i_unit * v(b) : i_unit * v(b); break;
        case 'z': out(b) = (b & mask) ? -v(b) : v(b); break;
        default: throw SpecError("apply_sigma: alpha must be x, y or z");
        }
    }
    return out;
}

double pauli_string_expectation(const Vector& psi, int n_sites,
                                const std::vector<std::pair<int, char>>& factors) {
    Vector cur = psi;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it)
        cur = apply_sigma(cur, n_sites, it->first, it->second);
    const Complex e = psi.dot(cur);
    if (std::abs(std::imag(e)) > 1e-10)
        throw std::logic_error("pauli_string_expectation: nonreal expectation");
    return std::real(e);
}

xy::SpinCorrelators state_spin_correlators(const Vector& psi, int n_sites, int r) {
    xy::SpinCorrelators c;
    c.z_single = pauli_string_expectation(psi, n_sites, {{1, 'z'}});
    c.xx = pauli_string_expectation(psi, n_sites, {{1, 'x'}, {1 + r, 'x'}});
    c.yy = pauli_string_expectation(psi, n_sites, {{1, 'y'}, {1 + r, 'y'}});
    c.zz = pauli_string_expectation(psi, n_sites, {{1, 'z'}, {1 + r, 'z'}});
    return c;
}

HermitianOperator two_site_rdm_from_state(const Vector& psi, int n_sites, int site_a, int site_b) {
    if (site_a == site_b) throw SpecError("two_site_rdm_from_state: sites must differ");
    const Index ma = Index(1) << site_bit(n_sites, site_a);
    const Index mb = Index(1) << site_bit(n_sites, site_b);
    Matrix rho = Matrix::Zero(4, 4);
    for (Index b = 0; b < psi.size(); ++b) {
        const Index base = b & ~(ma | mb);
        const int ia = (b & ma) ? 1 : 0;
        const int ib = (b & mb) ? 1 : 0;
        const int row = 2 * ia + ib;
        for (int ja = 0; ja < 2; ++ja)
            for (int jb = 0; jb < 2; ++jb) {
                const Index b2 = base | (ja ? ma : 0) | (jb ? mb : 0);
                rho(row, 2 * ja + jb) += psi(b) * std::conj(psi(b2));
            }
    }
    return HermitianOperator(std::move(rho));
}

double parity_expectation(const Vector& psi, int n_sites) {
    if (n_sites % 2 != 0) throw SpecError("parity_expectation: N must be even");
    double e = 0.0;
    for (Index b = 0; b < psi.size(); ++b) {
        const int sign = std::popcount(std::uint64_t(b)) % 2 == 0 ? 1 : -1;
        e += sign * std::norm(psi(b));
    }
    return e;
}

} // namespace liepurity::oracle
