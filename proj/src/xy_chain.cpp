#include "liepurity/xy_chain.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace liepurity::xy {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_finite_params(const XyParams& p, const char* who) {
    if (p.n_sites < 2 || p.n_sites % 2 != 0) {
        std::ostringstream os;
        os << who << ": N must be even and >= 2, got " << p.n_sites;
        throw SpecError(os.str());
    }
    if (p.g < 0) throw SpecError(std::string(who) + ": g must be >= 0");
    if (p.gamma < 0 || p.gamma > 1) throw SpecError(std::string(who) + ": gamma must lie in [0, 1]");
}

void check_thermo_gamma(double gamma, const char* who) {
    if (!(gamma > 0) || gamma > 1)
        throw SpecError(std::string(who) + ": gamma must lie in (0, 1]; the isotropic case "
                                           "is handled through the local-purity observables");
}

// treat gamma within 1e-7 of 1 through the Ising limit to avoid 1/(1-gamma^2) blowup
constexpr double kGammaOneEps = 1e-7;

} // namespace

BogoliubovSolution bogoliubov_solve(const XyParams& p) {
    check_finite_params(p, "bogoliubov_solve");
    const int n = p.n_sites;
    BogoliubovSolution sol;
    sol.ks.resize(n);
    sol.u.resize(n);
    sol.v.resize(n);
    sol.phi.resize(n);
    sol.xi.resize(n);
    for (int i = 0; i < n; ++i) {
        const double k = (2.0 * i + 1.0 - n) * kPi / n;
        const double a = 1.0 - 2.0 * p.g * std::cos(k);
        const double b = -2.0 * p.g * p.gamma * std::sin(k);
        const double e = std::hypot(a, b);
        const double phi = (e > 0.0) ? std::atan2(b, a) : 0.0;
        sol.ks(i) = k;
        sol.phi(i) = phi;
        sol.u(i) = std::cos(0.5 * phi);
        sol.v(i) = std::sin(0.5 * phi);
        sol.xi(i) = 2.0 * e;
    }
    return sol;
}

double ground_energy(const XyParams& p) {
    const BogoliubovSolution sol = bogoliubov_solve(p);
    return -0.5 * sol.xi.sum();
}

double purity_uN_finite(const XyParams& p) {
    const BogoliubovSolution sol = bogoliubov_solve(p);
    long double sum = 0.0L;
    for (Eigen::Index i = 0; i < sol.v.size(); ++i) {
        const long double d = (long double)(sol.v(i)) * sol.v(i) - 0.5L;
        sum += d * d;
    }
    return double(4.0L * sum / p.n_sites);
}

double purity_uN_thermo(double g, double gamma) {
    check_thermo_gamma(gamma, "purity_uN_thermo");
    if (g < 0) throw SpecError("purity_uN_thermo: g must be >= 0");
    if (g > 0.5) return 1.0 / (1.0 + gamma);
    if (gamma > 1.0 - kGammaOneEps) return 1.0 - 2.0 * g * g;
    const double om = 1.0 - gamma * gamma;
    return (1.0 - gamma * gamma / std::sqrt(1.0 - 4.0 * g * g * om)) / om;
}

double shifted_purity(double g, double gamma) {
    check_thermo_gamma(gamma, "shifted_purity");
    if (g < 0) throw SpecError("shifted_purity: g must be >= 0");
    if (g > 0.5) return 0.0;
    if (gamma > 1.0 - kGammaOneEps) return 0.5 - 2.0 * g * g;
    const double om = 1.0 - gamma * gamma;
    return gamma / om * (1.0 - gamma / std::sqrt(1.0 - 4.0 * g * g * om));
}

double shifted_purity_finite(const XyParams& p) {
    return purity_uN_finite(p) - 1.0 / (1.0 + p.gamma);
}

CorrelationLengthForm correlation_length_form(double g, double gamma) {
    check_thermo_gamma(gamma, "correlation_length_form");
    if (!(g >= 0) || g >= 0.5)
        throw SpecError("correlation_length_form: defined on the disordered branch g < 1/2");

    CorrelationLengthForm out;
    // lambda2 = [1 - sqrt(1 - 4g^2(1-gamma^2))] / (2g(1-gamma)), rationalized so the
    // same expression covers gamma -> 1 and small g without cancellation
    const double root = std::sqrt(1.0 - 4.0 * g * g * (1.0 - gamma * gamma));
    out.lambda2 = 2.0 * g * (1.0 + gamma) / (1.0 + root);
    out.corr_length = (out.lambda2 > 0.0) ? -1.0 / std::log(out.lambda2) : 0.0;

    if (gamma > 1.0 - kGammaOneEps) {
        out.p_prime = 0.5 * (1.0 - 2.0 * g * out.lambda2);
    } else {
        out.p_prime = gamma / (1.0 - gamma * gamma) *
                      (1.0 + gamma / (2.0 * g * out.lambda2 * (1.0 - gamma) - 1.0));
    }
    const double direct = shifted_purity(g, gamma);
    if (std::abs(out.p_prime - direct) > 1e-10 * std::max(1.0, std::abs(direct)))
        throw std::logic_error("correlation_length_form: lambda2 inversion fails to reproduce "
                               "the disorder parameter");
    return out;
}

NumberDistribution number_distribution(const XyParams& p) {
    const BogoliubovSolution sol = bogoliubov_solve(p);
    const int n = p.n_sites;
    NumberDistribution dist;
    dist.probs = Eigen::VectorXd::Zero(n + 1);
    dist.probs(0) = 1.0;
    for (Eigen::Index i = 0; i < sol.ks.size(); ++i) {
        if (sol.ks(i) <= 0) continue; // one Bernoulli pair per k in V+
        const double pv = sol.v(i) * sol.v(i);
        const double pu = 1.0 - pv;
        for (int m = n; m >= 2; m -= 1) dist.probs(m) = pu * dist.probs(m) + pv * dist.probs(m - 2);
        dist.probs(1) *= pu;
        dist.probs(0) *= pu;
    }
    long double mean = 0.0L, second = 0.0L;
    for (int m = 0; m <= n; ++m) {
        mean += (long double)(m)*dist.probs(m);
        second += (long double)(m) * m * dist.probs(m);
    }
    dist.mean = double(mean);
    dist.variance = double(second - mean * mean);
    return dist;
}

double number_variance(const XyParams& p) {
    const BogoliubovSolution sol = bogoliubov_solve(p);
    long double var = 0.0L;
    for (Eigen::Index i = 0; i < sol.ks.size(); ++i) {
        if (sol.ks(i) <= 0) continue;
        const long double uv = (long double)(sol.u(i)) * sol.v(i);
        var += 4.0L * uv * uv;
    }
    return double(var);
}

namespace {

// G(m) = -(1/N) sum_{k in V} cos(k m - phi_k)
double g_function(const BogoliubovSolution& sol, int m) {
    long double sum = 0.0L;
    for (Eigen::Index i = 0; i < sol.ks.size(); ++i)
        sum += std::cos(sol.ks(i) * m - sol.phi(i));
    return double(-sum / sol.ks.size());
}

double toeplitz_det(const std::vector<double>& g_by_m, int offset, int r, int shift) {
    // entries G(j - l + shift); g_by_m[m + offset] holds G(m)
    if (r == 1) return g_by_m[std::size_t(offset + shift)];
    Eigen::MatrixXd t(r, r);
    for (int j = 0; j < r; ++j)
        for (int l = 0; l < r; ++l) t(j, l) = g_by_m[std::size_t(j - l + shift + offset)];
    return t.partialPivLu().determinant();
}

} // namespace

SpinCorrelators spin_correlators(const XyParams& p, int r) {
    check_finite_params(p, "spin_correlators");
    if (r < 1 || r > p.n_sites / 2) throw SpecError("spin_correlators: r must satisfy 1 <= r <= N/2");
    const BogoliubovSolution sol = bogoliubov_solve(p);

    std::vector<double> g_by_m(std::size_t(2 * r + 1));
    for (int m = -r; m <= r; ++m) g_by_m[std::size_t(m + r)] = g_function(sol, m);

    SpinCorrelators c;
    c.z_single = g_by_m[std::size_t(r)]; // G(0)
    c.xx = toeplitz_det(g_by_m, r, r, +1);
    c.yy = toeplitz_det(g_by_m, r, r, -1);
    c.zz = c.z_single * c.z_single - g_by_m[std::size_t(2 * r)] * g_by_m[std::size_t(0)];
    return c;
}

double mx2_order_parameter(double g, double gamma, int n_sites, int r) {
    XyParams p{n_sites, g, gamma};
    if (r < 0) r = n_sites / 2;
    return spin_correlators(p, r).xx;
}

double mz_magnetization(const XyParams& p) {
    const BogoliubovSolution sol = bogoliubov_solve(p);
    return g_function(sol, 0);
}

double local_purity_bcs(const XyParams& p) {
    const double mz = mz_magnetization(p);
    return mz * mz;
}

double concurrence(const HermitianOperator& rho2) {
    if (rho2.dim() != 4) throw SpecError("concurrence: expected a 4x4 two-qubit density operator");
    if (std::abs(std::real(rho2.mat().trace()) - 1.0) > 1e-8)
        throw SpecError("concurrence: input is not trace-one");
    Eigen::SelfAdjointEigenSolver<Matrix> chk(rho2.mat(), Eigen::EigenvaluesOnly);
    if (chk.eigenvalues().minCoeff() < -1e-8)
        throw SpecError("concurrence: input is not positive semidefinite");

    Matrix yy = Matrix::Zero(4, 4);
    yy(0, 3) = -1;
    yy(1, 2) = 1;
    yy(2, 1) = 1;
    yy(3, 0) = -1; // sigma_y (x) sigma_y
    const Matrix rho_tilde = yy * rho2.mat().conjugate() * yy;
    Eigen::ComplexEigenSolver<Matrix> es(rho2.mat() * rho_tilde, false);
    std::array<double, 4> lam{};
    for (int i = 0; i < 4; ++i) lam[std::size_t(i)] = std::sqrt(std::max(0.0, std::real(es.eigenvalues()(i))));
    std::sort(lam.begin(), lam.end(), std::greater<double>());
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

HermitianOperator two_site_rdm(const XyParams& p, int r) {
    const SpinCorrelators c = spin_correlators(p, r);
    Matrix sx(2, 2), sy(2, 2), sz(2, 2), id = Matrix::Identity(2, 2);
    sx << 0, 1, 1, 0;
    sy << 0, Complex(0, -1), Complex(0, 1), 0;
    sz << 1, 0, 0, -1;
    Matrix rho = kron(id, id);
    rho += c.z_single * (kron(sz, id) + kron(id, sz));
    rho += c.xx * kron(sx, sx) + c.yy * kron(sy, sy) + c.zz * kron(sz, sz);
    rho *= 0.25;
    return HermitianOperator(std::move(rho));
}

std::vector<ConcurrenceRow> concurrence_scan(double gamma, const std::vector<double>& g_grid,
                                             int n_sites) {
    if (g_grid.size() < 2) throw SpecError("concurrence_scan: need at least two grid points");
    for (std::size_t i = 1; i < g_grid.size(); ++i) {
        const double lo = g_grid[i - 1], hi = g_grid[i];
        if (hi <= lo) throw SpecError("concurrence_scan: grid must be strictly ascending");
        const bool near_gc = hi > 0.45 && lo < 0.55;
        if (near_gc && hi - lo > 1e-2 + 1e-12)
            throw SpecError("concurrence_scan: grid spacing above 1e-2 near g_c is too coarse "
                            "for the derivative");
    }
    std::vector<ConcurrenceRow> rows(g_grid.size());
    for (std::size_t i = 0; i < g_grid.size(); ++i) {
        XyParams p{n_sites, g_grid[i], gamma};
        rows[i].g = g_grid[i];
        rows[i].c1 = concurrence(two_site_rdm(p, 1));
        rows[i].c2 = concurrence(two_site_rdm(p, 2));
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::size_t lo = (i == 0) ? 0 : i - 1;
        const std::size_t hi = (i + 1 == rows.size()) ? i : i + 1;
        rows[i].dc1_dg = (rows[hi].c1 - rows[lo].c1) / (g_grid[hi] - g_grid[lo]);
    }
    return rows;
}

double richardson2(double f_n, double f_2n) { return (4.0 * f_2n - f_n) / 3.0; }

} // namespace liepurity::xy
