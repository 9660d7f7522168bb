#pragma once

#include "liepurity/core.hpp"

namespace liepurity::xy {

/// Anisotropic XY chain in a transverse field; finite N must be even.
struct XyParams {
    int n_sites = 0;
    double g = 0.0;
    double gamma = 1.0;
};

/// Per-momentum Bogoliubov data on the antiperiodic set
/// V = {±pi/N, ±3pi/N, ..., ±(N-1)pi/N}, stored in ascending k order.
struct BogoliubovSolution {
    Eigen::VectorXd ks;
    Eigen::VectorXd u;
    Eigen::VectorXd v;
    Eigen::VectorXd phi;
    Eigen::VectorXd xi; // quasiparticle energies, >= 0
};

/// Branch fixed by cos(phi_k) = (1 - 2g cos k)/e_k, sin(phi_k) = -2 g gamma sin k / e_k
/// with e_k = xi_k / 2, so that v_k = 0 at g = 0 and the BCS vector is the ground state.
BogoliubovSolution bogoliubov_solve(const XyParams& p);

/// Ground state energy of the finite chain in the even-parity sector: -sum_k xi_k / 2.
double ground_energy(const XyParams& p);

/// Finite-N u(N)-purity of the BCS ground state: (4/N) sum_{k in V} (v_k^2 - 1/2)^2.
double purity_uN_finite(const XyParams& p);

/// Thermodynamic-limit closed form; two branches meeting continuously at g = 1/2.
/// gamma must lie in (0, 1]; the isotropic gamma = 0 case has purity identically 1
/// and is handled by the local-purity observables instead.
double purity_uN_thermo(double g, double gamma);

/// Disorder parameter P' = P - 1/(1+gamma); zero for g > 1/2.
double shifted_purity(double g, double gamma);
double shifted_purity_finite(const XyParams& p);

struct CorrelationLengthForm {
    double lambda2 = 0.0;       // e^{-1/eps}
    double corr_length = 0.0;   // eps
    double p_prime = 0.0;       // disorder parameter evaluated through lambda2
};

/// Evaluates the disorder parameter as a function of the correlation length for
/// g < 1/2, inverting the closed-form identity to obtain lambda2.
CorrelationLengthForm correlation_length_form(double g, double gamma);

/// Total fermion-number statistics of the BCS state.
struct NumberDistribution {
    Eigen::VectorXd probs; // Omega(n), n = 0..N; zero at odd n
    double mean = 0.0;
    double variance = 0.0;
};

/// Poisson-binomial over the N/2 pair modes (each contributes 0 or 2 fermions with
/// probability u_k^2 / v_k^2), assembled by iterative convolution.
NumberDistribution number_distribution(const XyParams& p);

/// Var(N_hat) = sum_{k in V+} 4 u_k^2 v_k^2 from the mode sums.
double number_variance(const XyParams& p);

struct SpinCorrelators {
    double xx = 0.0;
    double yy = 0.0;
    double zz = 0.0;
    double z_single = 0.0;
};

/// Toeplitz-determinant correlators of the finite chain:
///   G(m) = -(1/N) sum_{k in V} cos(k m - phi_k),
///   <sx sx>_r = det[G(j-l+1)], <sy sy>_r = det[G(j-l-1)], <sz sz>_r = <sz>^2 - G(r)G(-r).
SpinCorrelators spin_correlators(const XyParams& p, int r);

/// xx correlator at maximal separation r = N/2 as the finite-size proxy for M_x^2.
double mx2_order_parameter(double g, double gamma, int n_sites, int r = -1);

/// Local (site-algebra) purity of the BCS state: <sigma_z>^2 by translation
/// invariance and Z2 symmetry.
double local_purity_bcs(const XyParams& p);

/// <sigma_z> of the BCS state.
double mz_magnetization(const XyParams& p);

/// Wootters concurrence of a two-qubit density operator.
double concurrence(const HermitianOperator& rho2);

/// Z2-symmetric two-site reduced density operator assembled from the correlators.
HermitianOperator two_site_rdm(const XyParams& p, int r);

struct ConcurrenceRow {
    double g = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double dc1_dg = 0.0; // central difference; one-sided at the grid ends
};

/// Nearest- and next-nearest-neighbor concurrence along a g grid, with the numeric
/// g-derivative of C(1). Grids crossing the critical region with spacing above 1e-2
/// are rejected as too coarse for the derivative.
std::vector<ConcurrenceRow> concurrence_scan(double gamma, const std::vector<double>& g_grid,
                                             int n_sites);

/// Second-order Richardson extrapolation from f(N) and f(2N) assuming O(1/N^2) error.
double richardson2(double f_n, double f_2n);

} // namespace liepurity::xy
