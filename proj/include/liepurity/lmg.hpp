#pragma once

#include "liepurity/core.hpp"
#include "liepurity/fit.hpp"

#include <cmath>

namespace liepurity::lmg {

struct LmgParams {
    int n_particles = 2; // even, >= 2
    double v = 0.0;
    double w = 0.0;
};

/// Delta = |V| - W, the control parameter of the phase diagram.
inline double delta(double v, double w) { return std::abs(v) - w; }

/// (N+1) x (N+1) LMG Hamiltonian H = J_z + (V/2N)(J+^2 + J-^2) + (W/2N)(J+J- + J-J+)
/// in the spin J = N/2 representation, J_z basis ordered m = J..-J.
HermitianOperator build_hamiltonian(const LmgParams& p);

struct LmgSolution {
    Eigen::VectorXd energies; // full spectrum, ascending, length N+1
    StateVector ground;       // spin-J multiplet tag, m-descending basis
    double jz_expect = 0.0;
    double purity_jz = 0.0; // 4 <J_z>^2 / N^2
    double n_up = 0.0;      // 1/2 + <J_z>/N
    int parity = 0;         // inversion sector of the ground state
    double gap = 0.0;       // E_1 - E_0
};

/// Exact solve through the two inversion-parity tridiagonal blocks.
LmgSolution solve(const LmgParams& p);

struct ClassicalMinimum {
    double theta = 0.0;
    double phi = 0.0;
    bool phi_free = false; // gauge line V=0, W<-1
    bool degenerate = false;
    double energy_per_particle = 0.0;
    double n_up = 0.0;      // (1 + cos theta)/2
    double purity_jz = 0.0; // cos^2 theta
};

/// Closed-form minimizer of h_c = j cos(theta) + V j^2 sin^2(theta) cos(2 phi)
/// + W j^2 sin^2(theta) at j = 1/2: theta = pi for Delta <= 1, cos(theta) = -1/Delta
/// beyond, with phi in the yz plane for V>0, xz plane for V<0.
ClassicalMinimum classical_minimum(double v, double w);

/// Grid-refinement minimizer over (theta, phi); confirms the closed form.
ClassicalMinimum classical_minimum_numeric(double v, double w);

struct SweepRow {
    double v = 0.0;
    double w = 0.0;
    int n = 0;
    double energy_per_particle = 0.0;
    double purity_jz = 0.0;
    double n_up = 0.0;
    double classical_energy = 0.0;
    double classical_purity = 0.0;
};

struct FirstOrderHit {
    double w = 0.0;
    double slope_jump = 0.0; // |dE/dV right of 0 - dE/dV left of 0|
    bool detected = false;
};

struct SweepResult {
    std::vector<SweepRow> rows; // grid index order: W outer, V inner
    std::vector<FirstOrderHit> first_order; // one entry per W when the V grid crosses 0
};

/// Grid scan; flags the first-order line V=0 via the jump in dE/dV across V=0.
SweepResult lmg_sweep(const std::vector<double>& v_grid, const std::vector<double>& w_grid, int n,
                      double jump_threshold = 0.05);

/// Log-log fit of <n_up> against (Delta - 1) along the classical path at fixed W.
/// `deltas` holds Delta-1 > 0 values; needs at least 8 points.
fit::FitResult classical_exponent(double w, const std::vector<double>& deltas);

/// Same fit from the finite-N quantum solution at fixed W.
fit::FitResult quantum_exponent(int n, double w, const std::vector<double>& deltas);

} // namespace liepurity::lmg
