#pragma once

#include "liepurity/core.hpp"
#include "liepurity/xy_chain.hpp"

namespace liepurity::oracle {

/// Brute-force ground-state record. The eigenvector phase is fixed so the first
/// amplitude above 1e-8 in magnitude is real positive.
struct EdResult {
    double ground_energy = 0.0;
    StateVector ground_state;
    int parity = 0;          // fermion-parity / inversion sector of the ground state
    double even_energy = 0.0; // lowest energy in the K=+1 sector
    double odd_energy = 0.0;  // lowest energy in the K=-1 sector
};

/// Dense exact diagonalization of the periodic XY chain on 2^N qubits, N even <= 12.
/// Solved sector-by-sector of the conserved fermion parity K = prod(-sigma_z^j).
EdResult xy_ed(int n_sites, double g, double gamma);

/// Lowest state of one parity sector only. Deep in the ordered phase at small
/// anisotropy the finite-chain sectors cross, so symmetry-resolved comparisons
/// against the K=+1 BCS analytics must pin the sector explicitly.
EdResult xy_ed_sector(int n_sites, double g, double gamma, int parity);

struct LmgEdResult {
    EdResult ed;
    double j2_expect = 0.0;       // <J^2> of the ground state
    bool in_max_j_sector = false; // <J^2> == (N/2)(N/2+1) within 1e-9
    double first_excited = 0.0;   // second level of the full 2^N spectrum
};

/// Dense ED of the LMG Hamiltonian realized with collective spin operators
/// J_alpha = sum_j sigma_alpha^j / 2 on the full 2^N space, N <= 10.
/// A failed J = N/2 sector check is reported in the result, never ignored.
LmgEdResult lmg_collective(int n_particles, double v, double w);

/// Apply sigma_alpha at `site` (1-based, site 1 most significant) to an amplitude vector.
Vector apply_sigma(const Vector& v, int n_sites, int site, char alpha);

/// <psi| prod_i sigma_{alpha_i}^{site_i} |psi> for a Pauli string.
double pauli_string_expectation(const Vector& psi, int n_sites,
                                const std::vector<std::pair<int, char>>& factors);

/// Spin correlators of an arbitrary 2^N state between sites 1 and 1+r.
xy::SpinCorrelators state_spin_correlators(const Vector& psi, int n_sites, int r);

/// Two-site reduced density operator on (site_a, site_b), 1-based.
HermitianOperator two_site_rdm_from_state(const Vector& psi, int n_sites, int site_a, int site_b);

/// Fermion parity <prod_j (-sigma_z^j)> of a state (N even).
double parity_expectation(const Vector& psi, int n_sites);

} // namespace liepurity::oracle
