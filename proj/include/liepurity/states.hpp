#pragma once

#include "liepurity/core.hpp"

namespace liepurity {

enum class Boundary { Open, Periodic };

struct SpinChainSpec {
    int n_sites = 0;
    double spin = 0.5;
    Boundary boundary = Boundary::Open;
};

enum class StateKind { F, W, GHZ, Bell, Cluster, Product };

StateKind parse_state_kind(const std::string& name);

/// Representative N-spin states. Bell requires N=2, S=1/2; the cluster state is the
/// 1-D open-chain construction with sigma_z^{(j+1)} == 1 past the chain end; Product
/// takes one normalized ket per site in `site_states`.
StateVector named_state(StateKind kind, const SpinChainSpec& spec,
                        const std::vector<Vector>& site_states = {});

/// S=1 valence-bond-solid (AKLT) chain, periodic, built as a matrix-product
/// contraction with the standard 2x2 tensors; the total-spin singlet property is
/// verified on construction.
StateVector aklt_vbs(int n_sites, Boundary boundary = Boundary::Periodic);

/// Finite-N BCS ground state of the XY chain expanded in the qubit (Jordan-Wigner)
/// basis from the Bogoliubov coefficients and momentum-mode pair creation operators.
StateVector bcs_vector(int n_sites, double g, double gamma);

} // namespace liepurity
