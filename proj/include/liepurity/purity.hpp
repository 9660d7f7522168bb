#pragma once

#include "liepurity/core.hpp"

namespace liepurity {

/// <psi|A|psi>. The imaginary residue is checked against tolerance and discarded;
/// a residue above tolerance signals a non-Hermitian operator slipping through.
double expectation(const HermitianOperator& op, const StateVector& psi);
double expectation(const Matrix& op, const Vector& psi);

struct PurityReport {
    double value = 0.0;             // K * sum_a <A_a>^2, in [0, 1] up to roundoff
    Eigen::VectorXd per_generator;  // <A_a> in basis order
    double K_used = 1.0;
};

/// Relative purity P_h = K sum_a <A_a>^2 of a pure state with respect to a basis.
PurityReport relative_purity(const ObservableBasis& basis, const StateVector& psi);

/// Projection of a density operator onto the algebra: sum_a Tr(A_a rho) A_a / Tr(A_a^2).
/// Requires rho to be a density operator (trace 1, PSD within 1e-10).
HermitianOperator project_onto_algebra(const HermitianOperator& rho, const ObservableBasis& basis);

/// Invariant uncertainty sum_a [<A_a^2> - <A_a>^2] = <C_2> - P_h (unrescaled purity).
double invariant_uncertainty(const ObservableBasis& basis, const StateVector& psi);

/// Reduced density operator of subsystem j (0-based) for a pure state whose space
/// factorizes as prod dims, site 0 most significant.
Matrix partial_trace_site(const StateVector& psi, const std::vector<int>& dims, std::size_t j);

/// Local purity K' sum_j [Tr rho_j^2 - 1/d_j] with K' = 1/(N - sum_j 1/d_j);
/// equals the relative purity with respect to local_algebra_basis(dims).
double local_purity(const StateVector& psi, const std::vector<int>& dims);

/// Meyer-Wallach global entanglement Q for qubit chains, evaluated through the
/// original distance construction on the amplitude partitions l_j(b), not via purity.
double meyer_wallach_Q(const StateVector& psi);

} // namespace liepurity
