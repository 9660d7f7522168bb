#pragma once

#include "liepurity/core.hpp"

#include <Eigen/Sparse>
#include <array>

namespace liepurity {

using SparseOp = Eigen::SparseMatrix<Complex>;

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

/// sigma_alpha acting on site i (1-based, site 1 most significant) of an N-qubit chain.
Matrix pauli_site(int n_sites, int site, char alpha);

/// Local su(2) algebra of an N-qubit chain: the 3N operators sigma_alpha^i / sqrt(2^N)
/// (trace-orthonormal), K = 2^N / N so that product states score purity 1.
ObservableBasis pauli_basis(int n_sites);

/// The eight Gell-Mann matrices, ordered and normalized as usual: Tr(l_a l_b) = delta_ab.
ObservableBasis gell_mann_basis();

/// Trace-orthonormal Hermitian basis of su(d) (generalized Gell-Mann), K = d/(d-1).
ObservableBasis su_basis(int d);
std::vector<HermitianOperator> su_generators(int d);

/// Spin-S angular momentum matrices {S_x, S_y, S_z}, dimension 2S+1,
/// physics convention [S_x, S_y] = i S_z, S_z diagonal descending S..-S.
std::array<HermitianOperator, 3> spin_matrices(double s);

/// Local algebra oplus_j su(d_j) embedded in the product space: per-site
/// trace-orthonormal generators tensored with plain identities elsewhere.
/// K' = 1 / (N - sum_j 1/d_j), making product states score 1.
ObservableBasis local_algebra_basis(const std::vector<int>& dims);

/// Jordan-Wigner fermion modes on N sites, c_j^dag = prod_{l<j}(-sigma_z^l) sigma_+^j.
/// Annihilators are kept sparse; anticommutation relations are verified on construction.
struct FermionOps {
    int modes = 0;
    std::vector<SparseOp> c; // annihilation matrices, dim 2^N

    SparseOp cdag(int j) const { return SparseOp(c.at(std::size_t(j)).adjoint()); }
    Eigen::Index dim() const { return Eigen::Index(1) << modes; }
};

FermionOps jw_fermion_ops(int n_modes);

/// Apply c_j (or c_j^dag) to a Fock-space amplitude vector without materializing matrices.
Vector apply_c(const FermionOps& f, int j, const Vector& v);
Vector apply_cdag(const FermionOps& f, int j, const Vector& v);

/// <psi| c_i^dag c_j |psi>
Complex bilinear_expectation(const FermionOps& f, int i, int j, const Vector& psi);
/// <psi| c_i^dag c_j^dag |psi>
Complex pairing_expectation(const FermionOps& f, int i, int j, const Vector& psi);

/// The N^2 Hermitian u(N) generators of the fermionic bilinear algebra:
/// (c_j^dag c_j' + h.c.), i(c_j^dag c_j' - h.c.) for j<j', and sqrt(2)(n_j - 1/2).
/// Uniform trace norm 2^{N-1}; K = 2/N (Slater determinants score 1).
ObservableBasis uN_basis(const FermionOps& f);

/// so(2N) = u(N) plus the pairing set r = {(c_j^dag c_j'^dag + h.c.), i(c_j^dag c_j'^dag - h.c.)}.
/// Same normalization; BCS-type states score 1. The u(N) part comes first, then r.
ObservableBasis so2N_extension(const FermionOps& f);

/// Number of u(N) generators inside so2N_extension's op list (the rest form r).
inline std::size_t so2N_uN_count(int n_modes) { return std::size_t(n_modes) * std::size_t(n_modes); }

/// u(N)-purity of a Fock state from sparse mode operators (works beyond the
/// dense-basis budget): (2/N) sum_{j<j'} [...] + (4/N) sum_j <n_j - 1/2>^2.
double uN_purity_sparse(const FermionOps& f, const Vector& psi);

/// Sum of squared expectations of the pairing set r, with the same 2/N weight that
/// makes P_so(2N) = P_u(N) + r-part.
double r_part_sparse(const FermionOps& f, const Vector& psi);

} // namespace liepurity
