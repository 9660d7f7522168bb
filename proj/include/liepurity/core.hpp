#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liepurity {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Thrown when a requested object would exceed the dense desk-scale budget.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on contract violations (dimension mismatches, invalid parameters).
class SpecError : public std::invalid_argument {
public:
    explicit SpecError(const std::string& what) : std::invalid_argument(what) {}
};

namespace detail {
constexpr double kHermTol = 1e-12;
constexpr double kNormTol = 1e-12;
// Dense operator sets larger than this are refused rather than swapped to disk.
constexpr std::size_t kDenseBudgetBytes = std::size_t(512) * 1024 * 1024;

void check_dense_budget(Eigen::Index dim, std::size_t count, const std::string& who);
} // namespace detail

/// Dense complex square matrix checked to be Hermitian on construction.
class HermitianOperator {
public:
    explicit HermitianOperator(Matrix entries, double tol = detail::kHermTol);

    Eigen::Index dim() const { return entries_.rows(); }
    const Matrix& mat() const { return entries_; }

private:
    Matrix entries_;
};

enum class BasisKind { QubitChain, SpinChain, SpinJ, FermionFock };

/// Identifies which physical basis the amplitudes of a StateVector refer to.
struct BasisTag {
    BasisKind kind = BasisKind::QubitChain;
    int sites = 0;    // chain length or fermion mode count; 1 for SpinJ
    double spin = 0.5; // per-site spin, or total J for SpinJ

    static BasisTag qubits(int n) { return {BasisKind::QubitChain, n, 0.5}; }
    static BasisTag spin_chain(int n, double s) { return {BasisKind::SpinChain, n, s}; }
    static BasisTag spin_j(double j) { return {BasisKind::SpinJ, 1, j}; }
    static BasisTag fermions(int n) { return {BasisKind::FermionFock, n, 0.5}; }

    Eigen::Index expected_dim() const;
    std::string describe() const;
};

/// Normalized pure state. Inputs off the unit sphere are rejected, never renormalized.
class StateVector {
public:
    StateVector(Vector amplitudes, BasisTag tag, double tol = detail::kNormTol);

    Eigen::Index dim() const { return amplitudes_.size(); }
    const Vector& amplitudes() const { return amplitudes_; }
    const BasisTag& tag() const { return tag_; }

private:
    Vector amplitudes_;
    BasisTag tag_;
};

/// Ordered trace-orthogonal Hermitian basis of a distinguished algebra, plus the
/// normalization K that pins max purity on the reference family to 1.
struct ObservableBasis {
    std::string name;
    std::vector<HermitianOperator> ops;
    double K = 1.0;
    Eigen::VectorXd trace_norms;          // Tr(A_a^2), one entry per op
    std::optional<double> uniform_norm;   // set when all trace norms coincide

    Eigen::Index dim() const { return ops.empty() ? 0 : ops.front().dim(); }
    std::size_t size() const { return ops.size(); }
};

/// Validates orthogonality, records trace norms and fixes K so that the maximum
/// of K * sum <A_a>^2 over `reference_family` (normalized amplitude vectors of the
/// declared generalized-unentangled family) equals 1.
ObservableBasis make_observable_basis(std::string name,
                                      std::vector<HermitianOperator> ops,
                                      const std::vector<Vector>& reference_family,
                                      double ortho_tol = 1e-10);

/// Kronecker product, site 1 = leftmost/most significant factor.
Matrix kron(const Matrix& a, const Matrix& b);

/// Tr(A B) without forming the product.
Complex trace_product(const Matrix& a, const Matrix& b);

/// exp(i t H) for Hermitian H via eigendecomposition.
Matrix expm_i(const Matrix& hermitian, double t = 1.0);

} // namespace liepurity
