#include "liepurity/core.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

namespace liepurity {

namespace detail {

void check_dense_budget(Eigen::Index dim, std::size_t count, const std::string& who) {
    const std::size_t bytes = std::size_t(dim) * std::size_t(dim) * sizeof(Complex) * count;
    if (bytes > kDenseBudgetBytes) {
        std::ostringstream os;
        os << who << ": dense representation of " << count << " operator(s) of dim " << dim
           << " needs " << bytes / (1024 * 1024) << " MiB, over the " << kDenseBudgetBytes / (1024 * 1024)
           << " MiB desk-scale budget";
        throw ResourceError(os.str());
    }
}

} // namespace detail

HermitianOperator::HermitianOperator(Matrix entries, double tol) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
        throw SpecError("HermitianOperator: matrix must be square and nonempty");
    const double dev = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (dev > tol) {
        std::ostringstream os;
        os << "HermitianOperator: |A - A^dag| = " << dev << " exceeds " << tol;
        throw SpecError(os.str());
    }
}

Eigen::Index BasisTag::expected_dim() const {
    switch (kind) {
    case BasisKind::QubitChain:
        return Eigen::Index(1) << sites;
    case BasisKind::SpinChain: {
        const auto d = Eigen::Index(std::lround(2 * spin + 1));
        Eigen::Index out = 1;
        for (int i = 0; i < sites; ++i) out *= d;
        return out;
    }
    case BasisKind::SpinJ:
        return Eigen::Index(std::lround(2 * spin + 1));
    case BasisKind::FermionFock:
        return Eigen::Index(1) << sites;
    }
    return 0;
}

std::string BasisTag::describe() const {
    std::ostringstream os;
    switch (kind) {
    case BasisKind::QubitChain: os << "qubit chain N=" << sites; break;
    case BasisKind::SpinChain: os << "spin-" << spin << " chain N=" << sites; break;
    case BasisKind::SpinJ: os << "spin-J multiplet J=" << spin; break;
    case BasisKind::FermionFock: os << "fermionic Fock N=" << sites; break;
    }
    return os.str();
}

StateVector::StateVector(Vector amplitudes, BasisTag tag, double tol)
    : amplitudes_(std::move(amplitudes)), tag_(tag) {
    if (amplitudes_.size() == 0) throw SpecError("StateVector: empty amplitude vector");
    if (tag_.expected_dim() != amplitudes_.size()) {
        std::ostringstream os;
        os << "StateVector: " << tag_.describe() << " expects dim " << tag_.expected_dim()
           << ", got " << amplitudes_.size();
        throw SpecError(os.str());
    }
    const double norm = amplitudes_.norm();
    if (std::abs(norm - 1.0) > tol) {
        std::ostringstream os;
        os << "StateVector: norm " << norm << " deviates from 1 by more than " << tol;
        throw SpecError(os.str());
    }
}

ObservableBasis make_observable_basis(std::string name,
                                      std::vector<HermitianOperator> ops,
                                      const std::vector<Vector>& reference_family,
                                      double ortho_tol) {
    if (ops.empty()) throw SpecError("make_observable_basis: empty operator list");
    const Eigen::Index d = ops.front().dim();
    for (const auto& op : ops)
        if (op.dim() != d) throw SpecError("make_observable_basis: mixed operator dimensions");

    ObservableBasis basis;
    basis.name = std::move(name);
    basis.trace_norms.resize(Eigen::Index(ops.size()));
    for (std::size_t a = 0; a < ops.size(); ++a) {
        const double na = std::real(trace_product(ops[a].mat(), ops[a].mat()));
        if (na <= 0) throw SpecError("make_observable_basis: operator with nonpositive trace norm");
        basis.trace_norms(Eigen::Index(a)) = na;
        for (std::size_t b = 0; b < a; ++b) {
            const Complex cross = trace_product(ops[a].mat(), ops[b].mat());
            const double scale = std::sqrt(na * basis.trace_norms(Eigen::Index(b)));
            if (std::abs(cross) > ortho_tol * std::max(1.0, scale)) {
                std::ostringstream os;
                os << "make_observable_basis(" << basis.name << "): ops " << a << "," << b
                   << " are not trace-orthogonal, |Tr(AB)| = " << std::abs(cross);
                throw SpecError(os.str());
            }
        }
    }
    const double cmin = basis.trace_norms.minCoeff();
    const double cmax = basis.trace_norms.maxCoeff();
    if (cmax - cmin <= 1e-10 * std::max(1.0, cmax)) basis.uniform_norm = 0.5 * (cmin + cmax);
    basis.ops = std::move(ops);

    if (reference_family.empty())
        throw SpecError("make_observable_basis: need at least one reference state to fix K");
    double best = 0.0;
    for (const auto& ref : reference_family) {
        if (ref.size() != d) throw SpecError("make_observable_basis: reference state dim mismatch");
        double s = 0.0;
        for (const auto& op : basis.ops) {
            const Complex e = ref.dot(op.mat() * ref);
            s += std::real(e) * std::real(e);
        }
        best = std::max(best, s);
    }
    if (best <= 0) throw SpecError("make_observable_basis: reference family has zero projection");
    basis.K = 1.0 / best;
    return basis;
}

Complex trace_product(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows() || a.rows() != b.cols())
        throw SpecError("trace_product: incompatible shapes");
    return a.cwiseProduct(b.transpose()).sum();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix expm_i(const Matrix& hermitian, double t) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian);
    if (es.info() != Eigen::Success) throw std::runtime_error("expm_i: eigensolver failed");
    Vector phases(es.eigenvalues().size());
    for (Eigen::Index i = 0; i < phases.size(); ++i)
        phases(i) = std::exp(Complex(0.0, t * es.eigenvalues()(i)));
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

} // namespace liepurity
