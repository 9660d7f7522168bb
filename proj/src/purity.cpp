#include "liepurity/purity.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

namespace liepurity {

namespace {
constexpr double kImagTol = 1e-12;
}

double expectation(const Matrix& op, const Vector& psi) {
    if (op.rows() != psi.size()) throw SpecError("expectation: dimension mismatch");
    const Complex e = psi.dot(op * psi);
    if (std::abs(std::imag(e)) > kImagTol * std::max(1.0, std::abs(e))) {
        std::ostringstream os;
        os << "expectation: imaginary residue " << std::imag(e) << " signals a non-Hermitian operator";
        throw SpecError(os.str());
    }
    return std::real(e);
}

double expectation(const HermitianOperator& op, const StateVector& psi) {
    return expectation(op.mat(), psi.amplitudes());
}

PurityReport relative_purity(const ObservableBasis& basis, const StateVector& psi) {
    if (basis.dim() != psi.dim()) throw SpecError("relative_purity: dimension mismatch");
    PurityReport report;
    report.per_generator.resize(Eigen::Index(basis.size()));
    double sum = 0.0;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        const double e = expectation(basis.ops[a], psi);
        report.per_generator(Eigen::Index(a)) = e;
        sum += e * e;
    }
    report.K_used = basis.K;
    report.value = basis.K * sum;
    return report;
}

HermitianOperator project_onto_algebra(const HermitianOperator& rho, const ObservableBasis& basis) {
    if (basis.dim() != rho.dim()) throw SpecError("project_onto_algebra: dimension mismatch");
    const double tr = std::real(rho.mat().trace());
    if (std::abs(tr - 1.0) > 1e-10)
        throw SpecError("project_onto_algebra: input is not trace-one");
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho.mat(), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-10)
        throw SpecError("project_onto_algebra: input is not positive semidefinite");

    Matrix out = Matrix::Zero(rho.dim(), rho.dim());
    for (std::size_t a = 0; a < basis.size(); ++a) {
        const Complex coeff = trace_product(basis.ops[a].mat(), rho.mat());
        out += (std::real(coeff) / basis.trace_norms(Eigen::Index(a))) * basis.ops[a].mat();
    }
    return HermitianOperator(std::move(out));
}

double invariant_uncertainty(const ObservableBasis& basis, const StateVector& psi) {
    if (basis.dim() != psi.dim()) throw SpecError("invariant_uncertainty: dimension mismatch");
    double direct = 0.0;
    double first_moments_sq = 0.0;
    for (const auto& op : basis.ops) {
        const double mean = expectation(op, psi);
        const double second = (op.mat() * psi.amplitudes()).squaredNorm(); // <A^2> = |A psi|^2
        direct += second - mean * mean;
        first_moments_sq += mean * mean;
    }
    // cross-check through the quadratic Casimir C_2 = sum_a A_a^2
    Matrix casimir = Matrix::Zero(basis.dim(), basis.dim());
    for (const auto& op : basis.ops) casimir += op.mat() * op.mat();
    const double via_casimir = expectation(casimir, psi.amplitudes()) - first_moments_sq;
    if (std::abs(direct - via_casimir) > 1e-10 * std::max(1.0, std::abs(direct)))
        throw std::logic_error("invariant_uncertainty: Casimir route disagrees with direct sum");
    return direct;
}

Matrix partial_trace_site(const StateVector& psi, const std::vector<int>& dims, std::size_t j) {
    if (j >= dims.size()) throw SpecError("partial_trace_site: site index out of range");
    Eigen::Index total = 1;
    for (int d : dims) {
        if (d < 1) throw SpecError("partial_trace_site: invalid dims");
        total *= d;
    }
    if (total != psi.dim()) throw SpecError("partial_trace_site: dims do not factor the state");

    Eigen::Index right = 1;
    for (std::size_t i = j + 1; i < dims.size(); ++i) right *= dims[i];
    const Eigen::Index dj = dims[j];
    const Eigen::Index left = total / (dj * right);

    Matrix rho = Matrix::Zero(dj, dj);
    const Vector& amp = psi.amplitudes();
    for (Eigen::Index l = 0; l < left; ++l)
        for (Eigen::Index a = 0; a < dj; ++a)
            for (Eigen::Index b = 0; b < dj; ++b) {
                Complex acc(0.0, 0.0);
                const Eigen::Index base_a = (l * dj + a) * right;
                const Eigen::Index base_b = (l * dj + b) * right;
                for (Eigen::Index r = 0; r < right; ++r)
                    acc += amp(base_a + r) * std::conj(amp(base_b + r));
                rho(a, b) += acc;
            }
    return rho;
}

double local_purity(const StateVector& psi, const std::vector<int>& dims) {
    if (dims.empty()) throw SpecError("local_purity: empty dims list");
    Eigen::Index total = 1;
    double inv_d_sum = 0.0;
    for (int d : dims) {
        if (d < 2) throw SpecError("local_purity: every subsystem dim must be >= 2");
        total *= d;
        inv_d_sum += 1.0 / d;
    }
    if (total != psi.dim()) throw SpecError("local_purity: dims do not factor the state");

    double sum = 0.0;
    for (std::size_t j = 0; j < dims.size(); ++j) {
        const Matrix rho_j = partial_trace_site(psi, dims, j);
        sum += std::real((rho_j * rho_j).trace()) - 1.0 / dims[j];
    }
    return sum / (double(dims.size()) - inv_d_sum);
}

double meyer_wallach_Q(const StateVector& psi) {
    if (psi.tag().kind != BasisKind::QubitChain)
        throw SpecError("meyer_wallach_Q: defined for qubit chains only");
    const int n = psi.tag().sites;
    if (n > 12) throw ResourceError("meyer_wallach_Q: literal distance sums beyond N=12 refused");
    const Eigen::Index half = Eigen::Index(1) << (n - 1);
    const Vector& amp = psi.amplitudes();

    double q_sum = 0.0;
    for (int site = 1; site <= n; ++site) {
        const int pos = n - site; // bit position of this site
        const Eigen::Index low_mask = (Eigen::Index(1) << pos) - 1;
        Vector u(half), v(half); // l_j(up) psi and l_j(down) psi
        for (Eigen::Index i = 0; i < half; ++i) {
            const Eigen::Index b = ((i & ~low_mask) << 1) | (i & low_mask);
            u(i) = amp(b);
            v(i) = amp(b | (Eigen::Index(1) << pos));
        }
        double dist = 0.0;
        for (Eigen::Index i = 0; i < half; ++i)
            for (Eigen::Index ip = 0; ip < half; ++ip)
                dist += std::norm(u(i) * v(ip) - u(ip) * v(i));
        q_sum += 0.5 * dist;
    }
    return 4.0 / n * q_sum;
}

} // namespace liepurity
