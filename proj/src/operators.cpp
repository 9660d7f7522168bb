#include "liepurity/operators.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace liepurity {

namespace {

const Complex I1(0.0, 1.0);

Matrix identity(Eigen::Index d) { return Matrix::Identity(d, d); }

Vector basis_vector(Eigen::Index dim, Eigen::Index index) {
    Vector v = Vector::Zero(dim);
    v(index) = 1.0;
    return v;
}

} // namespace

Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

Matrix pauli_y() {
    Matrix m(2, 2);
    m << 0, -I1, I1, 0;
    return m;
}

Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

Matrix pauli_site(int n_sites, int site, char alpha) {
    if (site < 1 || site > n_sites) throw SpecError("pauli_site: site out of range");
    Matrix sigma;
    switch (alpha) {
    case 'x': sigma = pauli_x(); break;
    case 'y': sigma = pauli_y(); break;
    case 'z': sigma = pauli_z(); break;
    default: throw SpecError("pauli_site: alpha must be x, y or z");
    }
    Matrix out = identity(1);
    for (int i = 1; i <= n_sites; ++i) out = kron(out, i == site ? sigma : identity(2));
    return out;
}

ObservableBasis pauli_basis(int n_sites) {
    if (n_sites < 1) throw SpecError("pauli_basis: N must be >= 1");
    if (n_sites > 14) throw ResourceError("pauli_basis: N > 14 is beyond dense desk scale");
    const Eigen::Index dim = Eigen::Index(1) << n_sites;
    detail::check_dense_budget(dim, 3 * std::size_t(n_sites), "pauli_basis");

    const double scale = 1.0 / std::sqrt(double(dim));
    std::vector<HermitianOperator> ops;
    ops.reserve(3 * std::size_t(n_sites));
    for (int i = 1; i <= n_sites; ++i)
        for (char alpha : {'x', 'y', 'z'})
            ops.emplace_back(Matrix(scale * pauli_site(n_sites, i, alpha)));

    // all-up product state fixes K = 2^N / N
    return make_observable_basis("pauli_local", std::move(ops), {basis_vector(dim, 0)});
}

std::vector<HermitianOperator> su_generators(int d) {
    if (d < 2) throw SpecError("su_generators: d must be >= 2");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<HermitianOperator> ops;
    ops.reserve(std::size_t(d) * std::size_t(d) - 1);
    for (int k = 1; k < d; ++k) {
        for (int j = 0; j < k; ++j) {
            Matrix s = Matrix::Zero(d, d);
            s(j, k) = inv_sqrt2;
            s(k, j) = inv_sqrt2;
            ops.emplace_back(std::move(s));
            Matrix a = Matrix::Zero(d, d);
            a(j, k) = -I1 * inv_sqrt2;
            a(k, j) = I1 * inv_sqrt2;
            ops.emplace_back(std::move(a));
        }
        Matrix diag = Matrix::Zero(d, d);
        const double norm = 1.0 / std::sqrt(double(k) * (k + 1));
        for (int j = 0; j < k; ++j) diag(j, j) = norm;
        diag(k, k) = -double(k) * norm;
        ops.emplace_back(std::move(diag));
    }
    return ops;
}

ObservableBasis gell_mann_basis() {
    auto ops = su_generators(3);
    return make_observable_basis("gell_mann", std::move(ops), {basis_vector(3, 0)});
}

ObservableBasis su_basis(int d) {
    detail::check_dense_budget(d, std::size_t(d) * std::size_t(d) - 1, "su_basis");
    auto ops = su_generators(d);
    std::ostringstream name;
    name << "su(" << d << ")";
    // every pure state is a GCS of su(d); any basis state serves as reference
    return make_observable_basis(name.str(), std::move(ops), {basis_vector(d, 0)});
}

std::array<HermitianOperator, 3> spin_matrices(double s) {
    const double two_s = 2.0 * s;
    if (s < 0 || std::abs(two_s - std::lround(two_s)) > 1e-12)
        throw SpecError("spin_matrices: 2S must be a nonnegative integer");
    const Eigen::Index d = Eigen::Index(std::lround(two_s)) + 1;
    Matrix sp = Matrix::Zero(d, d); // raising operator, basis ordered m = S..-S
    for (Eigen::Index i = 1; i < d; ++i) {
        const double m = s - double(i); // S_+ |m> -> |m+1>, row i-1
        sp(i - 1, i) = std::sqrt(s * (s + 1) - m * (m + 1));
    }
    Matrix sm = sp.adjoint();
    Matrix sx = 0.5 * (sp + sm);
    Matrix sy = -0.5 * I1 * (sp - sm);
    Matrix sz = Matrix::Zero(d, d);
    for (Eigen::Index i = 0; i < d; ++i) sz(i, i) = s - double(i);
    return {HermitianOperator(std::move(sx)), HermitianOperator(std::move(sy)),
            HermitianOperator(std::move(sz))};
}

ObservableBasis local_algebra_basis(const std::vector<int>& dims) {
    if (dims.empty()) throw SpecError("local_algebra_basis: empty dims list");
    Eigen::Index total = 1;
    std::size_t n_ops = 0;
    double inv_d_sum = 0.0;
    for (int d : dims) {
        if (d < 2) throw SpecError("local_algebra_basis: every subsystem dim must be >= 2");
        total *= d;
        n_ops += std::size_t(d) * std::size_t(d) - 1;
        inv_d_sum += 1.0 / d;
    }
    detail::check_dense_budget(total, n_ops, "local_algebra_basis");

    std::vector<HermitianOperator> ops;
    ops.reserve(n_ops);
    for (std::size_t j = 0; j < dims.size(); ++j) {
        Eigen::Index left = 1, right = 1;
        for (std::size_t i = 0; i < j; ++i) left *= dims[i];
        for (std::size_t i = j + 1; i < dims.size(); ++i) right *= dims[i];
        for (const auto& gen : su_generators(dims[j]))
            ops.emplace_back(kron(kron(identity(left), gen.mat()), identity(right)));
    }

    // product state reference gives K' = 1 / (N - sum_j 1/d_j)
    return make_observable_basis("local_algebra", std::move(ops), {basis_vector(total, 0)});
}

FermionOps jw_fermion_ops(int n_modes) {
    if (n_modes < 1) throw SpecError("jw_fermion_ops: N must be >= 1");
    if (n_modes > 14) throw ResourceError("jw_fermion_ops: N > 14 is beyond dense desk scale");
    const Eigen::Index dim = Eigen::Index(1) << n_modes;

    FermionOps f;
    f.modes = n_modes;
    f.c.reserve(std::size_t(n_modes));
    // site j occupies bit (N-j); bit clear = spin up = mode occupied
    for (int j = 1; j <= n_modes; ++j) {
        const Eigen::Index mask = Eigen::Index(1) << (n_modes - j);
        std::vector<Eigen::Triplet<Complex>> trip;
        trip.reserve(std::size_t(dim) / 2);
        for (Eigen::Index b = 0; b < dim; ++b) {
            if (b & mask) continue; // mode j empty, annihilated
            int occupied_before = 0;
            for (int l = 1; l < j; ++l)
                if (!(b & (Eigen::Index(1) << (n_modes - l)))) ++occupied_before;
            const double sign = (occupied_before % 2 == 0) ? 1.0 : -1.0;
            trip.emplace_back(int(b | mask), int(b), Complex(sign, 0.0));
        }
        SparseOp m(dim, dim);
        m.setFromTriplets(trip.begin(), trip.end());
        f.c.push_back(std::move(m));
    }

    // anticommutation relations, Eq-level contract of the construction
    const SparseOp id = SparseOp(Matrix::Identity(dim, dim).sparseView());
    for (int i = 0; i < n_modes; ++i) {
        for (int j = 0; j < n_modes; ++j) {
            SparseOp anti_cc = SparseOp(f.c[i] * f.c[j] + f.c[j] * f.c[i]);
            double dev = 0.0;
            for (int k = 0; k < anti_cc.outerSize(); ++k)
                for (SparseOp::InnerIterator it(anti_cc, k); it; ++it)
                    dev = std::max(dev, std::abs(it.value()));
            if (dev > 1e-12) throw std::logic_error("jw_fermion_ops: {c_i, c_j} != 0");
            SparseOp cd = f.cdag(i);
            SparseOp anti_dc = SparseOp(cd * f.c[j] + f.c[j] * cd);
            SparseOp expect = (i == j) ? id : SparseOp(dim, dim);
            SparseOp diff = SparseOp(anti_dc - expect);
            dev = 0.0;
            for (int k = 0; k < diff.outerSize(); ++k)
                for (SparseOp::InnerIterator it(diff, k); it; ++it)
                    dev = std::max(dev, std::abs(it.value()));
            if (dev > 1e-12) throw std::logic_error("jw_fermion_ops: {c_i^dag, c_j} != delta_ij");
        }
    }
    return f;
}

Vector apply_c(const FermionOps& f, int j, const Vector& v) {
    if (j < 1 || j > f.modes) throw SpecError("apply_c: mode out of range");
    return f.c[std::size_t(j - 1)] * v;
}

Vector apply_cdag(const FermionOps& f, int j, const Vector& v) {
    if (j < 1 || j > f.modes) throw SpecError("apply_cdag: mode out of range");
    return f.c[std::size_t(j - 1)].adjoint() * v;
}

Complex bilinear_expectation(const FermionOps& f, int i, int j, const Vector& psi) {
    return apply_c(f, i, psi).dot(apply_c(f, j, psi));
}

Complex pairing_expectation(const FermionOps& f, int i, int j, const Vector& psi) {
    return apply_c(f, i, psi).dot(apply_cdag(f, j, psi));
}

namespace {

Vector fock_vacuum(const FermionOps& f) {
    // no fermions = all spins down = highest basis index
    return basis_vector(f.dim(), f.dim() - 1);
}

std::vector<HermitianOperator> uN_ops(const FermionOps& f) {
    const int n = f.modes;
    std::vector<HermitianOperator> ops;
    ops.reserve(std::size_t(n) * std::size_t(n));
    for (int j = 1; j <= n; ++j)
        for (int jp = j + 1; jp <= n; ++jp) {
            SparseOp hop = SparseOp(f.cdag(j - 1) * f.c[std::size_t(jp - 1)]);
            Matrix h = Matrix(hop);
            ops.emplace_back(Matrix(h + h.adjoint()));
        }
    for (int j = 1; j <= n; ++j)
        for (int jp = j + 1; jp <= n; ++jp) {
            SparseOp hop = SparseOp(f.cdag(j - 1) * f.c[std::size_t(jp - 1)]);
            Matrix h = Matrix(hop);
            ops.emplace_back(Matrix(I1 * (h - h.adjoint())));
        }
    const double sqrt2 = std::sqrt(2.0);
    for (int j = 1; j <= n; ++j) {
        Matrix num = Matrix(SparseOp(f.cdag(j - 1) * f.c[std::size_t(j - 1)]));
        ops.emplace_back(Matrix(sqrt2 * (num - 0.5 * Matrix::Identity(f.dim(), f.dim()))));
    }
    return ops;
}

} // namespace

ObservableBasis uN_basis(const FermionOps& f) {
    detail::check_dense_budget(f.dim(), std::size_t(f.modes) * std::size_t(f.modes), "uN_basis");
    std::ostringstream name;
    name << "u(" << f.modes << ")";
    return make_observable_basis(name.str(), uN_ops(f), {fock_vacuum(f)});
}

ObservableBasis so2N_extension(const FermionOps& f) {
    const int n = f.modes;
    detail::check_dense_budget(f.dim(), 2 * std::size_t(n) * std::size_t(n) - std::size_t(n),
                               "so2N_extension");
    auto ops = uN_ops(f);
    for (int j = 1; j <= n; ++j)
        for (int jp = j + 1; jp <= n; ++jp) {
            Matrix pair = Matrix(SparseOp(f.cdag(j - 1) * f.cdag(jp - 1)));
            ops.emplace_back(Matrix(pair + pair.adjoint()));
        }
    for (int j = 1; j <= n; ++j)
        for (int jp = j + 1; jp <= n; ++jp) {
            Matrix pair = Matrix(SparseOp(f.cdag(j - 1) * f.cdag(jp - 1)));
            ops.emplace_back(Matrix(I1 * (pair - pair.adjoint())));
        }
    std::ostringstream name;
    name << "so(" << 2 * n << ")";
    auto basis = make_observable_basis(name.str(), std::move(ops), {fock_vacuum(f)});

    // spot-check closure under the i[.,.] bracket on a deterministic pair sample
    std::mt19937 rng(0x502u + unsigned(n));
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int trial = 0; trial < 8; ++trial) {
        const Matrix& a = basis.ops[pick(rng)].mat();
        const Matrix& b = basis.ops[pick(rng)].mat();
        Matrix resid = I1 * (a * b - b * a);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const Complex coeff =
                trace_product(basis.ops[k].mat(), resid) / basis.trace_norms(Eigen::Index(k));
            resid -= coeff * basis.ops[k].mat();
        }
        if (resid.norm() > 1e-10)
            throw std::logic_error("so2N_extension: bracket fell outside the so(2N) span");
    }
    return basis;
}

double uN_purity_sparse(const FermionOps& f, const Vector& psi) {
    const int n = f.modes;
    std::vector<Vector> cpsi;
    cpsi.reserve(std::size_t(n));
    for (int j = 1; j <= n; ++j) cpsi.push_back(apply_c(f, j, psi));
    double sum = 0.0;
    for (int j = 0; j < n; ++j) {
        for (int jp = j + 1; jp < n; ++jp) {
            const Complex e = cpsi[std::size_t(j)].dot(cpsi[std::size_t(jp)]);
            sum += 4.0 * std::norm(e);
        }
        const double nj = cpsi[std::size_t(j)].squaredNorm();
        sum += 2.0 * (nj - 0.5) * (nj - 0.5);
    }
    return 2.0 / n * sum;
}

double r_part_sparse(const FermionOps& f, const Vector& psi) {
    const int n = f.modes;
    double sum = 0.0;
    for (int j = 1; j <= n; ++j) {
        const Vector cj = apply_c(f, j, psi);
        for (int jp = j + 1; jp <= n; ++jp) {
            const Complex e = cj.dot(apply_cdag(f, jp, psi));
            sum += 4.0 * std::norm(e);
        }
    }
    return 2.0 / n * sum;
}

} // namespace liepurity
