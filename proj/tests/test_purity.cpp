#include <doctest.h>

#include "liepurity/operators.hpp"
#include "liepurity/purity.hpp"
#include "liepurity/states.hpp"
#include "test_util.hpp"

using namespace liepurity;

namespace {

StateVector ket(std::initializer_list<Complex> amps, BasisTag tag) {
    Vector v(Eigen::Index(amps.size()));
    Eigen::Index i = 0;
    for (Complex a : amps) v(i++) = a;
    return StateVector(v, tag);
}

ObservableBasis single_qubit_su2() {
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<HermitianOperator> ops{HermitianOperator(s * pauli_x()),
                                       HermitianOperator(s * pauli_y()),
                                       HermitianOperator(s * pauli_z())};
    Vector up = Vector::Zero(2);
    up(0) = 1.0;
    return make_observable_basis("su(2) qubit", std::move(ops), {up});
}

} // namespace

TEST_CASE("expectation basics and error paths") {
    const StateVector up = ket({1.0, 0.0}, BasisTag::qubits(1));
    CHECK(expectation(HermitianOperator(pauli_z()), up) == doctest::Approx(1.0));
    CHECK(expectation(HermitianOperator(pauli_x()), up) == doctest::Approx(0.0));

    CHECK_THROWS_AS(expectation(HermitianOperator(Matrix::Identity(4, 4)), up), SpecError);
    Matrix bad(2, 2);
    bad << 0, 1, 2, 0;
    CHECK_THROWS_AS(HermitianOperator{bad}, SpecError);
    // imaginary-residue guard on a raw matrix
    Matrix skew(2, 2);
    skew << 0, Complex(0, 1), Complex(0, 1), 0;
    CHECK_THROWS_AS(expectation(skew, ket({1 / std::sqrt(2.0), 1 / std::sqrt(2.0)},
                                          BasisTag::qubits(1)).amplitudes()),
                    SpecError);
}

TEST_CASE("relative purity classifies two-qubit states") {
    const double r2 = 1.0 / std::sqrt(2.0);
    const auto local = local_algebra_basis({2, 2});

    const StateVector bell = ket({r2, 0.0, 0.0, r2}, BasisTag::qubits(2));
    CHECK(relative_purity(local, bell).value == doctest::Approx(0.0).epsilon(1e-12));

    const StateVector upup = ket({1.0, 0.0, 0.0, 0.0}, BasisTag::qubits(2));
    CHECK(relative_purity(local, upup).value == doctest::Approx(1.0).epsilon(1e-12));

    // report invariant: value = K sum <A_a>^2
    const auto rep = relative_purity(local, bell);
    CHECK(rep.value ==
          doctest::Approx(rep.K_used * rep.per_generator.squaredNorm()).epsilon(1e-12));
}

TEST_CASE("two spin-1 |0,0> is generalized entangled for local spin rotations") {
    const auto spin1 = spin_matrices(1.0);
    std::vector<HermitianOperator> ops;
    for (const auto& s : spin1) ops.emplace_back(kron(s.mat(), Matrix::Identity(3, 3)));
    for (const auto& s : spin1) ops.emplace_back(kron(Matrix::Identity(3, 3), s.mat()));
    Vector ref = Vector::Zero(9); // |1,1>, Bloch-maximal
    ref(0) = 1.0;
    const auto basis = make_observable_basis("su(2)+su(2) spin-1", std::move(ops), {ref});
    CHECK(basis.K == doctest::Approx(0.5));

    Vector zz = Vector::Zero(9); // |0,0>: middle level on both sites
    zz(4) = 1.0;
    const StateVector psi(zz, BasisTag::spin_chain(2, 1.0));
    CHECK(relative_purity(basis, psi).value == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("W state of four qubits: purity 1/4 with an amplitude-sum oracle") {
    const StateVector w4 = named_state(StateKind::W, {4, 0.5, Boundary::Open});

    // oracle: per-site Bloch vectors by explicit amplitude sums
    const int n = 4;
    double oracle = 0.0;
    for (int site = 1; site <= n; ++site) {
        const Eigen::Index mask = Eigen::Index(1) << (n - site);
        Complex sz = 0.0, sp = 0.0;
        for (Eigen::Index b = 0; b < 16; ++b) {
            const Complex a = w4.amplitudes()(b);
            sz += std::conj(a) * a * ((b & mask) ? -1.0 : 1.0);
            if (b & mask) sp += std::conj(w4.amplitudes()(b ^ mask)) * a; // <sigma_+>
        }
        oracle += std::norm(sz) + 4.0 * std::norm(sp); // <sz>^2 + <sx>^2 + <sy>^2
    }
    oracle /= n;
    CHECK(oracle == doctest::Approx(0.25).epsilon(1e-12));

    CHECK(local_purity(w4, {2, 2, 2, 2}) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(relative_purity(local_algebra_basis({2, 2, 2, 2}), w4).value ==
          doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("project_onto_algebra") {
    const auto su2 = single_qubit_su2();

    Matrix up_dens = Matrix::Zero(2, 2);
    up_dens(0, 0) = 1.0;
    const auto proj = project_onto_algebra(HermitianOperator(up_dens), su2);
    CHECK((proj.mat() - 0.5 * pauli_z()).norm() < 1e-12);
    // Tr(result^2) * K recovers the purity for a pure state
    CHECK(su2.K * std::real((proj.mat() * proj.mat()).trace()) == doctest::Approx(1.0));

    const auto mixed = project_onto_algebra(HermitianOperator(0.5 * Matrix::Identity(2, 2)), su2);
    CHECK(mixed.mat().norm() < 1e-12);

    const double r2 = 1.0 / std::sqrt(2.0);
    const StateVector bell = ket({r2, 0.0, 0.0, r2}, BasisTag::qubits(2));
    const Matrix rho_bell = bell.amplitudes() * bell.amplitudes().adjoint();
    const auto bell_proj = project_onto_algebra(HermitianOperator(rho_bell), local_algebra_basis({2, 2}));
    CHECK(bell_proj.mat().norm() < 1e-12);

    CHECK_THROWS_AS(project_onto_algebra(HermitianOperator(Matrix::Identity(2, 2)), su2), SpecError);
}

TEST_CASE("invariant uncertainty on the global su(2) of two qubits") {
    // raw total-spin generators J_a = (sigma_a^1 + sigma_a^2)/2
    std::vector<HermitianOperator> jops;
    for (char a : {'x', 'y', 'z'})
        jops.emplace_back(Matrix(0.5 * (pauli_site(2, 1, a) + pauli_site(2, 2, a))));
    Vector ref = Vector::Zero(4);
    ref(0) = 1.0;
    const auto su2_global = make_observable_basis("global su(2)", std::move(jops), {ref});

    const double r2 = 1.0 / std::sqrt(2.0);
    CHECK(invariant_uncertainty(su2_global, ket({1, 0, 0, 0}, BasisTag::qubits(2))) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(invariant_uncertainty(su2_global, ket({0, r2, r2, 0}, BasisTag::qubits(2))) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(invariant_uncertainty(su2_global, ket({0, r2, -r2, 0}, BasisTag::qubits(2))) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("local purity via partial trace: products, GHZ, mixed dims") {
    std::mt19937 rng(3);

    // random product states score 1
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<Vector> sites;
        std::vector<int> dims{2, 3, 2};
        for (int d : dims) {
            Vector s(d);
            for (int i = 0; i < d; ++i) s(i) = Complex(gauss(rng), gauss(rng));
            s /= s.norm();
            sites.push_back(s);
        }
        Vector v = Vector::Ones(1);
        for (const auto& s : sites) {
            Vector next(v.size() * s.size());
            for (Eigen::Index a = 0; a < v.size(); ++a)
                for (Eigen::Index b = 0; b < s.size(); ++b) next(a * s.size() + b) = v(a) * s(b);
            v = next;
        }
        const StateVector psi(v, BasisTag::spin_j((12 - 1) / 2.0));
        CHECK(local_purity(psi, dims) == doctest::Approx(1.0).epsilon(1e-12));
    }

    for (int n = 3; n <= 6; ++n) {
        const auto ghz = named_state(StateKind::GHZ, {n, 0.5, Boundary::Open});
        CHECK(local_purity(ghz, std::vector<int>(std::size_t(n), 2)) ==
              doctest::Approx(0.0).epsilon(1e-12));
    }

    // generator route equals partial-trace route on mixed dims
    const std::vector<int> dims{2, 3, 2};
    const auto basis = local_algebra_basis(dims);
    for (int trial = 0; trial < 8; ++trial) {
        const Vector v = testutil::random_state_vec(rng, 12);
        const StateVector psi(v, BasisTag::spin_j((12 - 1) / 2.0));
        CHECK(std::abs(local_purity(psi, dims) - relative_purity(basis, psi).value) < 1e-12);
    }

    // and on a longer uniform qubit chain
    const auto basis8 = local_algebra_basis(std::vector<int>(8, 2));
    for (int trial = 0; trial < 3; ++trial) {
        const StateVector psi = testutil::random_qubit_state(rng, 8);
        CHECK(std::abs(local_purity(psi, std::vector<int>(8, 2)) -
                       relative_purity(basis8, psi).value) < 1e-12);
    }
}

TEST_CASE("meyer_wallach_Q literal construction") {
    const auto ghz3 = named_state(StateKind::GHZ, {3, 0.5, Boundary::Open});
    CHECK(meyer_wallach_Q(ghz3) == doctest::Approx(1.0).epsilon(1e-12));

    std::vector<Vector> sites;
    for (int i = 0; i < 3; ++i) {
        Vector s(2);
        s << std::cos(0.3 + i), std::sin(0.3 + i);
        sites.push_back(s);
    }
    const auto prod = named_state(StateKind::Product, {3, 0.5, Boundary::Open}, sites);
    CHECK(meyer_wallach_Q(prod) == doctest::Approx(0.0).epsilon(1e-12));

    std::mt19937 rng(17);
    for (int n = 2; n <= 8; n += 2) {
        const StateVector psi = testutil::random_qubit_state(rng, n);
        const double q = meyer_wallach_Q(psi);
        const double p = local_purity(psi, std::vector<int>(std::size_t(n), 2));
        CHECK(std::abs(q - (1.0 - p)) < 1e-12);
    }

    Vector v3 = testutil::random_state_vec(rng, 9);
    CHECK_THROWS_AS(meyer_wallach_Q(StateVector(v3, BasisTag::spin_chain(2, 1.0))), SpecError);
}

TEST_CASE("full su(d) purity is 1 for every pure state, d <= 16") {
    std::mt19937 rng(23);
    for (int d : {2, 3, 4, 7, 16}) {
        const auto basis = su_basis(d);
        for (int trial = 0; trial < 3; ++trial) {
            const Vector v = testutil::random_state_vec(rng, d);
            const StateVector psi(v, BasisTag::spin_j((d - 1) / 2.0));
            CHECK(relative_purity(basis, psi).value == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("group invariance of the purity under algebra rotations") {
    std::mt19937 rng(31);
    std::normal_distribution<double> gauss(0.0, 0.7);

    const auto check_invariance = [&](const ObservableBasis& basis, int n_rot) {
        const Vector v = testutil::random_state_vec(rng, basis.dim());
        double p0 = 0.0;
        for (const auto& op : basis.ops) {
            const double e = expectation(op.mat(), v);
            p0 += e * e;
        }
        p0 *= basis.K;
        for (int rot = 0; rot < n_rot; ++rot) {
            Matrix gen = Matrix::Zero(basis.dim(), basis.dim());
            for (const auto& op : basis.ops) gen += gauss(rng) * op.mat();
            const Matrix d = expm_i(gen);
            const Vector rotated = d * v;
            double p1 = 0.0;
            for (const auto& op : basis.ops) {
                const double e = expectation(op.mat(), rotated);
                p1 += e * e;
            }
            p1 *= basis.K;
            CHECK(std::abs(p1 - p0) < 1e-10);
        }
    };

    check_invariance(pauli_basis(2), 5);
    check_invariance(gell_mann_basis(), 5);
    check_invariance(uN_basis(jw_fermion_ops(3)), 5);
    check_invariance(local_algebra_basis({2, 3}), 5);
}

TEST_CASE("purity bounds for constructed bases on random states") {
    std::mt19937 rng(41);
    const auto check_bounds = [&](const ObservableBasis& basis) {
        for (int trial = 0; trial < 10; ++trial) {
            const Vector v = testutil::random_state_vec(rng, basis.dim());
            double p = 0.0;
            for (const auto& op : basis.ops) {
                const double e = expectation(op.mat(), v);
                p += e * e;
            }
            p *= basis.K;
            CHECK(p >= 0.0);
            CHECK(p <= 1.0 + 1e-10);
        }
    };
    check_bounds(pauli_basis(3));
    check_bounds(gell_mann_basis());
    check_bounds(su_basis(6));
    check_bounds(local_algebra_basis({2, 2, 3}));
    check_bounds(uN_basis(jw_fermion_ops(4)));
    check_bounds(so2N_extension(jw_fermion_ops(3)));
}

TEST_CASE("norm and dimension guards on StateVector") {
    Vector v(2);
    v << 0.5, 0.5; // norm != 1
    CHECK_THROWS_AS(StateVector(v, BasisTag::qubits(1)), SpecError);
    Vector ok(2);
    ok << 1.0, 0.0;
    CHECK_THROWS_AS(StateVector(ok, BasisTag::qubits(2)), SpecError);
}
