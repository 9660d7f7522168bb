#include "liepurity/states.hpp"

#include "liepurity/operators.hpp"
#include "liepurity/purity.hpp"
#include "liepurity/xy_chain.hpp"

#include <cmath>
#include <sstream>

namespace liepurity {

namespace {

Eigen::Index chain_dim(const SpinChainSpec& spec, const char* who) {
    if (spec.n_sites < 1) throw SpecError(std::string(who) + ": N must be >= 1");
    const double two_s = 2.0 * spec.spin;
    if (spec.spin < 0.5 || std::abs(two_s - std::lround(two_s)) > 1e-12)
        throw SpecError(std::string(who) + ": 2S must be a positive integer");
    const Eigen::Index d = Eigen::Index(std::lround(two_s)) + 1;
    double log_dim = spec.n_sites * std::log2(double(d));
    if (log_dim > 20.0)
        throw ResourceError(std::string(who) + ": (2S+1)^N exceeds the 2^20 amplitude budget");
    Eigen::Index dim = 1;
    for (int i = 0; i < spec.n_sites; ++i) dim *= d;
    return dim;
}

BasisTag chain_tag(const SpinChainSpec& spec) {
    return spec.spin == 0.5 ? BasisTag::qubits(spec.n_sites)
                            : BasisTag::spin_chain(spec.n_sites, spec.spin);
}

// digit 0 = m:+S ... digit 2S = m:-S, site 1 most significant
Eigen::Index repeated_digit_index(int n_sites, Eigen::Index d, Eigen::Index digit) {
    Eigen::Index idx = 0;
    for (int i = 0; i < n_sites; ++i) idx = idx * d + digit;
    return idx;
}

StateVector cluster_state(const SpinChainSpec& spec) {
    if (spec.spin != 0.5) throw SpecError("named_state: cluster states are defined on qubits");
    if (spec.n_sites < 2) throw SpecError("named_state: cluster state needs N >= 2");
    const int n = spec.n_sites;
    const Eigen::Index dim = Eigen::Index(1) << n;
    const double amp = std::pow(2.0, -0.5 * n);
    Vector v(dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
        // sign from sigma_z^{(j+1)} acting on each chosen |up>_j term; bit set = down
        int flips = 0;
        for (int j = 1; j < n; ++j) {
            const bool up_j = !(b & (Eigen::Index(1) << (n - j)));
            const bool down_next = (b & (Eigen::Index(1) << (n - j - 1))) != 0;
            if (up_j && down_next) ++flips;
        }
        v(b) = (flips % 2 == 0) ? amp : -amp;
    }
    return StateVector(std::move(v), chain_tag(spec));
}

} // namespace

StateKind parse_state_kind(const std::string& name) {
    if (name == "F" || name == "f") return StateKind::F;
    if (name == "W" || name == "w") return StateKind::W;
    if (name == "GHZ" || name == "ghz") return StateKind::GHZ;
    if (name == "Bell" || name == "bell") return StateKind::Bell;
    if (name == "cluster") return StateKind::Cluster;
    if (name == "product") return StateKind::Product;
    throw SpecError("unknown state kind '" + name + "'");
}

StateVector named_state(StateKind kind, const SpinChainSpec& spec,
                        const std::vector<Vector>& site_states) {
    const Eigen::Index dim = chain_dim(spec, "named_state");
    const Eigen::Index d = Eigen::Index(std::lround(2 * spec.spin)) + 1;
    const int n = spec.n_sites;

    switch (kind) {
    case StateKind::F: {
        Vector v = Vector::Zero(dim);
        v(0) = 1.0;
        return StateVector(std::move(v), chain_tag(spec));
    }
    case StateKind::W: {
        Vector v = Vector::Zero(dim);
        const double a = 1.0 / std::sqrt(double(n));
        for (int i = 1; i <= n; ++i) {
            Eigen::Index idx = 0;
            for (int j = 1; j <= n; ++j) idx = idx * d + (j == i ? 1 : 0);
            v(idx) = a;
        }
        return StateVector(std::move(v), chain_tag(spec));
    }
    case StateKind::GHZ: {
        Vector v = Vector::Zero(dim);
        const double a = 1.0 / std::sqrt(double(d));
        for (Eigen::Index l = 0; l < d; ++l) v(repeated_digit_index(n, d, l)) = a;
        return StateVector(std::move(v), chain_tag(spec));
    }
    case StateKind::Bell: {
        if (n != 2 || spec.spin != 0.5)
            throw SpecError("named_state: Bell requires N=2, S=1/2");
        Vector v = Vector::Zero(4);
        v(0) = v(3) = 1.0 / std::sqrt(2.0);
        return StateVector(std::move(v), chain_tag(spec));
    }
    case StateKind::Cluster:
        return cluster_state(spec);
    case StateKind::Product: {
        if (Eigen::Index(site_states.size()) != n)
            throw SpecError("named_state: product state needs one ket per site");
        Vector v = Vector::Ones(1);
        for (const auto& site : site_states) {
            if (site.size() != d) throw SpecError("named_state: site ket has wrong dimension");
            if (std::abs(site.norm() - 1.0) > 1e-12)
                throw SpecError("named_state: site kets must be normalized");
            Vector next(v.size() * d);
            for (Eigen::Index a = 0; a < v.size(); ++a)
                for (Eigen::Index b = 0; b < d; ++b) next(a * d + b) = v(a) * site(b);
            v = std::move(next);
        }
        return StateVector(std::move(v), chain_tag(spec));
    }
    }
    throw SpecError("named_state: unsupported kind");
}

StateVector aklt_vbs(int n_sites, Boundary boundary) {
    if (boundary != Boundary::Periodic)
        throw SpecError("aklt_vbs: only the periodic chain is supported");
    if (n_sites < 3) throw SpecError("aklt_vbs: N must be >= 3");
    if (n_sites > 12) throw ResourceError("aklt_vbs: N > 12 is beyond the dense budget");

    // standard 2x2 AKLT tensors for m = +1, 0, -1
    std::array<Eigen::Matrix2cd, 3> a;
    a[0] << 0.0, std::sqrt(2.0 / 3.0), 0.0, 0.0;
    a[1] << -std::sqrt(1.0 / 3.0), 0.0, 0.0, std::sqrt(1.0 / 3.0);
    a[2] << 0.0, 0.0, -std::sqrt(2.0 / 3.0), 0.0;

    Eigen::Index dim = 1;
    for (int i = 0; i < n_sites; ++i) dim *= 3;
    Vector v(dim);
    std::vector<int> digits(std::size_t(n_sites), 0);
    for (Eigen::Index idx = 0; idx < dim; ++idx) {
        Eigen::Index rest = idx;
        for (int s = n_sites - 1; s >= 0; --s) {
            digits[std::size_t(s)] = int(rest % 3);
            rest /= 3;
        }
        Eigen::Matrix2cd prod = a[std::size_t(digits[0])];
        for (int s = 1; s < n_sites; ++s) prod = prod * a[std::size_t(digits[std::size_t(s)])];
        v(idx) = prod.trace();
    }
    v /= v.norm();
    StateVector psi(std::move(v), BasisTag::spin_chain(n_sites, 1.0));

    // total-spin singlet: sum_j <S_alpha^j> must vanish
    const auto spin1 = spin_matrices(1.0);
    const std::vector<int> dims(std::size_t(n_sites), 3);
    for (const auto& s_alpha : spin1) {
        double total = 0.0;
        for (int j = 0; j < n_sites; ++j) {
            const Matrix rho_j = partial_trace_site(psi, dims, std::size_t(j));
            total += std::real((rho_j * s_alpha.mat()).trace());
        }
        if (std::abs(total) > 1e-10)
            throw std::logic_error("aklt_vbs: total spin expectation does not vanish");
    }
    return psi;
}

StateVector bcs_vector(int n_sites, double g, double gamma) {
    if (n_sites < 2 || n_sites % 2 != 0)
        throw SpecError("bcs_vector: N must be even and >= 2");
    if (n_sites > 14) throw ResourceError("bcs_vector: N > 14 is beyond the dense budget");

    const auto sol = xy::bogoliubov_solve(xy::XyParams{n_sites, g, gamma});
    const FermionOps f = jw_fermion_ops(n_sites);
    const Eigen::Index dim = f.dim();

    Vector psi = Vector::Zero(dim);
    psi(dim - 1) = 1.0; // vacuum = all spins down

    const Complex i_unit(0.0, 1.0);
    for (Eigen::Index ik = 0; ik < sol.ks.size(); ++ik) {
        const double k = sol.ks(ik);
        if (k <= 0) continue;
        // c~_q^dag = (1/sqrt N) sum_j e^{-i q j} c_j^dag, sites are 1-based
        Vector after_minus_k = Vector::Zero(dim);
        for (int j = 1; j <= n_sites; ++j)
            after_minus_k += std::exp(Complex(0.0, k * j)) * apply_cdag(f, j, psi);
        after_minus_k /= std::sqrt(double(n_sites));
        Vector pair_created = Vector::Zero(dim);
        for (int j = 1; j <= n_sites; ++j)
            pair_created += std::exp(Complex(0.0, -k * j)) * apply_cdag(f, j, after_minus_k);
        pair_created /= std::sqrt(double(n_sites));
        psi = sol.u(ik) * psi + i_unit * sol.v(ik) * pair_created;
    }

    const double norm = psi.norm();
    if (std::abs(norm - 1.0) > 1e-10)
        throw std::logic_error("bcs_vector: mode-pair product lost normalization");
    psi /= norm;
    return StateVector(std::move(psi), BasisTag::fermions(n_sites));
}

} // namespace liepurity
