#pragma once

#include "liepurity/core.hpp"

#include <random>

namespace liepurity::testutil {

inline Vector random_state_vec(std::mt19937& rng, Eigen::Index dim) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    v /= v.norm();
    return v;
}

inline StateVector random_qubit_state(std::mt19937& rng, int n) {
    return StateVector(random_state_vec(rng, Eigen::Index(1) << n), BasisTag::qubits(n));
}

inline std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> out;
    out.reserve(std::size_t(n));
    for (int i = 0; i < n; ++i)
        out.push_back(lo * std::pow(hi / lo, double(i) / double(n - 1)));
    return out;
}

} // namespace liepurity::testutil
