#include "lapack_eig.hpp"

#include <lapacke.h>
#include <stdexcept>
#include <vector>

namespace liepurity::lapack {

namespace {
void require(lapack_int info, const char* who) {
    if (info != 0) throw std::runtime_error(std::string(who) + ": LAPACK info != 0");
}
} // namespace

LowestPair syevr_lowest(Eigen::MatrixXd a) {
    const lapack_int n = lapack_int(a.rows());
    LowestPair out;
    out.vector.resize(n);
    std::vector<double> w(static_cast<std::size_t>(n), 0.0);
    lapack_int m = 0;
    std::vector<lapack_int> isuppz(2);
    require(LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'V', 'I', 'L', n, a.data(), n, 0.0, 0.0, 1, 1,
                           0.0, &m, w.data(), out.vector.data(), n, isuppz.data()),
            "syevr_lowest");
    out.value = w[0];
    return out;
}

Eigen::VectorXd syevr_lowest_values(Eigen::MatrixXd a, int k) {
    const lapack_int n = lapack_int(a.rows());
    std::vector<double> w(static_cast<std::size_t>(n), 0.0);
    lapack_int m = 0;
    std::vector<lapack_int> isuppz(static_cast<std::size_t>(2 * std::max(1, k)), 0);
    require(LAPACKE_dsyevr(LAPACK_COL_MAJOR, 'N', 'I', 'L', n, a.data(), n, 0.0, 0.0, 1,
                           lapack_int(k), 0.0, &m, w.data(), nullptr, n, isuppz.data()),
            "syevr_lowest_values");
    Eigen::VectorXd out(k);
    for (int i = 0; i < k; ++i) out(i) = w[std::size_t(i)];
    return out;
}

Eigen::VectorXd stevr_values(Eigen::VectorXd diag, Eigen::VectorXd sub) {
    const lapack_int n = lapack_int(diag.size());
    Eigen::VectorXd w(n);
    lapack_int m = 0;
    std::vector<lapack_int> isuppz(static_cast<std::size_t>(2 * std::max<lapack_int>(1, n)), 0);
    require(LAPACKE_dstevr(LAPACK_COL_MAJOR, 'N', 'A', n, diag.data(), sub.data(), 0.0, 0.0, 0, 0,
                           0.0, &m, w.data(), nullptr, n, isuppz.data()),
            "stevr_values");
    return w;
}

LowestPair stevr_lowest(Eigen::VectorXd diag, Eigen::VectorXd sub) {
    const lapack_int n = lapack_int(diag.size());
    LowestPair out;
    out.vector.resize(n);
    Eigen::VectorXd w(n);
    lapack_int m = 0;
    std::vector<lapack_int> isuppz(2);
    require(LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', n, diag.data(), sub.data(), 0.0, 0.0, 1, 1,
                           0.0, &m, w.data(), out.vector.data(), n, isuppz.data()),
            "stevr_lowest");
    out.value = w(0);
    return out;
}

} // namespace liepurity::lapack
