#pragma once

#include <Eigen/Dense>

// Thin LAPACKE shims for the eigensolves the models need: lowest eigenpair of a
// dense symmetric matrix, and full spectrum / ground pair of a symmetric
// tridiagonal matrix. All deterministic for fixed inputs.
namespace liepurity::lapack {

struct LowestPair {
    double value = 0.0;
    Eigen::VectorXd vector;
};

/// Lowest eigenpair of a dense real symmetric matrix (contents destroyed).
LowestPair syevr_lowest(Eigen::MatrixXd a);

/// The k smallest eigenvalues of a dense real symmetric matrix.
Eigen::VectorXd syevr_lowest_values(Eigen::MatrixXd a, int k);

/// All eigenvalues, ascending, of a symmetric tridiagonal matrix.
Eigen::VectorXd stevr_values(Eigen::VectorXd diag, Eigen::VectorXd sub);

/// Lowest eigenpair of a symmetric tridiagonal matrix.
LowestPair stevr_lowest(Eigen::VectorXd diag, Eigen::VectorXd sub);

} // namespace liepurity::lapack
