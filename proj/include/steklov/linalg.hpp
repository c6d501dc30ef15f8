#pragma once

#include <Eigen/Dense>

namespace steklov {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations, sorted
/// ascending. Iterates until the off-diagonal Frobenius norm drops below
/// `tolerance * max(1, ||A||_F)`; throws ConvergenceError after `max_sweeps`.
Vector symmetric_eigenvalues(Matrix a, double tolerance = 1e-13, int max_sweeps = 64);

/// Largest eigenvalue, same method.
double largest_eigenvalue(const Matrix& a);

}  // namespace steklov
