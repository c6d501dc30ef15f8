#pragma once

#include <vector>

#include "steklov/linalg.hpp"
#include "steklov/tree.hpp"

namespace steklov {

/// Steklov eigenvalues with leaf boundary, ascending; the first entry is 0.
struct Spectrum {
    std::vector<double> eigenvalues;
};

/// Combinatorial Laplacian (D - A) as a dense n x n matrix.
Matrix laplacian(const Tree& t);

/// Extends leaf values `g` (indexed in leaf_set order) to the function that is
/// harmonic at every interior vertex. Returns values for all n vertices.
Vector harmonic_extension(const Tree& t, const Vector& g);

/// Dirichlet-to-Neumann matrix: the Schur complement of the Laplacian onto
/// the leaves, L_BB - L_BI L_II^{-1} L_IB. The interior block is factored by
/// Cholesky; it is positive definite because every interior component of a
/// tree touches the boundary.
Matrix dtn_matrix(const Tree& t);

/// Eigenvalues of the DtN matrix. A first eigenvalue within 1e-10 of 0 is
/// snapped to exactly 0.
Spectrum steklov_spectrum(const Tree& t);

double lambda2_numeric(const Tree& t);

}  // namespace steklov
