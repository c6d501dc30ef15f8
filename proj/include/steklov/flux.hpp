#pragma once

#include <vector>

#include "steklov/linalg.hpp"
#include "steklov/tree.hpp"

namespace steklov {

// Boundary fluxes are leaf-indexed vectors (leaf_set order) summing to zero.
// Inputs whose sum exceeds 1e-12 * max|z| are rejected, never projected.
void require_mean_zero(const Vector& z);

/// Potential u_z: harmonic at interior vertices, outward normal derivative z
/// at each leaf, normalized so that its values sum to zero.
Vector flux_potential(const Tree& t, const Vector& z);

struct CutEdge {
    Vertex parent;
    Vertex child;
    double flux;  // total flux of the leaves below `child`
};

struct CutDecomposition {
    std::vector<CutEdge> per_edge;  // in BFS order from the root
    double total = 0.0;             // sum of squared cut fluxes
};

CutDecomposition cut_sums(const Tree& t, const Vector& z, Vertex root);

/// Inverse boundary energy: sum over edges of the squared potential drop.
double q_form(const Tree& t, const Vector& z);

/// Pairwise graph distances between leaves (leaf_set order).
Eigen::MatrixXi leaf_distance_matrix(const Tree& t);

/// -1/2 z^T D z, the distance-matrix form of the inverse energy.
double distance_form(const Tree& t, const Vector& z);

/// 1 / largest eigenvalue of -1/2 P D P, P the centering projection.
double lambda2_via_distance(const Tree& t);

}  // namespace steklov
