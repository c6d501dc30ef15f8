#include "steklov/flux.hpp"

#include <cmath>
#include <queue>
#include <string>

#include "steklov/error.hpp"
#include "steklov/spectral.hpp"

namespace steklov {

namespace {

Vector expand_to_vertices(const Tree& t, const Vector& z) {
    const auto leaves = leaf_set(t);
    if (z.size() != static_cast<Eigen::Index>(leaves.size()))
        throw DomainError("flux has " + std::to_string(z.size()) + " entries, tree has " +
                          std::to_string(leaves.size()) + " leaves");
    Vector full = Vector::Zero(t.order());
    for (std::size_t i = 0; i < leaves.size(); ++i) full(leaves[i]) = z(static_cast<Eigen::Index>(i));
    return full;
}

}  // namespace

void require_mean_zero(const Vector& z) {
    const double scale = z.size() ? z.cwiseAbs().maxCoeff() : 0.0;
    if (std::abs(z.sum()) > 1e-12 * scale)
        throw DomainError("boundary flux must sum to zero (sum = " + std::to_string(z.sum()) + ")");
}

Vector flux_potential(const Tree& t, const Vector& z) {
    require_mean_zero(z);
    const Vector rhs = expand_to_vertices(t, z);
    // L + J/n is positive definite; on mean-zero data its solution satisfies
    // L u = rhs with sum(u) = 0.
    const double n = t.order();
    Matrix system = laplacian(t);
    system.array() += 1.0 / n;
    return system.llt().solve(rhs);
}

CutDecomposition cut_sums(const Tree& t, const Vector& z, Vertex root) {
    require_mean_zero(z);
    if (root < 0 || root >= t.order()) throw DomainError("cut_sums: root out of range");
    const Vector leaf_flux = expand_to_vertices(t, z);

    std::vector<Vertex> order;
    std::vector<Vertex> parent(static_cast<std::size_t>(t.order()), -1);
    std::queue<Vertex> frontier;
    frontier.push(root);
    parent[static_cast<std::size_t>(root)] = root;
    while (!frontier.empty()) {
        Vertex x = frontier.front();
        frontier.pop();
        order.push_back(x);
        for (Vertex y : t.neighbors(x)) {
            if (parent[static_cast<std::size_t>(y)] < 0) {
                parent[static_cast<std::size_t>(y)] = x;
                frontier.push(y);
            }
        }
    }

    // Subtree flux, accumulated bottom-up.
    Vector below = leaf_flux;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex x = *it;
        if (x != root) below(parent[static_cast<std::size_t>(x)]) += below(x);
    }

    CutDecomposition cut;
    for (Vertex x : order) {
        if (x == root) continue;
        const double s = below(x);
        cut.per_edge.push_back({parent[static_cast<std::size_t>(x)], x, s});
        cut.total += s * s;
    }
    return cut;
}

double q_form(const Tree& t, const Vector& z) {
    const Vector u = flux_potential(t, z);
    double total = 0.0;
    for (const auto& e : t.edges()) {
        const double drop = u(e.u) - u(e.v);
        total += drop * drop;
    }
    return total;
}

Eigen::MatrixXi leaf_distance_matrix(const Tree& t) {
    const auto leaves = leaf_set(t);
    const auto m = static_cast<Eigen::Index>(leaves.size());
    Eigen::MatrixXi dist(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const auto d = distances_from(t, leaves[static_cast<std::size_t>(i)]);
        for (Eigen::Index j = 0; j < m; ++j) dist(i, j) = d[static_cast<std::size_t>(leaves[static_cast<std::size_t>(j)])];
    }
    return dist;
}

double distance_form(const Tree& t, const Vector& z) {
    require_mean_zero(z);
    const Matrix dist = leaf_distance_matrix(t).cast<double>();
    if (z.size() != dist.rows()) throw DomainError("distance_form: flux length does not match leaf count");
    return -0.5 * z.dot(dist * z);
}

double lambda2_via_distance(const Tree& t) {
    const Matrix dist = leaf_distance_matrix(t).cast<double>();
    const auto m = dist.rows();
    const Matrix centering = Matrix::Identity(m, m) - Matrix::Constant(m, m, 1.0 / static_cast<double>(m));
    const Matrix form = -0.5 * centering * dist * centering;
    return 1.0 / largest_eigenvalue(0.5 * (form + form.transpose()));
}

}  // namespace steklov
