#include "steklov/spectral.hpp"

#include <cmath>
#include <string>

#include "steklov/error.hpp"

namespace steklov {

namespace {

constexpr double kZeroSnap = 1e-10;

struct Blocks {
    std::vector<Vertex> boundary;
    std::vector<Vertex> interior;
    Matrix bb, bi, ii;
};

Blocks split_laplacian(const Tree& t) {
    Blocks blk;
    for (Vertex v = 0; v < t.order(); ++v) (t.is_leaf(v) ? blk.boundary : blk.interior).push_back(v);
    const Matrix lap = laplacian(t);
    const auto nb = static_cast<Eigen::Index>(blk.boundary.size());
    const auto ni = static_cast<Eigen::Index>(blk.interior.size());
    blk.bb.resize(nb, nb);
    blk.bi.resize(nb, ni);
    blk.ii.resize(ni, ni);
    for (Eigen::Index i = 0; i < nb; ++i) {
        for (Eigen::Index j = 0; j < nb; ++j) blk.bb(i, j) = lap(blk.boundary[i], blk.boundary[j]);
        for (Eigen::Index j = 0; j < ni; ++j) blk.bi(i, j) = lap(blk.boundary[i], blk.interior[j]);
    }
    for (Eigen::Index i = 0; i < ni; ++i)
        for (Eigen::Index j = 0; j < ni; ++j) blk.ii(i, j) = lap(blk.interior[i], blk.interior[j]);
    return blk;
}

Eigen::LLT<Matrix> factor_interior(const Matrix& ii) {
    Eigen::LLT<Matrix> llt(ii);
    if (llt.info() != Eigen::Success) throw ConvergenceError("interior Laplacian block is not positive definite");
    return llt;
}

}  // namespace

Matrix laplacian(const Tree& t) {
    Matrix lap = Matrix::Zero(t.order(), t.order());
    for (const auto& e : t.edges()) {
        lap(e.u, e.u) += 1.0;
        lap(e.v, e.v) += 1.0;
        lap(e.u, e.v) -= 1.0;
        lap(e.v, e.u) -= 1.0;
    }
    return lap;
}

Vector harmonic_extension(const Tree& t, const Vector& g) {
    Blocks blk = split_laplacian(t);
    if (g.size() != static_cast<Eigen::Index>(blk.boundary.size()))
        throw DomainError("harmonic_extension: expected " + std::to_string(blk.boundary.size()) +
                          " boundary values, got " + std::to_string(g.size()));
    Vector f(t.order());
    for (std::size_t i = 0; i < blk.boundary.size(); ++i) f(blk.boundary[i]) = g(static_cast<Eigen::Index>(i));
    if (blk.interior.empty()) return f;

    const Vector inner = factor_interior(blk.ii).solve(-blk.bi.transpose() * g);
    for (std::size_t i = 0; i < blk.interior.size(); ++i) f(blk.interior[i]) = inner(static_cast<Eigen::Index>(i));
    return f;
}

Matrix dtn_matrix(const Tree& t) {
    Blocks blk = split_laplacian(t);
    if (blk.interior.empty()) return blk.bb;
    const Matrix correction = blk.bi * factor_interior(blk.ii).solve(blk.bi.transpose());
    Matrix dtn = blk.bb - correction;
    // Symmetrize away rounding asymmetry from the triangular solves.
    return 0.5 * (dtn + dtn.transpose());
}

Spectrum steklov_spectrum(const Tree& t) {
    const Vector values = symmetric_eigenvalues(dtn_matrix(t));
    Spectrum spec;
    spec.eigenvalues.assign(values.begin(), values.end());
    if (std::abs(spec.eigenvalues.front()) <= kZeroSnap) spec.eigenvalues.front() = 0.0;
    return spec;
}

double lambda2_numeric(const Tree& t) { return steklov_spectrum(t).eigenvalues.at(1); }

}  // namespace steklov
