#include "steklov/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "steklov/error.hpp"

namespace steklov {

namespace {

double off_diagonal_norm(const Matrix& a) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (i != j) sum += a(i, j) * a(i, j);
    return std::sqrt(sum);
}

}  // namespace

Vector symmetric_eigenvalues(Matrix a, double tolerance, int max_sweeps) {
    const Eigen::Index n = a.rows();
    if (a.cols() != n) throw DomainError("symmetric_eigenvalues: matrix is not square");
    const double threshold = tolerance * std::max(1.0, a.norm());

    int sweep = 0;
    while (off_diagonal_norm(a) > threshold) {
        if (++sweep > max_sweeps)
            throw ConvergenceError("Jacobi eigensolver did not converge in " + std::to_string(max_sweeps) + " sweeps");
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                // Rotation angle zeroing a(p,q): t = tan(theta), smaller root.
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (Eigen::Index k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (Eigen::Index k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }

    Vector values = a.diagonal();
    std::sort(values.begin(), values.end());
    return values;
}

double largest_eigenvalue(const Matrix& a) {
    Vector values = symmetric_eigenvalues(a);
    return values(values.size() - 1);
}

}  // namespace steklov
