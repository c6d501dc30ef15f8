#include <cmath>
#include <random>

#include "doctest.h"
#include "steklov/error.hpp"
#include "steklov/linalg.hpp"
#include "steklov/spectral.hpp"
#include "steklov/tree.hpp"
#include "support.hpp"

using namespace steklov;
using doctest::Approx;

namespace {

Tree star(int leaves) {
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return Tree(leaves + 1, edges);
}

Vector vec(std::initializer_list<double> xs) {
    Vector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) v(i++) = x;
    return v;
}

}  // namespace

TEST_CASE("jacobi eigenvalues") {
    Matrix a(3, 3);
    a << 2, -1, 0, -1, 2, -1, 0, -1, 2;
    auto ev = symmetric_eigenvalues(a);
    REQUIRE(ev.size() == 3);
    CHECK(ev[0] == Approx(2 - std::sqrt(2.0)).epsilon(1e-14));
    CHECK(ev[1] == Approx(2.0).epsilon(1e-14));
    CHECK(ev[2] == Approx(2 + std::sqrt(2.0)).epsilon(1e-14));
    CHECK(largest_eigenvalue(a) == Approx(2 + std::sqrt(2.0)).epsilon(1e-14));

    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 20; ++trial) {
        const int m = 2 + trial;
        Matrix b(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j <= i; ++j) b(i, j) = b(j, i) = g(rng);
        auto mine = symmetric_eigenvalues(b);
        Eigen::SelfAdjointEigenSolver<Matrix> ref(b, Eigen::EigenvaluesOnly);
        for (int i = 0; i < m; ++i) CHECK(std::abs(mine(i) - ref.eigenvalues()(i)) < 1e-11);
    }
}

TEST_CASE("harmonic_extension") {
    SUBCASE("path interpolates linearly") {
        Vector f = harmonic_extension(Tree::path(3), vec({1, -1}));
        CHECK(f(0) == Approx(1.0));
        CHECK(f(1) == Approx(1.0 / 3));
        CHECK(f(2) == Approx(-1.0 / 3));
        CHECK(f(3) == Approx(-1.0));
    }
    SUBCASE("star center is the mean") {
        Vector f = harmonic_extension(star(3), vec({1, 0, -1}));
        CHECK(std::abs(f(0)) < 1e-15);
        CHECK(f(1) == 1.0);
        CHECK(f(3) == -1.0);
    }
    SUBCASE("two-branch spider") {
        Tree t = make_spider(SpiderProfile({2, 1}));
        // center 0, branch 0-1-2, branch 0-3; leaves ascending are 2 (depth 2) and 3 (depth 1)
        Vector f = harmonic_extension(t, vec({1, -1}));
        CHECK(f(2) == Approx(1.0));
        CHECK(f(1) == Approx(1.0 / 3));
        CHECK(f(0) == Approx(-1.0 / 3));
        CHECK(f(3) == Approx(-1.0));
    }
    SUBCASE("empty interior") {
        Vector f = harmonic_extension(Tree::path(1), vec({2, 5}));
        CHECK(f(0) == 2.0);
        CHECK(f(1) == 5.0);
    }
    SUBCASE("residual vanishes on interior vertices") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 50; ++trial) {
            Tree t = testing::random_tree(3 + trial % 15, rng);
            const auto leaves = leaf_set(t);
            Vector g = testing::random_mean_zero(static_cast<Eigen::Index>(leaves.size()), rng);
            Vector f = harmonic_extension(t, g);
            Vector lap = laplacian(t) * f;
            for (Vertex v = 0; v < t.order(); ++v)
                if (!t.is_leaf(v)) CHECK(std::abs(lap(v)) <= 1e-12 * g.cwiseAbs().maxCoeff());
            for (std::size_t i = 0; i < leaves.size(); ++i)
                CHECK(f(leaves[i]) == g(static_cast<Eigen::Index>(i)));
        }
    }
    CHECK_THROWS_AS(harmonic_extension(Tree::path(3), vec({1, 2, 3})), DomainError);
}

TEST_CASE("dtn_matrix") {
    Matrix p = dtn_matrix(Tree::path(3));
    CHECK(p(0, 0) == Approx(1.0 / 3));
    CHECK(p(0, 1) == Approx(-1.0 / 3));
    CHECK(p(1, 1) == Approx(1.0 / 3));

    Matrix e = dtn_matrix(Tree::path(1));
    CHECK(e(0, 0) == 1.0);
    CHECK(e(0, 1) == -1.0);

    Matrix s = dtn_matrix(star(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(s(i, j) == Approx(i == j ? 2.0 / 3 : -1.0 / 3));
}

TEST_CASE("steklov_spectrum") {
    for (int D = 1; D <= 10; ++D) {
        Spectrum sp = steklov_spectrum(Tree::path(D));
        REQUIRE(sp.eigenvalues.size() == 2);
        CHECK(sp.eigenvalues[0] == 0.0);
        CHECK(sp.eigenvalues[1] == Approx(2.0 / D).epsilon(1e-13));
    }
    Spectrum st = steklov_spectrum(star(3));
    REQUIRE(st.eigenvalues.size() == 3);
    CHECK(st.eigenvalues[0] == 0.0);
    CHECK(st.eigenvalues[1] == Approx(1.0).epsilon(1e-13));
    CHECK(st.eigenvalues[2] == Approx(1.0).epsilon(1e-13));

    const double exact = (6 - std::sqrt(3.0)) / 11;
    CHECK(std::abs(lambda2_numeric(make_spider(SpiderProfile({3, 2, 1}))) - exact) < 1e-12);
}

TEST_CASE("lambda2_numeric") {
    CHECK(lambda2_numeric(Tree::path(5)) == Approx(0.4).epsilon(1e-13));
    CHECK(lambda2_numeric(make_spider(SpiderProfile({2, 1, 1}))) == Approx(0.6).epsilon(1e-13));
    CHECK(lambda2_numeric(make_double_spider(DoubleSpiderProfile({3, 1}, {3, 1}))) ==
          Approx(2 / (5 + std::sqrt(5.0))).epsilon(1e-13));
}

TEST_CASE("dtn properties on random trees") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 120; ++trial) {
        Tree t = testing::random_tree(2 + trial % 30, rng);
        Matrix L = dtn_matrix(t);
        CHECK((L - L.transpose()).cwiseAbs().maxCoeff() == 0.0);
        CHECK(L.rowwise().sum().cwiseAbs().maxCoeff() <= 1e-12);
        CHECK(symmetric_eigenvalues(L)(0) >= -1e-10);

        // Green identity: Dirichlet energy of the extension equals g^T L g.
        Vector g = testing::random_mean_zero(L.rows(), rng);
        Vector f = harmonic_extension(t, g);
        double energy = 0;
        for (const auto& e : t.edges()) energy += (f(e.u) - f(e.v)) * (f(e.u) - f(e.v));
        CHECK(testing::rel_diff(energy, g.dot(L * g)) <= 1e-10);
    }
}

TEST_CASE("upper bound 2/D over all trees up to order 12") {
    // Order 13 and 14 run in the acceptance binary.
    for (int n = 2; n <= 12; ++n)
        for (const auto& t : enumerate_trees(n)) CHECK(lambda2_numeric(t) <= 2.0 / diameter(t) + 1e-9);
}
