#pragma once

// Test-only helpers: random trees and an enumeration oracle that shares no
// code with the level-sequence generator.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "steklov/linalg.hpp"
#include "steklov/tree.hpp"

namespace steklov::testing {

/// Decodes a Pruefer sequence over {0..n-1} (length n-2) into a labelled tree.
inline Tree prufer_decode(int n, const std::vector<int>& seq) {
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : seq) ++degree[static_cast<std::size_t>(x)];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    std::vector<Edge> edges;
    for (int x : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back({leaf, x});
        if (--degree[static_cast<std::size_t>(x)] == 1) leaves.insert(x);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.push_back({a, b});
    return Tree(n, std::move(edges));
}

/// Canonical codes of all unlabelled trees of order n via every Pruefer sequence.
inline std::set<std::string> prufer_classes(int n) {
    std::set<std::string> codes;
    if (n == 2) {
        codes.insert(canonical_code(Tree::path(1)));
        return codes;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    while (true) {
        codes.insert(canonical_code(prufer_decode(n, seq)));
        std::size_t i = 0;
        while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
        if (i == seq.size()) break;
    }
    return codes;
}

/// Canonical codes of all trees of order n by attaching a leaf to every vertex
/// of every tree of order n-1 (closure from the single edge).
inline std::set<std::string> leaf_growth_classes(int n) {
    std::vector<Tree> layer{Tree::path(1)};
    for (int m = 3; m <= n; ++m) {
        std::set<std::string> seen;
        std::vector<Tree> next;
        for (const auto& t : layer) {
            for (Vertex v = 0; v < t.order(); ++v) {
                std::vector<Edge> edges(t.edges().begin(), t.edges().end());
                edges.push_back({v, t.order()});
                Tree grown(t.order() + 1, std::move(edges));
                if (seen.insert(canonical_code(grown)).second) next.push_back(std::move(grown));
            }
        }
        layer = std::move(next);
    }
    std::set<std::string> codes;
    for (const auto& t : layer) codes.insert(canonical_code(t));
    return codes;
}

inline Tree random_tree(int n, std::mt19937_64& rng) {
    if (n == 2) return Tree::path(1);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (auto& x : seq) x = pick(rng);
    return prufer_decode(n, seq);
}

/// Same tree with vertex labels permuted.
inline Tree relabel(const Tree& t, const std::vector<int>& perm) {
    std::vector<Edge> edges;
    for (const auto& e : t.edges()) edges.push_back({perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]});
    std::reverse(edges.begin(), edges.end());
    return Tree(t.order(), std::move(edges));
}

/// Random mean-zero vector of length m with entries in [-1, 1].
inline Vector random_mean_zero(Eigen::Index m, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vector z(m);
    for (Eigen::Index i = 0; i < m; ++i) z(i) = u(rng);
    z.array() -= z.mean();
    return z;
}

inline double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace steklov::testing
