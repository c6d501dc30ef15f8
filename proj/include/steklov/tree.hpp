#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace steklov {

using Vertex = int;

struct Edge {
    Vertex u;
    Vertex v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// A finite unweighted tree on vertices {0, ..., n-1}.
///
/// The constructor validates the edge list: exactly n-1 edges, no self-loops,
/// no repeated edges, connected. Adjacency lists are kept sorted so every
/// traversal is deterministic.
class Tree {
public:
    Tree(int n, std::vector<Edge> edges);

    /// Path with `length` edges, labelled 0-1-...-length.
    static Tree path(int length);

    int order() const { return n_; }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    bool is_leaf(Vertex v) const { return degree(v) == 1; }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

/// Branch lengths of a one-center tree, stored nonincreasing.
class SpiderProfile {
public:
    explicit SpiderProfile(std::vector<int> lengths);

    const std::vector<int>& lengths() const { return lengths_; }
    int branches() const { return static_cast<int>(lengths_.size()); }
    int total_length() const;
    int order() const { return 1 + total_length(); }
    int diameter() const { return lengths_[0] + lengths_[1]; }

    friend bool operator==(const SpiderProfile&, const SpiderProfile&) = default;

private:
    std::vector<int> lengths_;
};

/// Parameters of AS(r, q+2, c, t) = S(r+1, r, (c+1) x t, c x (q-t)).
struct ASParams {
    int r = 1;
    int q = 1;
    int c = 1;
    int t = 0;

    int branches() const { return q + 2; }
    int lateral_total() const { return q * c + t; }  // M
    int order() const { return 2 * r + 2 + lateral_total(); }
    int diameter() const { return 2 * r + 1; }

    /// Throws DomainError when the parameters do not describe an AS tree.
    void validate() const;
    SpiderProfile profile() const;

    friend bool operator==(const ASParams&, const ASParams&) = default;
};

/// Two adjacent centers u, v with pendant paths a (at u) and b (at v).
class DoubleSpiderProfile {
public:
    DoubleSpiderProfile(std::vector<int> a_lengths, std::vector<int> b_lengths);

    const std::vector<int>& a() const { return a_; }
    const std::vector<int>& b() const { return b_; }
    int total_length() const;
    int order() const { return 2 + total_length(); }
    /// True when a1 == b1 and every length is at most a1, the odd-diameter shape.
    bool balanced_principal() const;
    DoubleSpiderProfile swapped() const { return DoubleSpiderProfile(b_, a_); }

    friend bool operator==(const DoubleSpiderProfile&, const DoubleSpiderProfile&) = default;

private:
    std::vector<int> a_;
    std::vector<int> b_;
};

// Family constructors. Labelling: center(s) first (u = 0, v = 1 for double
// spiders), then each branch in profile order, walking outward from its center.
Tree make_spider(const SpiderProfile& profile);
Tree make_as_tree(const ASParams& params);
Tree make_double_spider(const DoubleSpiderProfile& profile);

/// Edge count of a longest path (double BFS sweep).
int diameter(const Tree& t);
/// Degree-1 vertices in ascending order.
std::vector<Vertex> leaf_set(const Tree& t);
/// The one or two center vertices, ascending.
std::vector<Vertex> centers(const Tree& t);
/// BFS distances from `source`.
std::vector<int> distances_from(const Tree& t, Vertex source);

/// AHU code rooted at the center (or the central edge). Equal iff isomorphic.
std::string canonical_code(const Tree& t);

/// Reports the branch profile when `t` has at most one vertex of degree >= 3.
/// Paths of diameter d >= 2 report (ceil(d/2), floor(d/2)); the single edge is
/// not a spider.
std::optional<SpiderProfile> recognize_spider(const Tree& t);

/// Reports a two-center profile when some edge uv has every other vertex of
/// degree <= 2. The u side is the endpoint with the lexicographically larger
/// sorted branch list, so recognition is deterministic.
std::optional<DoubleSpiderProfile> recognize_double_spider(const Tree& t);

/// Lazily enumerates one representative per isomorphism class of free trees
/// of a given order, optionally filtered by diameter. Uses the
/// Wright-Richmond-Odlyzko-McKay successor rule on canonical level sequences.
class TreeEnumerator {
public:
    TreeEnumerator(int n, std::optional<int> diameter_filter = std::nullopt);

    std::optional<Tree> next();

private:
    bool advance();
    Tree current_tree() const;

    int n_;
    std::optional<int> diameter_;
    std::vector<int> layout_;
    bool started_ = false;
    bool done_ = false;
};

/// All trees with order n and diameter d (empty when none exist).
std::vector<Tree> enumerate_trees(int n, int d);
/// All trees with order n, every diameter.
std::vector<Tree> enumerate_trees(int n);

// Text formats.
//   edge list: "n\nu v\n..." with 0-based ids
//   shorthand: "path:L", "spider:3,2,1", "ds:2,1/2", "as:r,q,c,t"
Tree parse_edge_list(std::string_view text);
std::string to_edge_list(const Tree& t);
Tree parse_tree(std::string_view shorthand);
std::string to_shorthand(const SpiderProfile& p);
std::string to_shorthand(const DoubleSpiderProfile& p);
std::string to_shorthand(const ASParams& p);
/// Best-effort shorthand: path, then spider, then double spider, else "tree:<n>".
std::string describe(const Tree& t);

}  // namespace steklov
