#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "steklov/tree.hpp"

namespace steklov {

/// Two-center profile of the same order and odd diameter 2r+1 whose lambda_2
/// is at least that of `t`.
///
/// The tree is cut at its central edge uv (middle edge of the lexicographically
/// first diameter path; u is the endpoint nearer that path's start). Every edge
/// of each half is charged to one leaf below it: the geodesic from the center
/// to the lexicographically first deepest leaf goes to that leaf, every other
/// edge to the lexicographically first deepest leaf of its lower subtree. Branch
/// lengths are the per-leaf edge counts. Throws DomainError for even diameter.
DoubleSpiderProfile dominating_double_spider(const Tree& t);

/// Moves branch `k` (1-based, k >= 2, in the donor side's sorted order) across
/// the central edge of an odd-diameter double spider. The receiving side is the
/// one with the larger side sum at rho = 1/lambda_2 (the b side donates on a
/// tie), so `k` always refers to the side with the smaller sum. Throws when the
/// donor side has a single branch, when the move would be an isomorphism, or
/// if lambda_2 fails to increase by more than 1e-10.
DoubleSpiderProfile arm_transfer(const DoubleSpiderProfile& p, std::size_t k);

/// (l1, l2) -> (l1 - 1, l2 + 1) for a spider with l1 >= l2 + 2, l1 + l2 odd,
/// and at least three branches.
SpiderProfile balance_main_step(const SpiderProfile& p);

/// Replaces the lateral pair (u, v), u >= v + 2, by (u - 1, v + 1) in a spider
/// with principal branches (r+1, r). Indices address p.lengths() and must both
/// be >= 2. The single-argument form uses the longest and shortest laterals.
SpiderProfile balance_side_step(const SpiderProfile& p, std::size_t u_index, std::size_t v_index);
SpiderProfile balance_side_step(const SpiderProfile& p);

struct AscentStep {
    std::string move;   // "start", "dominate", "arm_transfer", "balance_main", "balance_side"
    std::string shape;  // shorthand of the tree after the move
    double lambda2 = 0.0;
};

struct AscentTrace {
    std::vector<AscentStep> steps;
    Tree result;
};

/// Chains domination, arm transfers, and the two balancing moves until none
/// applies. Spiders skip straight to balancing. The result is an AS tree of
/// the same order and diameter; lambda_2 never decreases along the trace.
AscentTrace greedy_ascent(const Tree& t);

}  // namespace steklov
