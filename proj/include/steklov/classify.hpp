#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "steklov/roots.hpp"
#include "steklov/tree.hpp"

namespace steklov {

/// M = 0: the path P_{D+1} is the only tree of order n and diameter D.
struct PathOnly {
    int D = 0;
};

/// The two generalized almost seesaw candidates for 1 <= M.
struct CandidatePair {
    int r = 0;
    int M = 0;
    int s = 0;  // ceil(r/2)
    int q_minus = 0;
    int q_plus = 0;
    ASParams as_minus;
    ASParams as_plus;

    bool coincide() const { return q_minus == q_plus; }
};

using CandidateProfiles = std::variant<PathOnly, CandidatePair>;

/// Order-by-order case of the odd-diameter classification.
enum class CaseTag { Path, SingleSmall, Divisible, ThresholdA, ThresholdB, ThresholdCompare, InitialOrders };

const char* to_string(CaseTag tag);

struct Candidate {
    std::string label;              // "path", "q-", "q+", "A", "B"
    std::optional<ASParams> params; // absent for the path
    int q = 0;
    Tree tree;
    double lambda2 = 0.0;
};

struct ClassificationResult {
    int n = 0;
    int D = 0;
    int r = 0;
    int s = 0;
    int M = 0;
    CaseTag case_tag = CaseTag::Path;
    std::vector<Candidate> candidates;
    std::vector<std::size_t> winners;  // indices into candidates
    bool tie_flag = false;
    // Set in the large-order threshold cases: M = k s + t.
    std::optional<int> k;
    std::optional<int> t;
    std::optional<ThresholdData> threshold;

    double best_lambda2() const { return candidates.at(winners.front()).lambda2; }
};

/// Throws DomainError for even D, D < 3, or n < D + 1.
CandidateProfiles candidate_profiles(int n, int D);

ClassificationResult classify(int n, int D);

struct SweepRow {
    int q = 0;
    ASParams params;
    double sigma = 0.0;
};

/// Sigma_{r,M} at every feasible integer q, with the maximizer located.
struct ProfileSweep {
    int r = 0;
    int M = 0;
    int s = 0;
    int q_minus = 0;
    int q_plus = 0;
    std::vector<SweepRow> rows;
    int argmax_q = 0;
    bool peak_at_candidate = false;  // argmax is q_minus or q_plus (or tied with one)
    bool tie_flag = false;           // best two values within 1e-9 relative
};

ProfileSweep compare_candidates(int r, int M);

}  // namespace steklov
