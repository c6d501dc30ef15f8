#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "steklov/classify.hpp"
#include "steklov/tree.hpp"

namespace steklov {

/// Trees within 1e-9 relative of the best lambda_2 among all trees of order n
/// and diameter D, sorted by canonical code.
struct BruteForceResult {
    std::size_t trees_enumerated = 0;
    std::vector<Tree> winners;
    std::vector<std::string> codes;
    double lambda2 = 0.0;
    /// Relative gap from the best value to the best value outside the winner
    /// set; absent when every tree is a winner.
    std::optional<double> runner_up_gap;
};

/// Evaluation is sharded over `jobs` threads; the merged result does not
/// depend on `jobs`.
BruteForceResult brute_force_extremizers(int n, int D, int jobs = 1);

enum class Verdict { Match, Mismatch, TieUnresolved };
const char* to_string(Verdict v);

struct VerificationReport {
    int n = 0;
    int D = 0;
    std::size_t trees_enumerated = 0;
    std::vector<std::string> argmax_codes;
    std::vector<std::string> argmax_shapes;
    double argmax_lambda2 = 0.0;
    std::vector<std::string> classifier_codes;
    std::vector<std::string> classifier_shapes;
    std::string case_tag;
    bool winners_are_spiders = false;
    Verdict verdict = Verdict::Mismatch;
    double wall_time = 0.0;  // seconds
};

/// Brute-force argmax versus the classifier's winner set for odd D >= 3.
VerificationReport verify_classification(int n, int D, int jobs = 1);

struct UnimodalityReport {
    ProfileSweep sweep;
    bool pass = false;
    std::string detail;  // empty on pass
};

/// The integer sequence q -> Sigma_{r,M}(q) rises to its peak and falls after
/// it (steps within 1e-12 count as flat), and the peak sits at q- or q+.
UnimodalityReport verify_unimodality(int r, int M);

struct DominationReport {
    int n = 0;
    int D = 0;
    std::size_t trees = 0;
    double worst_margin = 0.0;  // max over trees of lambda2(t) - lambda2(dominating profile)
    std::size_t equality_cases = 0;
    std::size_t equality_not_double_spider = 0;
    bool pass = false;
};

DominationReport verify_domination(int n, int D, int jobs = 1);

struct CrossMethodReport {
    double matrix = 0.0;
    double distance = 0.0;
    std::optional<double> spider_root;
    std::optional<double> double_spider_root;
    double max_relative_gap = 0.0;
    bool pass = false;
};

/// Compares the Schur-complement, distance-matrix, and (when the shape allows)
/// scalar-equation values of lambda_2 at 1e-10 relative.
CrossMethodReport verify_cross_methods(const Tree& t);

/// Default worker count: STEKLOV_JOBS when set and positive, else 1.
int default_jobs();

}  // namespace steklov
