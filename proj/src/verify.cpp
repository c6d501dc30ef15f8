#include "steklov/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <numeric>
#include <thread>

#include "steklov/error.hpp"
#include "steklov/flux.hpp"
#include "steklov/reduce.hpp"
#include "steklov/roots.hpp"
#include "steklov/spectral.hpp"

namespace steklov {

namespace {

constexpr double kCrossTolerance = 1e-10;
constexpr double kDominationSlack = 1e-9;
constexpr double kFlatStep = 1e-12;

// Applies `f` to every tree, splitting the index range into `jobs` contiguous
// shards. Output order matches input order regardless of `jobs`.
template <class F>
auto parallel_map(const std::vector<Tree>& trees, int jobs, F f) {
    using R = decltype(f(trees.front()));
    std::vector<R> out(trees.size());
    const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1,
                                                        std::max<std::size_t>(trees.size(), 1));
    if (workers == 1) {
        for (std::size_t i = 0; i < trees.size(); ++i) out[i] = f(trees[i]);
        return out;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    const std::size_t chunk = (trees.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                const std::size_t end = std::min(trees.size(), (w + 1) * chunk);
                for (std::size_t i = w * chunk; i < end; ++i) out[i] = f(trees[i]);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace

int default_jobs() {
    if (const char* env = std::getenv("STEKLOV_JOBS")) {
        const int jobs = std::atoi(env);
        if (jobs > 0) return jobs;
    }
    return 1;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Match: return "match";
        case Verdict::Mismatch: return "mismatch";
        case Verdict::TieUnresolved: return "tie_unresolved";
    }
    return "?";
}

BruteForceResult brute_force_extremizers(int n, int D, int jobs) {
    if (D < 2 || n < D + 1) throw DomainError("brute force needs D >= 2 and n >= D + 1");
    const std::vector<Tree> trees = enumerate_trees(n, D);
    const std::vector<double> lambdas = parallel_map(trees, jobs, [](const Tree& t) { return lambda2_numeric(t); });

    BruteForceResult res;
    res.trees_enumerated = trees.size();
    if (trees.empty()) return res;
    res.lambda2 = *std::max_element(lambdas.begin(), lambdas.end());

    std::vector<std::pair<std::string, std::size_t>> keyed;
    std::optional<double> runner_up;
    for (std::size_t i = 0; i < trees.size(); ++i) {
        if (numerically_tied(lambdas[i], res.lambda2))
            keyed.emplace_back(canonical_code(trees[i]), i);
        else if (!runner_up || lambdas[i] > *runner_up)
            runner_up = lambdas[i];
    }
    std::sort(keyed.begin(), keyed.end());
    for (auto& [code, i] : keyed) {
        res.codes.push_back(code);
        res.winners.push_back(trees[i]);
    }
    if (runner_up) res.runner_up_gap = relative_gap(res.lambda2, *runner_up);
    return res;
}

VerificationReport verify_classification(int n, int D, int jobs) {
    const auto start = std::chrono::steady_clock::now();
    const ClassificationResult cls = classify(n, D);
    const BruteForceResult brute = brute_force_extremizers(n, D, jobs);

    VerificationReport rep;
    rep.n = n;
    rep.D = D;
    rep.trees_enumerated = brute.trees_enumerated;
    rep.argmax_codes = brute.codes;
    rep.argmax_lambda2 = brute.lambda2;
    rep.case_tag = to_string(cls.case_tag);
    for (const auto& t : brute.winners) rep.argmax_shapes.push_back(describe(t));

    std::vector<Tree> cls_trees;
    for (std::size_t w : cls.winners) cls_trees.push_back(cls.candidates[w].tree);
    std::vector<std::pair<std::string, std::string>> cls_keyed;
    for (const auto& t : cls_trees) cls_keyed.emplace_back(canonical_code(t), describe(t));
    std::sort(cls_keyed.begin(), cls_keyed.end());
    for (auto& [code, shape] : cls_keyed) {
        rep.classifier_codes.push_back(code);
        rep.classifier_shapes.push_back(shape);
    }

    rep.winners_are_spiders = std::all_of(brute.winners.begin(), brute.winners.end(), [](const Tree& t) {
        return recognize_spider(t).has_value();
    });

    if (rep.argmax_codes == rep.classifier_codes)
        rep.verdict = Verdict::Match;
    else if (brute.winners.size() > 1 || cls.tie_flag)
        rep.verdict = Verdict::TieUnresolved;
    else
        rep.verdict = Verdict::Mismatch;

    rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

UnimodalityReport verify_unimodality(int r, int M) {
    UnimodalityReport rep;
    rep.sweep = compare_candidates(r, M);
    const auto& rows = rep.sweep.rows;
    std::size_t peak = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].q == rep.sweep.argmax_q) peak = i;

    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        const double step = rows[i + 1].sigma - rows[i].sigma;
        const bool rising_part = i < peak;
        if ((rising_part && step < -kFlatStep) || (!rising_part && step > kFlatStep)) {
            rep.detail = "not unimodal between q = " + std::to_string(rows[i].q) + " and q = " +
                         std::to_string(rows[i + 1].q);
            return rep;
        }
    }
    if (!rep.sweep.peak_at_candidate) {
        rep.detail = "peak at q = " + std::to_string(rep.sweep.argmax_q) + " is neither q- = " +
                     std::to_string(rep.sweep.q_minus) + " nor q+ = " + std::to_string(rep.sweep.q_plus);
        return rep;
    }
    rep.pass = true;
    return rep;
}

DominationReport verify_domination(int n, int D, int jobs) {
    if (D % 2 == 0) throw DomainError("domination check needs odd diameter");
    const std::vector<Tree> trees = enumerate_trees(n, D);

    struct Row {
        double margin = 0.0;
        bool double_spider = false;
    };
    const auto rows = parallel_map(trees, jobs, [](const Tree& t) {
        const DoubleSpiderProfile dom = dominating_double_spider(t);
        const double dominated = 1.0 / double_spider_rho(dom).value;
        return Row{lambda2_numeric(t) - dominated, recognize_double_spider(t).has_value()};
    });

    DominationReport rep;
    rep.n = n;
    rep.D = D;
    rep.trees = trees.size();
    rep.worst_margin = -std::numeric_limits<double>::infinity();
    bool inequality_holds = true;
    for (const auto& row : rows) {
        rep.worst_margin = std::max(rep.worst_margin, row.margin);
        if (row.margin > kDominationSlack) inequality_holds = false;
        if (std::abs(row.margin) <= kDominationSlack) {
            ++rep.equality_cases;
            if (!row.double_spider) ++rep.equality_not_double_spider;
        }
    }
    rep.pass = inequality_holds && rep.equality_not_double_spider == 0;
    return rep;
}

CrossMethodReport verify_cross_methods(const Tree& t) {
    CrossMethodReport rep;
    rep.matrix = lambda2_numeric(t);
    rep.distance = lambda2_via_distance(t);
    if (auto s = recognize_spider(t); s && s->lengths()[0] > s->lengths()[1])
        rep.spider_root = spider_lambda2(*s).value;
    if (auto d = recognize_double_spider(t); d && d->balanced_principal())
        rep.double_spider_root = 1.0 / double_spider_rho(*d).value;

    std::vector<double> values{rep.matrix, rep.distance};
    if (rep.spider_root) values.push_back(*rep.spider_root);
    if (rep.double_spider_root) values.push_back(*rep.double_spider_root);
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            rep.max_relative_gap = std::max(rep.max_relative_gap, relative_gap(values[i], values[j]));
    rep.pass = rep.max_relative_gap <= kCrossTolerance;
    return rep;
}

}  // namespace steklov
