#include "steklov/classify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "steklov/error.hpp"

namespace steklov {

namespace {

void check_odd_case(int n, int D) {
    if (D % 2 == 0)
        throw DomainError("diameter " + std::to_string(D) +
                          " is even; only odd diameters are classified here (the even case is due to Lin and Zhao)");
    if (D < 3) throw DomainError("diameter must be at least 3");
    if (n < D + 1) throw DomainError("order " + std::to_string(n) + " is below D + 1 = " + std::to_string(D + 1));
}

Candidate as_candidate(std::string label, const ASParams& p) {
    const SpiderProfile profile = p.profile();
    return Candidate{std::move(label), p, p.q, make_spider(profile), spider_lambda2(profile).value};
}

}  // namespace

const char* to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::Path: return "path";
        case CaseTag::SingleSmall: return "single_small";
        case CaseTag::Divisible: return "divisible";
        case CaseTag::ThresholdA: return "threshold_A";
        case CaseTag::ThresholdB: return "threshold_B";
        case CaseTag::ThresholdCompare: return "threshold_compare";
        case CaseTag::InitialOrders: return "initial_orders";
    }
    return "?";
}

CandidateProfiles candidate_profiles(int n, int D) {
    check_odd_case(n, D);
    const int r = (D - 1) / 2;
    const int M = n - 2 * r - 2;
    if (M == 0) return PathOnly{D};

    CandidatePair pair;
    pair.r = r;
    pair.M = M;
    pair.s = (r + 1) / 2;
    pair.q_minus = std::max(1, M / pair.s);
    pair.q_plus = (M + pair.s - 1) / pair.s;
    pair.as_minus = as_params_for(r, M, pair.q_minus);
    pair.as_plus = as_params_for(r, M, pair.q_plus);
    return pair;
}

ClassificationResult classify(int n, int D) {
    const CandidateProfiles profiles = candidate_profiles(n, D);

    ClassificationResult res;
    res.n = n;
    res.D = D;
    res.r = (D - 1) / 2;
    res.s = (res.r + 1) / 2;
    res.M = n - 2 * res.r - 2;

    if (std::holds_alternative<PathOnly>(profiles)) {
        res.case_tag = CaseTag::Path;
        const DoubleSpiderProfile halves({res.r}, {res.r});
        res.candidates.push_back(
            Candidate{"path", std::nullopt, 0, Tree::path(D), 1.0 / double_spider_rho(halves).value});
        res.winners = {0};
        return res;
    }

    const auto& pair = std::get<CandidatePair>(profiles);
    const int M = res.M, s = res.s;

    if (pair.coincide()) {
        res.case_tag = M < s ? CaseTag::SingleSmall : CaseTag::Divisible;
        res.candidates.push_back(as_candidate("q", pair.as_minus));
        res.winners = {0};
        return res;
    }

    const int k = M / s;
    const int t = M % s;
    res.k = k;
    res.t = t;

    if (k >= s) {
        // Large-order regime: the pair is A_{k,t} = AS(r,k+2,s,t), B_{k,t} = AS(r,k+3,s-1,k+t-s+1).
        const ASParams a{res.r, k, s, t};
        const ASParams b{res.r, k + 1, s - 1, k + t - s + 1};
        if (!(a == pair.as_minus) || !(b == pair.as_plus))
            throw std::logic_error("threshold candidates disagree with the q-/q+ split");
        res.candidates.push_back(as_candidate("A", a));
        res.candidates.push_back(as_candidate("B", b));
        res.threshold = threshold_data(res.r, t);
        switch (res.threshold->regime) {
            case Regime::AAlways: res.case_tag = CaseTag::ThresholdA; break;
            case Regime::BAlways: res.case_tag = CaseTag::ThresholdB; break;
            case Regime::Threshold: res.case_tag = CaseTag::ThresholdCompare; break;
        }
    } else {
        res.case_tag = CaseTag::InitialOrders;
        res.candidates.push_back(as_candidate("q-", pair.as_minus));
        res.candidates.push_back(as_candidate("q+", pair.as_plus));
    }

    const double first = res.candidates[0].lambda2;
    const double second = res.candidates[1].lambda2;
    if (numerically_tied(first, second)) {
        res.tie_flag = true;
        res.winners = {0, 1};
    } else {
        res.winners = {first > second ? std::size_t{0} : std::size_t{1}};
    }

    // In the threshold regimes the predicted winner must agree with the direct
    // root comparison unless the two roots are numerically tied.
    if (res.threshold && !res.tie_flag) {
        std::optional<std::size_t> predicted;
        switch (res.threshold->regime) {
            case Regime::AAlways: predicted = 0; break;
            case Regime::BAlways: predicted = 1; break;
            case Regime::Threshold: {
                const double kappa = *res.threshold->kappa;
                if (std::abs(k - kappa) > 1e-9 * std::max(1.0, std::abs(kappa))) predicted = k > kappa ? 0 : 1;
                break;
            }
        }
        if (predicted && *predicted != res.winners.front())
            throw std::logic_error("threshold prediction disagrees with direct root comparison at n = " +
                                   std::to_string(n) + ", D = " + std::to_string(D));
    }
    return res;
}

ProfileSweep compare_candidates(int r, int M) {
    if (r < 1 || M < 1) throw DomainError("compare_candidates needs r >= 1 and M >= 1");
    ProfileSweep sweep;
    sweep.r = r;
    sweep.M = M;
    sweep.s = (r + 1) / 2;
    sweep.q_minus = std::max(1, M / sweep.s);
    sweep.q_plus = (M + sweep.s - 1) / sweep.s;

    const auto [qmin, qmax] = feasible_q_range(r, M);
    for (int q = qmin; q <= qmax; ++q) {
        sweep.rows.push_back({q, as_params_for(r, M, q), sigma_rM(r, M, static_cast<double>(q)).value});
    }

    auto best = std::max_element(sweep.rows.begin(), sweep.rows.end(),
                                 [](const SweepRow& x, const SweepRow& y) { return x.sigma < y.sigma; });
    sweep.argmax_q = best->q;
    const double top = best->sigma;

    int near_top = 0;
    for (const auto& row : sweep.rows) {
        if (!numerically_tied(row.sigma, top)) continue;
        ++near_top;
        if (row.q == sweep.q_minus || row.q == sweep.q_plus) sweep.peak_at_candidate = true;
    }
    sweep.tie_flag = near_top > 1;
    return sweep;
}

}  // namespace steklov
