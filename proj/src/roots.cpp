#include "steklov/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "steklov/error.hpp"

namespace steklov {

namespace {

constexpr double kTieTolerance = 1e-9;

void check_monotone([[maybe_unused]] const std::function<double(double)>& f, [[maybe_unused]] double lo,
                    [[maybe_unused]] double hi) {
#ifndef NDEBUG
    if (!sampled_increasing(f, lo, hi)) throw std::logic_error("root function is not increasing on its bracket");
#endif
}

int lateral_block(int r, int M, double q) {
    int c;
    const double nearest = std::round(q);
    if (q == nearest)
        c = M / static_cast<int>(nearest);
    else
        c = static_cast<int>(std::floor(M / q));
    return std::clamp(c, 1, r);
}

void check_q_domain(int r, int M, double q) {
    if (r < 1 || M < 1) throw DomainError("Sigma_{r,M} needs r >= 1 and M >= 1");
    const auto [lo, hi] = continuous_q_range(r, M);
    if (q < lo * (1.0 - 1e-12) || q > hi * (1.0 + 1e-12))
        throw DomainError("q = " + std::to_string(q) + " outside [M/r, M] = [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
}

}  // namespace

RootResult bisect_increasing(const std::function<double(double)>& f, double lo, double hi, double width) {
    if (!(lo < hi)) throw DomainError("bisection bracket is empty");
    double f_lo = -std::numeric_limits<double>::infinity();
    double f_hi = std::numeric_limits<double>::infinity();
    while (hi - lo > width) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if (fm < 0.0) {
            lo = mid;
            f_lo = fm;
        } else if (fm > 0.0) {
            hi = mid;
            f_hi = fm;
        } else {
            // exact zero: report the tightest bracket around it
            return {mid, std::nextafter(mid, lo), std::nextafter(mid, hi), 0.0};
        }
    }
    double value = lo + 0.5 * (hi - lo);
    if (std::isfinite(f_lo) && std::isfinite(f_hi)) {
        const double secant = lo + (hi - lo) * (-f_lo / (f_hi - f_lo));
        if (secant > lo && secant < hi) value = secant;
    }
    return {value, lo, hi, f(value)};
}

bool sampled_increasing(const std::function<double(double)>& f, double lo, double hi, int samples) {
    double prev = -std::numeric_limits<double>::infinity();
    for (int k = 1; k <= samples; ++k) {
        const double x = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(samples + 1);
        const double fx = f(x);
        if (fx < prev) return false;
        prev = fx;
    }
    return true;
}

double relative_gap(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

bool numerically_tied(double a, double b) { return relative_gap(a, b) <= kTieTolerance; }

// ---------------------------------------------------------------------------

double spider_equation(const SpiderProfile& p, double lambda) {
    double sum = 0.0;
    for (int len : p.lengths()) sum += 1.0 / (1.0 - len * lambda);
    return sum;
}

RootResult spider_lambda2(const SpiderProfile& p) {
    const int l1 = p.lengths()[0];
    const int l2 = p.lengths()[1];
    if (l1 == l2)
        throw DomainError("spider root equation needs l1 > l2 (odd diameter); got " + to_shorthand(p));
    auto f = [&p](double lambda) { return spider_equation(p, lambda); };
    const double lo = 1.0 / l1, hi = 1.0 / l2;
    check_monotone(f, lo, hi);
    return bisect_increasing(f, lo, hi);
}

double balanced_equation_block(int r, int M, double q, int c, double lambda) {
    return 1.0 / (1.0 - (r + 1) * lambda) + 1.0 / (1.0 - r * lambda) + (M - c * q) / (1.0 - (c + 1) * lambda) +
           (q * (c + 1) - M) / (1.0 - c * lambda);
}

double balanced_equation(int r, int M, double q, double lambda) {
    return balanced_equation_block(r, M, q, lateral_block(r, M, q), lambda);
}

RootResult sigma_rM_block(int r, int M, double q, int c) {
    check_q_domain(r, M, q);
    if (c < 1 || c > r) throw DomainError("lateral block c must lie in [1, r]");
    auto f = [=](double lambda) { return balanced_equation_block(r, M, q, c, lambda); };
    const double lo = 1.0 / (r + 1), hi = 1.0 / r;
    check_monotone(f, lo, hi);
    return bisect_increasing(f, lo, hi);
}

RootResult sigma_rM(int r, int M, double q) {
    check_q_domain(r, M, q);
    return sigma_rM_block(r, M, q, lateral_block(r, M, q));
}

std::pair<int, int> feasible_q_range(int r, int M) {
    if (r < 1 || M < 1) throw DomainError("feasible q range needs r >= 1 and M >= 1");
    return {(M + r - 1) / r, M};
}

std::pair<double, double> continuous_q_range(int r, int M) {
    return {static_cast<double>(M) / r, static_cast<double>(M)};
}

ASParams as_params_for(int r, int M, int q) {
    const auto [qmin, qmax] = feasible_q_range(r, M);
    if (q < qmin || q > qmax)
        throw DomainError("q = " + std::to_string(q) + " is not feasible for r = " + std::to_string(r) +
                          ", M = " + std::to_string(M));
    ASParams p{r, q, M / q, M % q};
    p.validate();
    return p;
}

// ---------------------------------------------------------------------------

std::pair<double, double> side_sums(const DoubleSpiderProfile& p, double rho) {
    double a = 0.0, b = 0.0;
    for (int len : p.a()) a += 1.0 / (rho - len);
    for (int len : p.b()) b += 1.0 / (rho - len);
    return {a, b};
}

double double_spider_equation(const DoubleSpiderProfile& p, double rho) {
    const auto [a, b] = side_sums(p, rho);
    return 1.0 / a + 1.0 / b - 1.0;
}

RootResult double_spider_rho(const DoubleSpiderProfile& p) {
    if (!p.balanced_principal())
        throw DomainError("two-center equation needs a1 == b1 >= every length; got " + to_shorthand(p));
    const int r = p.a()[0];
    auto f = [&p](double rho) { return double_spider_equation(p, rho); };
    const double lo = r + 1e-9;
    const double hi = r + p.total_length() + 1.0;
    check_monotone(f, lo, hi);
    return bisect_increasing(f, lo, hi);
}

Vector double_spider_maximizer(const DoubleSpiderProfile& p) {
    const double rho = double_spider_rho(p).value;
    const auto [a_sum, b_sum] = side_sums(p, rho);
    Vector z(static_cast<Eigen::Index>(p.a().size() + p.b().size()));
    Eigen::Index k = 0;
    for (int len : p.a()) z(k++) = (1.0 / a_sum) / (rho - len);
    for (int len : p.b()) z(k++) = -(1.0 / b_sum) / (rho - len);
    return z;
}

double double_spider_rayleigh(const DoubleSpiderProfile& p, const Vector& z) {
    const auto np = static_cast<Eigen::Index>(p.a().size());
    if (z.size() != np + static_cast<Eigen::Index>(p.b().size()))
        throw DomainError("double_spider_rayleigh: flux length mismatch");
    double s = 0.0, energy = 0.0;
    for (Eigen::Index i = 0; i < np; ++i) {
        s += z(i);
        energy += p.a()[static_cast<std::size_t>(i)] * z(i) * z(i);
    }
    for (std::size_t j = 0; j < p.b().size(); ++j) {
        const double y = z(np + static_cast<Eigen::Index>(j));
        energy += p.b()[j] * y * y;
    }
    return (s * s + energy) / z.squaredNorm();
}

// ---------------------------------------------------------------------------

double threshold_polynomial(int s, int t, double lambda) {
    return 1.0 - 3.0 * s * lambda + (2.0 * s * s + s - 2.0 * t - 1.0) * lambda * lambda;
}

ThresholdData threshold_data(int r, int t) {
    if (r < 3) throw DomainError("threshold comparison needs r >= 3");
    const int s = (r + 1) / 2;
    if (t < 1 || t > s - 1)
        throw DomainError("threshold comparison needs 1 <= t <= s-1 = " + std::to_string(s - 1));

    ThresholdData out{r, s, t, Regime::Threshold, std::nullopt, std::nullopt};
    if (r == 2 * s && 2 * t <= s - 1) {
        out.regime = Regime::AAlways;
        return out;
    }
    if (r == 2 * s - 1 && 2 * t >= s - 1) {
        out.regime = Regime::BAlways;
        return out;
    }

    const double lo = 1.0 / (r + 1), hi = 1.0 / r;
    // Stable quadratic roots of a x^2 + b x + 1.
    const double a = 2.0 * s * s + s - 2.0 * t - 1.0;
    const double b = -3.0 * s;
    const double disc = b * b - 4.0 * a;
    std::optional<double> zeta;
    if (disc >= 0.0) {
        const double big = -0.5 * (b - std::sqrt(disc));  // b < 0, so no cancellation
        for (double root : {big / a, 1.0 / big})
            if (root > lo && root < hi) zeta = root;
    }
    if (!zeta) {
        // P_{s,t} is decreasing on I_r; bisect -P.
        zeta = bisect_increasing([=](double x) { return -threshold_polynomial(s, t, x); }, lo, hi).value;
    }
    const double z = *zeta;
    const double bracket = 1.0 / (1.0 - (r + 1) * z) + 1.0 / (1.0 - r * z) + (t - s + 1.0) / (1.0 - s * z) +
                           (s - t) / (1.0 - (s - 1) * z);
    out.zeta = z;
    out.kappa = -(1.0 - s * z) * bracket;
    return out;
}

const char* to_string(Regime regime) {
    switch (regime) {
        case Regime::AAlways: return "A_always";
        case Regime::BAlways: return "B_always";
        case Regime::Threshold: return "threshold";
    }
    return "?";
}

}  // namespace steklov
