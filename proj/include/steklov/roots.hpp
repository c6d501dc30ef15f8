#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "steklov/linalg.hpp"
#include "steklov/tree.hpp"

namespace steklov {

/// A root of a strictly increasing scalar function together with the final
/// bisection bracket and the function value at the root.
struct RootResult {
    double value = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    double residual = 0.0;
};

/// Bisection for a strictly increasing `f` on the open interval (lo, hi),
/// where f -> negative at lo and positive at hi (poles allowed at both ends;
/// the endpoints themselves are never evaluated). Halves until the bracket is
/// at most `width` wide, then takes one secant step inside the final bracket.
RootResult bisect_increasing(const std::function<double(double)>& f, double lo, double hi, double width = 1e-14);

/// True when `f` is nondecreasing at `samples` equally spaced interior points.
bool sampled_increasing(const std::function<double(double)>& f, double lo, double hi, int samples = 100);

/// Two values are numerically tied when they differ by at most 1e-9 relative.
bool numerically_tied(double a, double b);
/// |a - b| / max(|a|, |b|).
double relative_gap(double a, double b);

// --- One-center equations -------------------------------------------------

/// F(lambda) = sum_i 1 / (1 - l_i lambda).
double spider_equation(const SpiderProfile& p, double lambda);

/// lambda_2 of an odd-diameter spider (l1 > l2): the unique zero of the spider
/// equation in (1/l1, 1/l2). Throws DomainError when l1 == l2.
RootResult spider_lambda2(const SpiderProfile& p);

/// Balanced-family equation for real q in [M/r, M] using the lateral block
/// c(q) = floor(M/q). At q = M/r the lateral branches merge with the length-r
/// principal branch.
double balanced_equation(int r, int M, double q, double lambda);
/// Same, with the lateral block c given explicitly (for continuity checks at
/// q = M/(c+1), where both neighbouring blocks apply).
double balanced_equation_block(int r, int M, double q, int c, double lambda);

/// Sigma_{r,M}(q): unique zero of the balanced equation in (1/(r+1), 1/r).
RootResult sigma_rM(int r, int M, double q);
RootResult sigma_rM_block(int r, int M, double q, int c);

/// Integer q for which AS(r, q+2, c, t) with M = qc + t is realizable:
/// ceil(M/r) <= q <= M.
std::pair<int, int> feasible_q_range(int r, int M);
/// Continuous domain of Sigma_{r,M}: [M/r, M].
std::pair<double, double> continuous_q_range(int r, int M);
/// Euclidean split M = q c + t as AS parameters.
ASParams as_params_for(int r, int M, int q);

// --- Two-center equations -------------------------------------------------

/// 1/A(rho) + 1/B(rho) - 1 with A = sum 1/(rho - a_i), B = sum 1/(rho - b_j).
double double_spider_equation(const DoubleSpiderProfile& p, double rho);

/// rho = 1 / lambda_2 of a double spider with a1 == b1 == r >= every length:
/// the unique zero of the two-center equation on (r, infinity).
RootResult double_spider_rho(const DoubleSpiderProfile& p);

/// Side sums A and B at the given rho.
std::pair<double, double> side_sums(const DoubleSpiderProfile& p, double rho);

/// Maximizing boundary flux (x_1..x_p, y_1..y_q) in the leaf order of
/// make_double_spider: x_i = (1/A)/(rho - a_i) > 0, y_j = -(1/B)/(rho - b_j) < 0,
/// so sum x = 1 = -sum y.
Vector double_spider_maximizer(const DoubleSpiderProfile& p);

/// Q(z) / |z|^2 for a two-center flux, using s^2 + sum a_i x_i^2 + sum b_j y_j^2.
double double_spider_rayleigh(const DoubleSpiderProfile& p, const Vector& z);

// --- Threshold between the two large-order candidates ---------------------

enum class Regime { AAlways, BAlways, Threshold };

struct ThresholdData {
    int r = 0;
    int s = 0;  // ceil(r/2)
    int t = 0;
    Regime regime = Regime::Threshold;
    std::optional<double> zeta;   // root of P_{s,t} in (1/(r+1), 1/r)
    std::optional<double> kappa;  // crossover value of k
};

/// P_{s,t}(lambda) = 1 - 3 s lambda + (2 s^2 + s - 2 t - 1) lambda^2.
double threshold_polynomial(int s, int t, double lambda);

/// Requires r >= 3 and 1 <= t <= ceil(r/2) - 1.
ThresholdData threshold_data(int r, int t);

const char* to_string(Regime regime);

}  // namespace steklov
