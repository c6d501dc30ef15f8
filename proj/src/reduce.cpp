#include "steklov/reduce.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "steklov/error.hpp"
#include "steklov/roots.hpp"
#include "steklov/spectral.hpp"

namespace steklov {

namespace {

constexpr double kStrictMargin = 1e-10;

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

int require_odd_diameter(const Tree& t) {
    const int d = diameter(t);
    if (d % 2 == 0) throw DomainError("reduction needs odd diameter, got " + std::to_string(d));
    return d;
}

// Vertex sequence of the lexicographically smallest longest path.
std::vector<Vertex> first_diameter_path(const Tree& t, int d) {
    std::vector<Vertex> best;
    for (Vertex x : leaf_set(t)) {
        // BFS parents from x, then read off paths to every far leaf.
        const auto dist = distances_from(t, x);
        for (Vertex y = 0; y < t.order(); ++y) {
            if (dist[idx(y)] != d) continue;
            std::vector<Vertex> path{y};
            Vertex cur = y;
            while (cur != x) {
                for (Vertex w : t.neighbors(cur)) {
                    if (dist[idx(w)] == dist[idx(cur)] - 1) {
                        cur = w;
                        break;
                    }
                }
                path.push_back(cur);
            }
            std::reverse(path.begin(), path.end());
            if (best.empty() || path < best) best = std::move(path);
        }
    }
    return best;
}

// Edge counts per leaf for the half of `t` hanging from `root` away from `other`.
std::vector<int> charge_half(const Tree& t, Vertex root, Vertex other) {
    const auto n = idx(t.order());
    std::vector<Vertex> parent(n, -1), order;
    std::vector<int> depth(n, 0);
    std::vector<Vertex> stack{root};
    parent[idx(root)] = other;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        order.push_back(x);
        for (Vertex y : t.neighbors(x)) {
            if (y == parent[idx(x)]) continue;
            parent[idx(y)] = x;
            depth[idx(y)] = depth[idx(x)] + 1;
            stack.push_back(y);
        }
    }

    // Deepest leaf below each vertex, ties to the smaller id.
    std::vector<Vertex> deepest(n, -1);
    auto better = [&](Vertex cand, Vertex cur) {
        return cur < 0 || depth[idx(cand)] > depth[idx(cur)] || (depth[idx(cand)] == depth[idx(cur)] && cand < cur);
    };
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex x = *it;
        if (x != root && t.degree(x) == 1) deepest[idx(x)] = x;
        if (x != root && better(deepest[idx(x)], deepest[idx(parent[idx(x)])]))
            deepest[idx(parent[idx(x)])] = deepest[idx(x)];
    }

    std::vector<Vertex> charged(n, -1);  // edge (parent[x], x) -> leaf
    const Vertex principal = deepest[idx(root)];
    for (Vertex x = principal; x != root; x = parent[idx(x)]) charged[idx(x)] = principal;
    for (Vertex x : order)
        if (x != root && charged[idx(x)] < 0) charged[idx(x)] = deepest[idx(x)];

    std::vector<int> count(n, 0);
    for (Vertex x : order)
        if (x != root) ++count[idx(charged[idx(x)])];
    std::vector<int> lengths;
    for (Vertex x : order)
        if (x != root && t.degree(x) == 1) lengths.push_back(count[idx(x)]);
    return lengths;
}

double spider_lambda(const SpiderProfile& p) { return spider_lambda2(p).value; }
double ds_lambda(const DoubleSpiderProfile& p) { return 1.0 / double_spider_rho(p).value; }

void require_increase(double before, double after, const std::string& move) {
    if (!(after - before > kStrictMargin))
        throw std::logic_error(move + " did not increase lambda_2 (" + std::to_string(before) + " -> " +
                               std::to_string(after) + ")");
}

}  // namespace

DoubleSpiderProfile dominating_double_spider(const Tree& t) {
    const int d = require_odd_diameter(t);
    const int r = (d - 1) / 2;
    const auto path = first_diameter_path(t, d);
    const Vertex u = path[idx(r)];
    const Vertex v = path[idx(r + 1)];
    return DoubleSpiderProfile(charge_half(t, u, v), charge_half(t, v, u));
}

DoubleSpiderProfile arm_transfer(const DoubleSpiderProfile& p, std::size_t k) {
    const double rho = double_spider_rho(p).value;
    const auto [a_sum, b_sum] = side_sums(p, rho);
    const bool donor_is_b = a_sum >= b_sum;

    std::vector<int> donor = donor_is_b ? p.b() : p.a();
    std::vector<int> receiver = donor_is_b ? p.a() : p.b();
    if (donor.size() < 2) throw DomainError("arm transfer: donor side has a single branch in " + to_shorthand(p));
    if (k < 2 || k > donor.size())
        throw DomainError("arm transfer: branch index " + std::to_string(k) + " out of range 2.." +
                          std::to_string(donor.size()));

    receiver.push_back(donor[k - 1]);
    donor.erase(donor.begin() + static_cast<std::ptrdiff_t>(k - 1));
    DoubleSpiderProfile moved = donor_is_b ? DoubleSpiderProfile(receiver, donor) : DoubleSpiderProfile(donor, receiver);
    if (moved == p || moved == p.swapped()) throw DomainError("arm transfer is a no-op on " + to_shorthand(p));

    require_increase(1.0 / rho, ds_lambda(moved), "arm transfer on " + to_shorthand(p));
    return moved;
}

SpiderProfile balance_main_step(const SpiderProfile& p) {
    const auto& l = p.lengths();
    if (p.branches() < 3) throw DomainError("balance_main_step needs at least three branches");
    if (l[0] < l[1] + 2) throw DomainError("balance_main_step needs l1 >= l2 + 2 in " + to_shorthand(p));
    if ((l[0] + l[1]) % 2 == 0) throw DomainError("balance_main_step needs odd l1 + l2");

    std::vector<int> next = l;
    --next[0];
    ++next[1];
    SpiderProfile out(std::move(next));
    require_increase(spider_lambda(p), spider_lambda(out), "balance_main_step on " + to_shorthand(p));
    return out;
}

SpiderProfile balance_side_step(const SpiderProfile& p, std::size_t u_index, std::size_t v_index) {
    const auto& l = p.lengths();
    if (l[0] != l[1] + 1) throw DomainError("balance_side_step needs principal branches (r+1, r) in " + to_shorthand(p));
    if (u_index < 2 || v_index < 2 || u_index >= l.size() || v_index >= l.size() || u_index == v_index)
        throw DomainError("balance_side_step needs two distinct lateral indices");
    const int r = l[1];
    const int u = l[u_index], v = l[v_index];
    if (!(u <= r && u >= v + 2 && v >= 1))
        throw DomainError("balance_side_step needs r >= u >= v + 2 >= 3; got u = " + std::to_string(u) +
                          ", v = " + std::to_string(v));

    std::vector<int> next = l;
    --next[u_index];
    ++next[v_index];
    SpiderProfile out(std::move(next));
    require_increase(spider_lambda(p), spider_lambda(out), "balance_side_step on " + to_shorthand(p));
    return out;
}

SpiderProfile balance_side_step(const SpiderProfile& p) {
    if (p.branches() < 4) throw DomainError("balance_side_step needs two lateral branches");
    return balance_side_step(p, 2, p.lengths().size() - 1);
}

AscentTrace greedy_ascent(const Tree& t) {
    const int d = require_odd_diameter(t);
    AscentTrace trace{{}, t};
    trace.steps.push_back({"start", describe(t), lambda2_numeric(t)});
    if (d == 1) return trace;

    const std::size_t max_steps = idx(t.order()) * idx(t.order());
    auto record = [&](std::string move, std::string shape, double lambda) {
        if (lambda < trace.steps.back().lambda2 - 1e-9)
            throw std::logic_error(move + " decreased lambda_2 in greedy ascent");
        if (trace.steps.size() > max_steps) throw std::logic_error("greedy ascent exceeded n^2 steps");
        trace.steps.push_back({std::move(move), std::move(shape), lambda});
    };

    std::optional<SpiderProfile> spider = recognize_spider(t);
    if (!spider) {
        DoubleSpiderProfile ds = dominating_double_spider(t);
        record("dominate", to_shorthand(ds), ds_lambda(ds));
        while (ds.a().size() >= 2 && ds.b().size() >= 2) {
            ds = arm_transfer(ds, 2);
            record("arm_transfer", to_shorthand(ds), ds_lambda(ds));
        }
        std::vector<int> lengths = ds.b().size() == 1 ? ds.a() : ds.b();
        lengths.push_back((ds.b().size() == 1 ? ds.b() : ds.a()).front() + 1);
        spider = SpiderProfile(std::move(lengths));
    }

    while (spider->branches() >= 3 && spider->lengths()[0] >= spider->lengths()[1] + 2) {
        spider = balance_main_step(*spider);
        record("balance_main", to_shorthand(*spider), spider_lambda(*spider));
    }
    while (spider->branches() >= 4 && spider->lengths()[2] >= spider->lengths().back() + 2) {
        spider = balance_side_step(*spider);
        record("balance_side", to_shorthand(*spider), spider_lambda(*spider));
    }
    trace.result = make_spider(*spider);
    return trace;
}

}  // namespace steklov
