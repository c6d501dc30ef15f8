#include "steklov/tree.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <utility>

#include "steklov/error.hpp"

namespace steklov {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

std::string join(const std::vector<int>& xs, char sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

void sort_desc(std::vector<int>& xs) { std::sort(xs.begin(), xs.end(), std::greater<>()); }

// Appends a path of `length` edges hanging from `root`; returns the next free id.
Vertex attach_path(std::vector<Edge>& edges, Vertex root, int length, Vertex next) {
    Vertex prev = root;
    for (int k = 0; k < length; ++k) {
        edges.push_back({prev, next});
        prev = next++;
    }
    return next;
}

}  // namespace

// ---------------------------------------------------------------------------
// Tree

Tree::Tree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 2) throw DomainError("tree must have at least 2 vertices");
    if (static_cast<int>(edges_.size()) != n - 1)
        throw DomainError("tree on " + std::to_string(n) + " vertices needs " + std::to_string(n - 1) +
                          " edges, got " + std::to_string(edges_.size()));
    adj_.assign(idx(n), {});
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const auto& e : edges_) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw DomainError("edge endpoint out of range");
        if (e.u == e.v) throw DomainError("self-loop at vertex " + std::to_string(e.u));
        if (!seen.insert(std::minmax(e.u, e.v)).second)
            throw DomainError("repeated edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        adj_[idx(e.u)].push_back(e.v);
        adj_[idx(e.v)].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    std::vector<char> mark(idx(n), 0);
    std::vector<Vertex> stack{0};
    mark[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : adj_[idx(x)]) {
            if (!mark[idx(y)]) {
                mark[idx(y)] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    if (reached != n) throw DomainError("edge list is not connected");
}

Tree Tree::path(int length) {
    if (length < 1) throw DomainError("path length must be >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < length; ++i) edges.push_back({i, i + 1});
    return Tree(length + 1, std::move(edges));
}

// ---------------------------------------------------------------------------
// Profiles

SpiderProfile::SpiderProfile(std::vector<int> lengths) : lengths_(std::move(lengths)) {
    if (lengths_.size() < 2) throw DomainError("spider needs at least 2 branches");
    for (int l : lengths_)
        if (l < 1) throw DomainError("spider branch lengths must be >= 1");
    sort_desc(lengths_);
}

int SpiderProfile::total_length() const { return std::accumulate(lengths_.begin(), lengths_.end(), 0); }

void ASParams::validate() const {
    if (r < 1) throw DomainError("AS: r must be >= 1");
    if (q < 1) throw DomainError("AS: q must be >= 1");
    if (c < 1) throw DomainError("AS: c must be >= 1");
    if (t < 0 || t > q - 1) throw DomainError("AS: t must satisfy 0 <= t <= q-1");
    if (c > r) throw DomainError("AS: lateral length c exceeds r");
    if (t > 0 && c + 1 > r) throw DomainError("AS: lateral length c+1 exceeds r");
}

SpiderProfile ASParams::profile() const {
    validate();
    std::vector<int> lengths{r + 1, r};
    lengths.insert(lengths.end(), static_cast<std::size_t>(t), c + 1);
    lengths.insert(lengths.end(), static_cast<std::size_t>(q - t), c);
    return SpiderProfile(std::move(lengths));
}

DoubleSpiderProfile::DoubleSpiderProfile(std::vector<int> a_lengths, std::vector<int> b_lengths)
    : a_(std::move(a_lengths)), b_(std::move(b_lengths)) {
    if (a_.empty() || b_.empty()) throw DomainError("double spider needs at least one branch per side");
    for (int l : a_)
        if (l < 1) throw DomainError("double spider branch lengths must be >= 1");
    for (int l : b_)
        if (l < 1) throw DomainError("double spider branch lengths must be >= 1");
    sort_desc(a_);
    sort_desc(b_);
}

int DoubleSpiderProfile::total_length() const {
    return std::accumulate(a_.begin(), a_.end(), 0) + std::accumulate(b_.begin(), b_.end(), 0);
}

bool DoubleSpiderProfile::balanced_principal() const { return a_[0] == b_[0]; }

// ---------------------------------------------------------------------------
// Constructors

Tree make_spider(const SpiderProfile& profile) {
    std::vector<Edge> edges;
    Vertex next = 1;
    for (int len : profile.lengths()) next = attach_path(edges, 0, len, next);
    return Tree(next, std::move(edges));
}

Tree make_as_tree(const ASParams& params) { return make_spider(params.profile()); }

Tree make_double_spider(const DoubleSpiderProfile& profile) {
    std::vector<Edge> edges{{0, 1}};
    Vertex next = 2;
    for (int len : profile.a()) next = attach_path(edges, 0, len, next);
    for (int len : profile.b()) next = attach_path(edges, 1, len, next);
    return Tree(next, std::move(edges));
}

// ---------------------------------------------------------------------------
// Metric queries

std::vector<int> distances_from(const Tree& t, Vertex source) {
    std::vector<int> dist(idx(t.order()), -1);
    std::queue<Vertex> frontier;
    dist[idx(source)] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        Vertex x = frontier.front();
        frontier.pop();
        for (Vertex y : t.neighbors(x)) {
            if (dist[idx(y)] < 0) {
                dist[idx(y)] = dist[idx(x)] + 1;
                frontier.push(y);
            }
        }
    }
    return dist;
}

int diameter(const Tree& t) {
    auto d0 = distances_from(t, 0);
    Vertex far = static_cast<Vertex>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    auto d1 = distances_from(t, far);
    return *std::max_element(d1.begin(), d1.end());
}

std::vector<Vertex> leaf_set(const Tree& t) {
    std::vector<Vertex> leaves;
    for (Vertex v = 0; v < t.order(); ++v)
        if (t.is_leaf(v)) leaves.push_back(v);
    return leaves;
}

std::vector<Vertex> centers(const Tree& t) {
    const int n = t.order();
    if (n <= 2) {
        std::vector<Vertex> all(idx(n));
        std::iota(all.begin(), all.end(), 0);
        return all;
    }
    std::vector<int> deg(idx(n));
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        deg[idx(v)] = t.degree(v);
        if (deg[idx(v)] == 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<Vertex> next_layer;
        for (Vertex leaf : layer) {
            for (Vertex y : t.neighbors(leaf)) {
                if (--deg[idx(y)] == 1) next_layer.push_back(y);
            }
        }
        layer = std::move(next_layer);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

std::string rooted_code(const Tree& t, Vertex root, Vertex parent) {
    std::vector<std::string> kids;
    for (Vertex y : t.neighbors(root))
        if (y != parent) kids.push_back(rooted_code(t, y, root));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids) out += k;
    out += ')';
    return out;
}

}  // namespace

std::string canonical_code(const Tree& t) {
    auto c = centers(t);
    if (c.size() == 1) return "U" + rooted_code(t, c[0], -1);
    auto left = rooted_code(t, c[0], c[1]);
    auto right = rooted_code(t, c[1], c[0]);
    if (right < left) std::swap(left, right);
    return "B" + left + right;
}

// ---------------------------------------------------------------------------
// Recognizers

namespace {

// Length of the unbranched path starting with edge from -> first.
int branch_length(const Tree& t, Vertex from, Vertex first) {
    int len = 1;
    Vertex prev = from, cur = first;
    while (t.degree(cur) == 2) {
        Vertex nxt = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1] : t.neighbors(cur)[0];
        prev = cur;
        cur = nxt;
        ++len;
    }
    return len;
}

}  // namespace

std::optional<SpiderProfile> recognize_spider(const Tree& t) {
    std::vector<Vertex> branching;
    for (Vertex v = 0; v < t.order(); ++v)
        if (t.degree(v) >= 3) branching.push_back(v);
    if (branching.size() > 1) return std::nullopt;
    if (branching.empty()) {
        int d = t.order() - 1;
        if (d < 2) return std::nullopt;
        return SpiderProfile({(d + 1) / 2, d / 2});
    }
    Vertex center = branching[0];
    std::vector<int> lengths;
    for (Vertex y : t.neighbors(center)) lengths.push_back(branch_length(t, center, y));
    return SpiderProfile(std::move(lengths));
}

std::optional<DoubleSpiderProfile> recognize_double_spider(const Tree& t) {
    auto qualifies = [&](Vertex u, Vertex v) {
        if (t.degree(u) < 2 || t.degree(v) < 2) return false;
        for (Vertex w = 0; w < t.order(); ++w)
            if (w != u && w != v && t.degree(w) > 2) return false;
        return true;
    };
    auto side = [&](Vertex u, Vertex v) {
        std::vector<int> lengths;
        for (Vertex y : t.neighbors(u))
            if (y != v) lengths.push_back(branch_length(t, u, y));
        sort_desc(lengths);
        return lengths;
    };
    auto build = [&](Vertex u, Vertex v) {
        auto a = side(u, v);
        auto b = side(v, u);
        if (a < b) std::swap(a, b);
        return DoubleSpiderProfile(std::move(a), std::move(b));
    };

    auto c = centers(t);
    if (c.size() == 2 && qualifies(c[0], c[1])) return build(c[0], c[1]);
    std::vector<Edge> sorted(t.edges().begin(), t.edges().end());
    for (auto& e : sorted)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(sorted.begin(), sorted.end(), [](const Edge& x, const Edge& y) {
        return std::tie(x.u, x.v) < std::tie(y.u, y.v);
    });
    for (const auto& e : sorted)
        if (qualifies(e.u, e.v)) return build(e.u, e.v);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Enumeration (level sequences rooted at a center)

namespace {

using Layout = std::vector<int>;

std::optional<Layout> next_rooted_tree(const Layout& pred, std::optional<std::size_t> start = std::nullopt) {
    std::size_t p;
    if (start) {
        p = *start;
    } else {
        p = pred.size() - 1;
        while (p > 0 && pred[p] == 1) --p;
    }
    if (p == 0) return std::nullopt;
    std::size_t q = p - 1;
    while (pred[q] != pred[p] - 1) --q;
    Layout result = pred;
    for (std::size_t i = p; i < result.size(); ++i) result[i] = result[i - p + q];
    return result;
}

// Splits at the second vertex on level 1: the first root subtree (shifted up
// one level) and the remainder with the root kept.
std::pair<Layout, Layout> split_tree(const Layout& layout) {
    bool one_found = false;
    std::size_t m = layout.size();
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (layout[i] == 1) {
            if (one_found) {
                m = i;
                break;
            }
            one_found = true;
        }
    }
    Layout left, rest{0};
    for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
    for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
    return {std::move(left), std::move(rest)};
}

std::optional<Layout> next_tree(const Layout& candidate) {
    auto [left, rest] = split_tree(candidate);
    int left_height = *std::max_element(left.begin(), left.end());
    int rest_height = *std::max_element(rest.begin(), rest.end());
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
        if (left.size() > rest.size())
            valid = false;
        else if (left.size() == rest.size() && left > rest)
            valid = false;
    }
    if (valid) return candidate;

    std::size_t p = left.size();
    auto jumped = next_rooted_tree(candidate, p);
    if (!jumped) return std::nullopt;
    if (candidate[p] > 2) {
        auto [new_left, new_rest] = split_tree(*jumped);
        int new_left_height = *std::max_element(new_left.begin(), new_left.end());
        std::size_t len = static_cast<std::size_t>(new_left_height + 1);
        for (std::size_t k = 0; k < len; ++k) (*jumped)[jumped->size() - len + k] = static_cast<int>(k) + 1;
    }
    return jumped;
}

}  // namespace

TreeEnumerator::TreeEnumerator(int n, std::optional<int> diameter_filter) : n_(n), diameter_(diameter_filter) {
    if (n < 2) throw DomainError("enumeration needs n >= 2");
    for (int i = 0; i <= n / 2; ++i) layout_.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i) layout_.push_back(i);
    if (diameter_ && (*diameter_ < 1 || *diameter_ > n - 1)) done_ = true;
}

bool TreeEnumerator::advance() {
    if (started_) {
        auto succ = next_rooted_tree(layout_);
        if (!succ) return false;
        layout_ = std::move(*succ);
    }
    started_ = true;
    auto valid = next_tree(layout_);
    if (!valid) return false;
    layout_ = std::move(*valid);
    return true;
}

Tree TreeEnumerator::current_tree() const {
    std::vector<Edge> edges;
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < layout_.size(); ++i) {
        if (!stack.empty()) {
            while (layout_[stack.back()] >= layout_[i]) stack.pop_back();
            edges.push_back({static_cast<Vertex>(stack.back()), static_cast<Vertex>(i)});
        }
        stack.push_back(i);
    }
    return Tree(n_, std::move(edges));
}

std::optional<Tree> TreeEnumerator::next() {
    while (!done_) {
        if (!advance()) {
            done_ = true;
            break;
        }
        Tree t = current_tree();
        if (!diameter_ || diameter(t) == *diameter_) return t;
    }
    return std::nullopt;
}

std::vector<Tree> enumerate_trees(int n, int d) {
    std::vector<Tree> out;
    TreeEnumerator gen(n, d);
    while (auto t = gen.next()) out.push_back(std::move(*t));
    return out;
}

std::vector<Tree> enumerate_trees(int n) {
    std::vector<Tree> out;
    TreeEnumerator gen(n);
    while (auto t = gen.next()) out.push_back(std::move(*t));
    return out;
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

std::vector<int> parse_ints(std::string_view s, char sep, std::string_view what) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t end = s.find(sep, pos);
        auto tok = s.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw ParseError("bad integer '" + std::string(tok) + "' in " + std::string(what));
        out.push_back(value);
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    return out;
}

}  // namespace

Tree parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<int> n;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream fields(line);
        std::string extra;
        if (!n) {
            int count = 0;
            if (!(fields >> count) || (fields >> extra)) throw ParseError("edge list: bad vertex count line: " + line);
            n = count;
            continue;
        }
        Vertex u = 0, v = 0;
        if (!(fields >> u >> v) || (fields >> extra)) throw ParseError("edge list: malformed edge line: " + line);
        edges.push_back({u, v});
    }
    if (!n) throw ParseError("edge list: missing vertex count");
    return Tree(*n, std::move(edges));
}

std::string to_edge_list(const Tree& t) {
    std::string out = std::to_string(t.order()) + "\n";
    for (const auto& e : t.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

Tree parse_tree(std::string_view shorthand) {
    auto colon = shorthand.find(':');
    if (colon == std::string_view::npos) throw ParseError("tree shorthand needs 'kind:args': " + std::string(shorthand));
    auto kind = shorthand.substr(0, colon);
    auto args = shorthand.substr(colon + 1);
    if (kind == "path") {
        auto v = parse_ints(args, ',', "path");
        if (v.size() != 1) throw ParseError("path takes one length");
        return Tree::path(v[0]);
    }
    if (kind == "spider") return make_spider(SpiderProfile(parse_ints(args, ',', "spider")));
    if (kind == "ds") {
        auto slash = args.find('/');
        if (slash == std::string_view::npos) throw ParseError("ds shorthand needs 'a,../b,..'");
        return make_double_spider(
            DoubleSpiderProfile(parse_ints(args.substr(0, slash), ',', "ds"), parse_ints(args.substr(slash + 1), ',', "ds")));
    }
    if (kind == "as") {
        auto v = parse_ints(args, ',', "as");
        if (v.size() != 4) throw ParseError("as shorthand takes r,q,c,t");
        return make_as_tree(ASParams{v[0], v[1], v[2], v[3]});
    }
    throw ParseError("unknown tree kind '" + std::string(kind) + "'");
}

std::string to_shorthand(const SpiderProfile& p) { return "spider:" + join(p.lengths(), ','); }

std::string to_shorthand(const DoubleSpiderProfile& p) { return "ds:" + join(p.a(), ',') + "/" + join(p.b(), ','); }

std::string to_shorthand(const ASParams& p) {
    return "as:" + std::to_string(p.r) + "," + std::to_string(p.q) + "," + std::to_string(p.c) + "," + std::to_string(p.t);
}

std::string describe(const Tree& t) {
    bool is_path = true;
    for (Vertex v = 0; v < t.order(); ++v)
        if (t.degree(v) > 2) is_path = false;
    if (is_path) return "path:" + std::to_string(t.order() - 1);
    if (auto s = recognize_spider(t)) return to_shorthand(*s);
    if (auto d = recognize_double_spider(t)) return to_shorthand(*d);
    return "tree:" + std::to_string(t.order());
}

}  // namespace steklov
