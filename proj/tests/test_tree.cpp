#include <map>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "steklov/error.hpp"
#include "steklov/tree.hpp"
#include "support.hpp"

using namespace steklov;

namespace {

int max_degree(const Tree& t) {
    int best = 0;
    for (Vertex v = 0; v < t.order(); ++v) best = std::max(best, t.degree(v));
    return best;
}

int count_degree(const Tree& t, int d) {
    int c = 0;
    for (Vertex v = 0; v < t.order(); ++v) c += t.degree(v) == d;
    return c;
}

}  // namespace

TEST_CASE("tree validation rejects malformed edge lists") {
    CHECK_THROWS_AS(Tree(1, {}), DomainError);
    CHECK_THROWS_AS(Tree(3, {{0, 1}}), DomainError);                  // too few edges
    CHECK_THROWS_AS(Tree(3, {{0, 0}, {1, 2}}), DomainError);          // self-loop
    CHECK_THROWS_AS(Tree(3, {{0, 1}, {1, 0}}), DomainError);          // repeated
    CHECK_THROWS_AS(Tree(4, {{0, 1}, {1, 0}, {2, 3}}), DomainError);  // repeated + disconnected
    CHECK_THROWS_AS(Tree(4, {{0, 1}, {2, 3}, {3, 2}}), DomainError);
    CHECK_THROWS_AS(Tree(3, {{0, 1}, {1, 5}}), DomainError);
    CHECK_NOTHROW(Tree(2, {{1, 0}}));
}

TEST_CASE("make_spider") {
    SUBCASE("two branches give a path") {
        Tree t = make_spider(SpiderProfile({2, 1}));
        CHECK(t.order() == 4);
        CHECK(diameter(t) == 3);
        CHECK(max_degree(t) == 2);
        CHECK(canonical_code(t) == canonical_code(Tree::path(3)));
    }
    SUBCASE("unit branches give a star") {
        Tree t = make_spider(SpiderProfile({1, 1, 1}));
        CHECK(t.order() == 4);
        CHECK(t.degree(0) == 3);
        CHECK(diameter(t) == 2);
    }
    SUBCASE("S(3,2,1)") {
        Tree t = make_spider(SpiderProfile({1, 3, 2}));
        CHECK(t.order() == 7);
        CHECK(diameter(t) == 5);
        CHECK(count_degree(t, 3) == 1);
        CHECK(t.degree(0) == 3);  // center labelled first
    }
    SUBCASE("invalid profiles") {
        CHECK_THROWS_AS(SpiderProfile({3}), DomainError);
        CHECK_THROWS_AS(SpiderProfile({3, 0}), DomainError);
        CHECK_THROWS_AS(SpiderProfile({}), DomainError);
    }
}

TEST_CASE("make_as_tree") {
    SUBCASE("AS(2,3,1,0) = S(3,2,1)") {
        ASParams p{2, 1, 1, 0};
        CHECK(p.profile() == SpiderProfile({3, 2, 1}));
        Tree t = make_as_tree(p);
        CHECK(t.order() == 7);
        CHECK(diameter(t) == 5);
    }
    SUBCASE("AS(1,M+2,1,0) has M unit legs") {
        for (int M = 1; M <= 6; ++M) {
            ASParams p{1, M, 1, 0};
            std::vector<int> expected{2, 1};
            expected.insert(expected.end(), static_cast<std::size_t>(M), 1);
            CHECK(p.profile() == SpiderProfile(expected));
        }
    }
    SUBCASE("AS(4,4,2,1) = S(5,4,3,2)") {
        ASParams p{4, 2, 2, 1};
        CHECK(p.lateral_total() == 5);
        CHECK(p.profile() == SpiderProfile({5, 4, 3, 2}));
        Tree t = make_as_tree(p);
        CHECK(t.order() == 15);
        CHECK(diameter(t) == 9);
    }
    SUBCASE("order and diameter over a parameter grid") {
        for (int r = 1; r <= 6; ++r)
            for (int q = 1; q <= 5; ++q)
                for (int c = 1; c <= r; ++c)
                    for (int t = 0; t < q; ++t) {
                        ASParams p{r, q, c, t};
                        if (t > 0 && c + 1 > r) {
                            CHECK_THROWS_AS(p.validate(), DomainError);
                            continue;
                        }
                        Tree tree = make_as_tree(p);
                        CHECK(diameter(tree) == 2 * r + 1);
                        CHECK(tree.order() == 2 * r + 2 + q * c + t);
                    }
    }
    SUBCASE("violations") {
        CHECK_THROWS_AS(make_as_tree({2, 1, 3, 0}), DomainError);  // c > r
        CHECK_THROWS_AS(make_as_tree({2, 2, 2, 1}), DomainError);  // c+1 > r with t > 0
        CHECK_THROWS_AS(make_as_tree({2, 2, 1, 2}), DomainError);  // t >= q
        CHECK_THROWS_AS(make_as_tree({0, 1, 1, 0}), DomainError);
    }
}

TEST_CASE("make_double_spider") {
    CHECK(canonical_code(make_double_spider(DoubleSpiderProfile({2}, {2}))) == canonical_code(Tree::path(5)));
    CHECK(canonical_code(make_double_spider(DoubleSpiderProfile({2, 1}, {2}))) ==
          canonical_code(make_spider(SpiderProfile({3, 2, 1}))));
    Tree t = make_double_spider(DoubleSpiderProfile({3, 1}, {3, 1}));
    CHECK(t.order() == 10);
    CHECK(diameter(t) == 7);
    CHECK(t.degree(0) == 3);
    CHECK(t.degree(1) == 3);
    CHECK_THROWS_AS(DoubleSpiderProfile({}, {2}), DomainError);
    CHECK_THROWS_AS(DoubleSpiderProfile({2, 0}, {2}), DomainError);
}

TEST_CASE("diameter and leaf_set") {
    CHECK(diameter(Tree::path(3)) == 3);
    CHECK(diameter(make_spider(SpiderProfile({1, 1, 1, 1}))) == 2);
    CHECK(diameter(make_spider(SpiderProfile({3, 2, 1}))) == 5);

    CHECK(leaf_set(Tree::path(3)) == std::vector<Vertex>{0, 3});
    CHECK(leaf_set(Tree(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})) == std::vector<Vertex>{1, 2, 3, 4});
    CHECK(leaf_set(Tree::path(1)) == std::vector<Vertex>{0, 1});
}

TEST_CASE("canonical_code") {
    SUBCASE("isomorphic labellings agree") {
        Tree shuffled(4, {{2, 0}, {0, 3}, {3, 1}});
        CHECK(canonical_code(shuffled) == canonical_code(make_spider(SpiderProfile({2, 1}))));
        CHECK(canonical_code(make_spider(SpiderProfile({3, 2, 1}))) ==
              canonical_code(make_double_spider(DoubleSpiderProfile({2, 1}, {2}))));
    }
    SUBCASE("different trees disagree") {
        CHECK(canonical_code(make_spider(SpiderProfile({2, 2, 1}))) !=
              canonical_code(make_spider(SpiderProfile({3, 1, 1}))));
    }
    SUBCASE("invariant under random relabelling") {
        std::mt19937_64 rng(20261018);
        for (int trial = 0; trial < 150; ++trial) {
            const int n = 2 + static_cast<int>(rng() % 18);
            Tree t = testing::random_tree(n, rng);
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(canonical_code(testing::relabel(t, perm)) == canonical_code(t));
        }
    }
}

TEST_CASE("enumerate_trees") {
    CHECK(enumerate_trees(4, 3).size() == 1);
    CHECK(enumerate_trees(7, 6).size() == 1);
    CHECK(enumerate_trees(2, 1).size() == 1);
    CHECK(enumerate_trees(6, 9).empty());

    std::size_t total = 0;
    for (int d = 1; d <= 6; ++d) total += enumerate_trees(7, d).size();
    CHECK(total == 11);

    SUBCASE("matches independent oracles and is duplicate free") {
        for (int n = 2; n <= 12; ++n) {
            std::set<std::string> codes;
            std::size_t emitted = 0;
            for (int d = 1; d <= n - 1; ++d) {
                for (const auto& t : enumerate_trees(n, d)) {
                    CHECK(diameter(t) == d);
                    codes.insert(canonical_code(t));
                    ++emitted;
                }
            }
            CHECK(codes.size() == emitted);
            if (n <= 8) CHECK(codes == testing::prufer_classes(n));
            if (n <= 10) CHECK(codes == testing::leaf_growth_classes(n));
        }
    }
    SUBCASE("deterministic order") {
        auto first = enumerate_trees(9, 4);
        auto second = enumerate_trees(9, 4);
        REQUIRE(first.size() == second.size());
        for (std::size_t i = 0; i < first.size(); ++i)
            CHECK(to_edge_list(first[i]) == to_edge_list(second[i]));
    }
    SUBCASE("lazy stream") {
        TreeEnumerator gen(8, 4);
        std::size_t count = 0;
        while (gen.next()) ++count;
        CHECK(count == enumerate_trees(8, 4).size());
        CHECK_FALSE(gen.next().has_value());
    }
}

TEST_CASE("recognize_spider") {
    auto s = recognize_spider(make_spider(SpiderProfile({3, 2, 1})));
    REQUIRE(s);
    CHECK(s->lengths() == std::vector<int>{3, 2, 1});

    CHECK_FALSE(recognize_spider(make_double_spider(DoubleSpiderProfile({2, 1}, {2, 1}))).has_value());

    auto p = recognize_spider(Tree::path(5));
    REQUIRE(p);
    CHECK(p->lengths() == std::vector<int>{3, 2});
    CHECK_FALSE(recognize_spider(Tree::path(1)).has_value());

    SUBCASE("round trip for b >= 3") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 200; ++trial) {
            const int b = 3 + static_cast<int>(rng() % 5);
            std::vector<int> lengths;
            for (int i = 0; i < b; ++i) lengths.push_back(1 + static_cast<int>(rng() % 6));
            SpiderProfile profile(lengths);
            auto back = recognize_spider(make_spider(profile));
            REQUIRE(back);
            CHECK(*back == profile);
        }
    }
}

TEST_CASE("recognize_double_spider") {
    auto d = recognize_double_spider(make_double_spider(DoubleSpiderProfile({3, 1}, {3, 2, 1})));
    REQUIRE(d);
    CHECK(*d == DoubleSpiderProfile({3, 2, 1}, {3, 1}));
    auto s = recognize_double_spider(make_spider(SpiderProfile({3, 2, 1})));
    REQUIRE(s);
    CHECK(*s == DoubleSpiderProfile({2, 1}, {2}));
    // Two branching vertices at distance 2.
    Tree far(8, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {2, 5}, {2, 6}, {6, 7}});
    CHECK_FALSE(recognize_double_spider(far).has_value());
}

TEST_CASE("text formats") {
    Tree t = parse_tree("spider:3,2,1");
    CHECK(to_edge_list(t) == "7\n0 1\n1 2\n2 3\n0 4\n4 5\n0 6\n");
    CHECK(to_edge_list(parse_edge_list(to_edge_list(t))) == to_edge_list(t));
    CHECK(parse_tree("path:5").order() == 6);
    CHECK(canonical_code(parse_tree("ds:2,1/2")) == canonical_code(t));
    CHECK(canonical_code(parse_tree("as:2,1,1,0")) == canonical_code(t));

    CHECK_THROWS_AS(parse_tree("spider"), ParseError);
    CHECK_THROWS_AS(parse_tree("blob:3"), ParseError);
    CHECK_THROWS_AS(parse_tree("spider:3,,1"), ParseError);
    CHECK_THROWS_AS(parse_tree("ds:2,1"), ParseError);
    CHECK_THROWS_AS(parse_tree("as:1,2"), ParseError);
    CHECK_THROWS_AS(parse_tree("spider:3,0"), DomainError);
    CHECK_THROWS_AS(parse_edge_list("3\n0 1\n1"), ParseError);

    CHECK(describe(parse_tree("spider:2,1")) == "path:3");
    CHECK(describe(t) == "spider:3,2,1");
    CHECK(describe(parse_tree("ds:2,1/2,1")) == "ds:2,1/2,1");
}
