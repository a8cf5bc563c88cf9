#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace bicover;

namespace {

std::vector<Interval> ivs(std::vector<std::pair<Rational, Rational>> v) {
    std::vector<Interval> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back({v[i].first, v[i].second, static_cast<Vertex>(i)});
    return out;
}

oracle::EdgeSet truth(const std::vector<Interval>& v) {
    return oracle::pairs(v.size(), [&](Vertex a, Vertex b) {
        return oracle::closed_overlap(v[a].lo, v[a].hi, v[b].lo, v[b].hi);
    });
}

oracle::EdgeSet truth(const std::vector<Box>& v) {
    return oracle::pairs(v.size(), [&](Vertex a, Vertex b) {
        for (std::size_t k = 0; k < v[a].d(); ++k)
            if (!oracle::closed_overlap(v[a].lo[k], v[a].hi[k], v[b].lo[k], v[b].hi[k])) return false;
        return true;
    });
}

void audit(const std::vector<Interval>& v) { CHECK(oracle::list_audit_mismatches(v) == 0); }

std::size_t max_list_membership(const AugSegTree& tree, std::size_t n) {
    std::vector<std::size_t> count(n, 0);
    for (const auto& node : tree.nodes()) {
        for (Vertex x : node.long_list) ++count[x];
        for (Vertex x : node.short_list) ++count[x];
    }
    return n ? *std::max_element(count.begin(), count.end()) : 0;
}

}  // namespace

TEST_CASE("augmented tree: empty input") {
    const AugSegTree tree({});
    REQUIRE(tree.nodes().size() == 1);
    CHECK(tree.leaf_count() == 1);
    CHECK_FALSE(tree.root().slab_lo);
    CHECK_FALSE(tree.root().slab_hi);
    CHECK(tree.root().long_list.empty());
    CHECK(tree.root().short_list.empty());
}

TEST_CASE("augmented tree: single interval [1,2]") {
    const AugSegTree tree(ivs({{1, 2}}));
    CHECK(tree.leaf_count() == 3);
    std::size_t longs = 0;
    for (const auto& node : tree.nodes()) {
        // every slab here contains 1 or 2
        CHECK(node.short_list == std::vector<Vertex>{0});
        if (!node.long_list.empty()) {
            ++longs;
            CHECK(node.is_leaf());
            CHECK(node.slab_lo == Rational(1));
            CHECK(node.slab_hi == Rational(2));
        }
    }
    CHECK(longs == 1);
    CHECK(tree.nodes().size() == 5);
}

TEST_CASE("augmented tree: exhaustive list audit for n <= 64") {
    for (std::size_t n = 0; n <= 64; n += 3)
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            INFO("n = " << n << " seed = " << seed);
            audit(gen_intervals(n, seed, 1 + static_cast<std::int64_t>(seed) * 5));
        }
    // heavy ties
    audit(ivs({{1, 1}, {1, 1}, {1, 3}, {0, 1}, {1, 2}, {2, 2}, {0, 4}}));
}

TEST_CASE("augmented tree: per-interval list multiplicity, 1000 intervals") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto v = gen_intervals(1000, seed, 40);
        const AugSegTree tree(v);
        CHECK(max_list_membership(tree, v.size()) <= 6 * (ceil_log2(tree.leaf_count()) + 1));
    }
}

TEST_CASE("cover_intervals examples") {
    CHECK(cover_intervals(ivs({{0, 1}, {2, 3}, {4, 5}})).count() == 0);
    const auto c = cover_intervals(ivs({{1, 5}, {2, 3}, {4, 6}}));
    CHECK(oracle::compare({{0, 1}, {0, 2}}, c).exact(false));

    std::vector<std::pair<Rational, Rational>> star{{0, 10}};
    for (int i = 0; i < 10; ++i) star.emplace_back(Rational(i) + Rational(1, 4), Rational(i) + Rational(3, 4));
    const auto sc = cover_intervals(ivs(star));
    oracle::EdgeSet want;
    for (Vertex i = 1; i <= 10; ++i) want.insert({0, i});
    CHECK(oracle::compare(want, sc).exact(false));
    std::size_t mult = 0;
    for (const auto& b : sc.bicliques)
        mult += std::count(b.left.begin(), b.left.end(), 0u) + std::count(b.right.begin(), b.right.end(), 0u);
    CHECK(mult <= 6 * (ceil_log2(11) + 1));
}

TEST_CASE("cover_intervals: identical point intervals") {
    const auto v = ivs({{3, 3}, {3, 3}, {3, 3}, {1, 3}, {3, 5}, {7, 7}, {7, 7}});
    CHECK(oracle::compare(truth(v), cover_intervals(v)).exact(false));
}

TEST_CASE("cover_intervals: bicliques are sound, sides disjoint") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto v = gen_intervals(150, seed, 1 + static_cast<std::int64_t>(seed % 12));
        const auto c = cover_intervals(v);
        INFO("seed = " << seed);
        CHECK(oracle::compare(truth(v), c).exact(false));
        CHECK(validate_cover(interval_graph_oracle(v, v.size()), c).valid);
        CHECK(c.size() <= 6 * v.size() * (ceil_log2(v.size()) + 1));
        CHECK(max_vertex_multiplicity(c, v.size()) <= 6 * (ceil_log2(v.size()) + 1));
    }
}

TEST_CASE("cover_intervals: owner order of the input is irrelevant") {
    auto v = gen_intervals(80, 5);
    const auto c1 = cover_intervals(v);
    std::reverse(v.begin(), v.end());
    CHECK(cover_intervals(v) == c1);
}

TEST_CASE("cover_intervals: input errors") {
    CHECK_THROWS_AS(cover_intervals(ivs({{2, 1}})), InputError);
    CHECK_THROWS_AS(cover_intervals({Interval{0, 1, 0}, Interval{2, 3, 0}}), InputError);
}

TEST_CASE("cover_boxes examples") {
    const std::vector<Box> b{{{0, 0}, {2, 2}, 0}, {{1, 1}, {3, 3}, 1}, {{5, 5}, {6, 6}, 2}};
    CHECK(truth(b) == oracle::EdgeSet{{0, 1}});
    CHECK(oracle::compare({{0, 1}}, cover_boxes(b, 2)).exact(false));
}

TEST_CASE("cover_boxes at d = 1 equals cover_intervals") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto v = gen_intervals(100, seed);
        std::vector<Box> b;
        for (const auto& iv : v) b.push_back({{iv.lo}, {iv.hi}, iv.owner});
        CHECK(cover_boxes(b, 1) == cover_intervals(v));
    }
}

TEST_CASE("cover_boxes: random boxes in d = 2, 3") {
    for (std::size_t d = 2; d <= 3; ++d)
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            const auto b = gen_boxes(128, d, seed);
            INFO("d = " << d << " seed = " << seed);
            CHECK(oracle::compare(truth(b), cover_boxes(b, d)).exact(false));
        }
}

TEST_CASE("cover_boxes: flat and repeated boxes") {
    std::vector<Box> b{{{0, 0}, {0, 4}, 0}, {{0, 1}, {0, 2}, 1}, {{0, 3}, {0, 3}, 2}, {{0, 3}, {0, 3}, 3},
                       {{-1, 2}, {0, 2}, 4}, {{1, 0}, {1, 9}, 5},  {{0, 5}, {1, 5}, 6}};
    CHECK(oracle::compare(truth(b), cover_boxes(b, 2)).exact(false));
}

TEST_CASE("cover_boxes: input errors") {
    CHECK_THROWS_AS(cover_boxes({{{0, 0}, {1, 1}, 0}}, 3), InputError);
    CHECK_THROWS_AS(cover_boxes({}, 0), InputError);
    CHECK_THROWS_AS(cover_boxes({{{2}, {1}, 0}}, 1), InputError);
}
