#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace bicover;

namespace {

OrderedGraph ordered(std::size_t n, std::vector<Edge> e) { return OrderedGraph(Graph(n, std::move(e), true)); }

oracle::EdgeSet dominance_pairs(const CappedEmbedding& emb) {
    oracle::EdgeSet s;
    for (std::size_t i = 0; i < emb.left_ids.size(); ++i)
        for (std::size_t j = 0; j < emb.right_ids.size(); ++j) {
            const auto& a = emb.instance.left.pts[i];
            const auto& b = emb.instance.right.pts[j];
            if (a[0] < b[0] && a[1] < b[1]) s.insert(oracle::norm(emb.left_ids[i], emb.right_ids[j]));
        }
    return s;
}

oracle::EdgeSet cut_edges(const Graph& g, std::size_t cut) {
    oracle::EdgeSet s;
    for (const auto& [u, v] : g.edges())
        if (u < cut && v >= cut) s.insert({u, v});
    return s;
}

}  // namespace

TEST_CASE("check_capped examples") {
    CHECK(check_capped(ordered(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})).capped);
    const auto r = check_capped(ordered(4, {{0, 2}, {1, 3}}));
    CHECK_FALSE(r.capped);
    REQUIRE(r.violation);
    CHECK(*r.violation == Quadruple{0, 1, 2, 3});
    CHECK(check_capped(ordered(5, {})).capped);
}

TEST_CASE("check_capped agrees with the quadruple search") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto g = gen_random_graph(4 + seed % 14, 0.1 + 0.05 * static_cast<double>(seed % 8), seed, true);
        const auto mine = check_capped(OrderedGraph(g));
        const auto ref = oracle::x_violation(g);
        INFO("seed = " << seed);
        CHECK(mine.capped == !ref.has_value());
        if (ref) CHECK(*mine.violation == *ref);
    }
}

TEST_CASE("X-property closure reaches a capped fixpoint") {
    CHECK(gen_capped_closure(10, 0.0, 1).m() == 0);
    CHECK(gen_capped_closure(10, 1.0, 1).m() == 45);
    const auto a = gen_capped_closure(6, 0.3, 42);
    const auto b = gen_capped_closure(6, 0.3, 42);
    CHECK(a == b);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto g = gen_capped_closure(20, 0.15, seed);
        CHECK_FALSE(oracle::x_violation(g).has_value());
        // closure only adds edges
        const auto base = gen_random_graph(20, 0.15, seed, true);
        for (const auto& e : base.edges()) CHECK(g.has_edge(e.first, e.second));
    }
}

TEST_CASE("embed_capped_bigraph example") {
    const auto g = ordered(4, {{0, 2}, {0, 3}, {1, 3}});
    const auto e = embed_capped_bigraph(g, 2);
    REQUIRE(e.left_ids == std::vector<Vertex>{0, 1});
    REQUIRE(e.right_ids == std::vector<Vertex>{2, 3});
    CHECK(e.instance.left.pts == std::vector<std::vector<std::int64_t>>{{0, 3}, {2, 5}});
    CHECK(e.instance.right.pts == std::vector<std::vector<std::int64_t>>{{1, 4}, {3, 6}});
    CHECK(dominance_pairs(e) == oracle::EdgeSet{{0, 2}, {0, 3}, {1, 3}});
}

TEST_CASE("embed_capped_bigraph edge cases") {
    const auto empty = embed_capped_bigraph(ordered(4, {{0, 1}, {2, 3}}), 2);
    CHECK(empty.instance.left.pts.empty());
    CHECK(empty.instance.right.pts.empty());
    CHECK(empty.isolated.size() == 4);
    const auto one = embed_capped_bigraph(ordered(2, {{0, 1}}), 1);
    CHECK(dominance_pairs(one) == oracle::EdgeSet{{0, 1}});
    CHECK_THROWS_AS(embed_capped_bigraph(ordered(2, {}), 3), InputError);
}

TEST_CASE("embed_capped_bigraph round trip on random capped graphs") {
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const std::size_t n = 8 + seed % 40;
        const auto g = gen_capped_closure(n, 0.12, seed);
        const OrderedGraph og(g);
        for (std::size_t cut = 0; cut <= n; cut += 1 + n / 5)
            CHECK(dominance_pairs(embed_capped_bigraph(og, cut)) == cut_edges(g, cut));
    }
}

TEST_CASE("cover_capped examples") {
    std::vector<Edge> path;
    for (Vertex i = 0; i + 1 < 8; ++i) path.emplace_back(i, i + 1);
    const auto pg = ordered(8, path);
    CHECK(oracle::compare(oracle::edges_of(pg.graph()), cover_capped(pg)).exact(false));
    const auto g = ordered(4, {{0, 2}, {0, 3}, {1, 3}});
    CHECK(oracle::compare(oracle::edges_of(g.graph()), cover_capped(g)).exact(false));
}

TEST_CASE("cover_capped strict mode reports the violation") {
    const auto g = ordered(4, {{0, 2}, {1, 3}});
    try {
        cover_capped(g);
        FAIL("expected NotCappedError");
    } catch (const NotCappedError& e) {
        CHECK(e.violation == Quadruple{0, 1, 2, 3});
    }
    CHECK_NOTHROW(cover_capped(g, false));
    CHECK_THROWS_AS(OrderedGraph(Graph(3, {})), InputError);
}

TEST_CASE("cover_capped exact on random closures") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto g = gen_capped_closure(20 + seed * 4, 0.05, seed);
        CHECK(oracle::compare(oracle::edges_of(g), cover_capped(OrderedGraph(g))).exact(false));
    }
}

TEST_CASE("terrain visibility example") {
    const std::vector<TerrainPoint> pts{{0, 0}, {1, 5}, {2, 0}, {3, 5}, {4, 0}};
    const oracle::EdgeSet want{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 3}};
    CHECK(oracle::terrain(pts) == want);
    CHECK(oracle::edges_of(terrain_visibility(pts)) == want);
    CHECK(oracle::edges_of(terrain_visibility_bruteforce(pts)) == want);
    CHECK(gen_terrain(2, 1).graph.edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("terrain visibility: sweep, brute force and oracle agree") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto t = gen_terrain(40 + seed, seed);
        CHECK(oracle::edges_of(t.graph) == oracle::terrain(t.points));
        CHECK(terrain_visibility_bruteforce(t.points) == t.graph);
    }
}

TEST_CASE("terrain graphs are capped and covered exactly") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto t = gen_terrain(64, seed);
        const OrderedGraph og(t.graph);
        CHECK(check_capped(og).capped);
        const auto c = cover_capped(og);
        CHECK(oracle::compare(oracle::edges_of(t.graph), c).exact(false));
        const auto cov = oracle::coverage(c);
        for (Vertex i = 0; i + 1 < 64; ++i) CHECK(cov.count({i, i + 1}));
    }
}

TEST_CASE("terrain input errors and determinism") {
    CHECK_THROWS_AS(terrain_visibility({{0, 0}, {0, 1}}), InputError);
    CHECK_THROWS_AS(gen_terrain(1, 0), InputError);
    CHECK(gen_terrain(100, 3).points == gen_terrain(100, 3).points);
    CHECK_FALSE(gen_terrain(100, 3).graph == gen_terrain(100, 4).graph);
}
