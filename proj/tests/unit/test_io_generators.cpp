#include <sstream>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace bicover;

namespace {

Instance reparse(const Instance& inst) {
    std::istringstream in(to_text(inst));
    return read_instance(in);
}

Instance parse(const std::string& text) {
    std::istringstream in(text);
    return read_instance(in);
}

}  // namespace

TEST_CASE("rng is reproducible and in range") {
    Rng a(5), b(5), c(6);
    bool differs = false;
    for (int i = 0; i < 1000; ++i) {
        const auto x = a.uniform(-3, 9);
        CHECK(x == b.uniform(-3, 9));
        CHECK(x >= -3);
        CHECK(x <= 9);
        differs = differs || x != c.uniform(-3, 9);
    }
    CHECK(differs);
    // reference value of the engine itself
    CHECK(Rng(0).next() == std::mt19937_64(0)());
    CHECK_THROWS_AS(Rng(1).uniform(2, 1), InputError);
}

TEST_CASE("random graphs") {
    CHECK(gen_random_graph(10, 0, 1).m() == 0);
    CHECK(gen_random_graph(10, 1, 1).m() == 45);
    CHECK(gen_random_graph(50, 0.3, 7) == gen_random_graph(50, 0.3, 7));
    CHECK(gen_random_graph(5, 0.5, 1, true).ordered());
}

TEST_CASE("generators are deterministic") {
    CHECK(gen_intervals(100, 7) == gen_intervals(100, 7));
    CHECK_FALSE(gen_intervals(100, 7) == gen_intervals(100, 8));
    CHECK(gen_intervals(0, 1).empty());
    CHECK(gen_boxes(50, 3, 2) == gen_boxes(50, 3, 2));
    CHECK(gen_lshapes(30, Grounding::x_axis, 4) == gen_lshapes(30, Grounding::x_axis, 4));
    CHECK(gen_points(20, 3, 10, 1) == gen_points(20, 3, 10, 1));
    const auto s = gen_semilinear(20, 2, 2, 2, 3);
    CHECK(to_text(Instance(s)) == to_text(Instance(gen_semilinear(20, 2, 2, 2, 3))));
}

TEST_CASE("gen_boxes(100, 2) matches the pairwise oracle") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto b = gen_boxes(100, 2, seed);
        const auto want = oracle::pairs(100, [&](Vertex u, Vertex v) {
            return oracle::closed_overlap(b[u].lo[0], b[u].hi[0], b[v].lo[0], b[v].hi[0]) &&
                   oracle::closed_overlap(b[u].lo[1], b[u].hi[1], b[v].lo[1], b[v].hi[1]);
        });
        CHECK(oracle::edges_of(box_graph_oracle(b, 100)) == want);
    }
}

TEST_CASE("gen_erdos counts") {
    const auto e1 = gen_erdos(1);
    CHECK(e1.config.points.size() == 2);
    CHECK(e1.config.lines.size() == 1);
    CHECK(e1.incidence.m() == 1);
    CHECK(e1.incidence.has_edge(1, 2));  // point (1,2) on y = x + 1

    const auto e2 = gen_erdos(2);
    CHECK(e2.config.points.size() == 16);
    CHECK(e2.config.lines.size() == 8);
    CHECK(e2.incidence.m() == 16);

    for (std::size_t k = 1; k <= 4; ++k) {
        const auto e = gen_erdos(k);
        // direct count of on-line pairs
        std::size_t count = 0;
        for (const auto& [x, y] : e.config.points)
            for (const auto& [m, b] : e.config.lines) count += y == m * x + b;
        CHECK(count == k * k * k * k);
        CHECK(e.incidence == incidence_graph(e.config));
    }
}

TEST_CASE("gen_unit_disk_incidence") {
    const auto u1 = gen_unit_disk_incidence(1);
    CHECK(u1.graph.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
    CHECK_FALSE(u1.note.empty());
    const auto u2 = gen_unit_disk_incidence(2);
    const auto e2 = gen_erdos(2);
    std::size_t count = 0;
    for (const auto& [x, y] : e2.config.points)
        for (const auto& [m, b] : e2.config.lines) count += y <= m * x + b;
    CHECK(u2.graph.m() == count);
    CHECK(gen_unit_disk_incidence(0).graph.m() == 0);
}

TEST_CASE("instance round trips") {
    std::vector<Instance> all;
    all.emplace_back(gen_random_graph(12, 0.3, 1, true));
    all.emplace_back(gen_points(10, 3, 5, 1));
    all.emplace_back(gen_bipoints(4, 6, 2, 5, 1));
    all.emplace_back(gen_semilinear(8, 2, 2, 3, 1));
    all.emplace_back(LShapeSet{Grounding::diagonal, gen_lshapes(9, Grounding::diagonal, 1)});
    all.emplace_back(LShapeSet{Grounding::x_axis, gen_lshapes(9, Grounding::x_axis, 1)});
    all.emplace_back(IntervalSet{gen_intervals(15, 1)});
    all.emplace_back(BoxSet{3, gen_boxes(11, 3, 1)});
    all.emplace_back(SegmentSet{gen_segments(5, 6, 1)});
    all.emplace_back(TerrainSet{gen_terrain(10, 1).points});
    all.emplace_back(gen_erdos(2).config);
    for (const auto& inst : all) {
        INFO(instance_kind(inst));
        const auto back = reparse(inst);
        CHECK(back.index() == inst.index());
        CHECK(to_text(back) == to_text(inst));
    }
}

TEST_CASE("rational coordinates survive a round trip") {
    const auto inst = parse("intervals 2\n1/3 5/2\n-7/4 0\n");
    const auto& set = std::get<IntervalSet>(inst);
    CHECK(set.intervals[0].lo == Rational(1, 3));
    CHECK(set.intervals[1].lo == Rational(-7, 4));
    CHECK(to_text(reparse(inst)) == to_text(inst));
}

TEST_CASE("cover round trip") {
    const auto c = cover_intervals(gen_intervals(50, 3));
    std::istringstream in(to_text(c));
    const auto back = read_cover(in);
    CHECK(back == c);
    auto p = cover_complete(7);
    std::istringstream in2(to_text(p));
    CHECK(read_cover(in2) == p);
}

TEST_CASE("format errors") {
    CHECK_THROWS_AS(parse("nonsense 3"), FormatError);
    CHECK_THROWS_AS(parse("graph 3 1 0\n0 5\n"), FormatError);
    CHECK_THROWS_AS(parse("intervals 2\n1 2\n"), FormatError);
    CHECK_THROWS_AS(parse("intervals 1\n1 2\n3\n"), FormatError);
    CHECK_THROWS_AS(parse("intervals 1\n3 2\n"), FormatError);
    CHECK_THROWS_AS(parse("segments 1\n0 0 1 1 green\n"), FormatError);
    CHECK_THROWS_AS(parse("terrain 2\n0 0\n1/2 1\n"), FormatError);
    CHECK_THROWS_AS(parse("semilinear 1 1 1 1\n0 <= 1\n0 1\n0\n"), FormatError);
    try {
        parse("semilinear 1 1 1 1\n0 <= 1\n0 1\n0\n");
    } catch (const FormatError& e) {
        CHECK(std::string(e.what()).find("strict DNF") != std::string::npos);
    }
}

TEST_CASE("certificate text") {
    const auto e = gen_erdos(2);
    const auto c = cover_point_halfplane(e.config);
    std::ostringstream a, b;
    write_certificate(a, charging_certificate(e.config, &c));
    write_certificate(b, charging_certificate(e.config, &c));
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("kind charging\n", 0) == 0);
    CHECK(a.str().find("bound 16\n") != std::string::npos);
}
