#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace bicover;

namespace {

oracle::EdgeSet truth(const std::vector<LShape>& shapes) {
    return oracle::pairs(shapes.size(), [&](Vertex u, Vertex v) { return oracle::lshape_meet(shapes[u], shapes[v]); });
}

BicliqueCover cover(const std::vector<LShape>& shapes) {
    return shapes.empty() || shapes[0].grounding == Grounding::diagonal ? cover_grounded_L(shapes)
                                                                          : cover_x_grounded_L(shapes);
}

}  // namespace

TEST_CASE("grounded L: triangle example") {
    const std::vector<LShape> s{LShape::grounded(0, 0, 3, 2), LShape::grounded(1, -1, 3, 2),
                                LShape::grounded(2, -2, 1, 5)};
    const oracle::EdgeSet want{{0, 1}, {0, 2}, {1, 2}};
    CHECK(truth(s) == want);
    CHECK(oracle::edges_of(lshape_graph_oracle(s)) == want);
    CHECK(oracle::compare(want, cover_grounded_L(s)).exact(false));
}

TEST_CASE("grounded L: degenerate point shapes") {
    const std::vector<LShape> s{LShape::grounded(0, 0, 0, 0), LShape::grounded(1, -1, 0, 0),
                                LShape::grounded(3, -3, 0, 0)};
    CHECK(lshape_graph_oracle(s).m() == 0);
    CHECK(cover_grounded_L(s).count() == 0);
}

TEST_CASE("grounded L: order of input does not matter") {
    std::vector<LShape> s{LShape::grounded(2, -2, 1, 5), LShape::grounded(0, 0, 3, 2), LShape::grounded(1, -1, 3, 2)};
    CHECK(oracle::compare(truth(s), cover_grounded_L(s)).exact(false));
}

TEST_CASE("grounded L: input errors") {
    CHECK_THROWS_AS(cover_grounded_L({LShape::grounded(0, 0, 1, 1), LShape::grounded(1, 1, 1, 1)}), InputError);
    CHECK_THROWS_AS(
        cover_grounded_L({LShape::grounded(0, 0, 1, 1), LShape::grounded(1, -1, 1, 1), LShape::grounded(2, -3, 1, 1)}),
        InputError);
    CHECK_THROWS_AS(cover_grounded_L({LShape::grounded(0, 0, -1, 1)}), InputError);
    CHECK_THROWS_AS(cover_grounded_L({LShape::x_grounded(0, 1, 1)}), InputError);
}

TEST_CASE("x-grounded L: examples") {
    const std::vector<LShape> none{LShape::x_grounded(0, 3, 5), LShape::x_grounded(2, 1, 1), LShape::x_grounded(4, 2, 3)};
    CHECK(truth(none).empty());
    CHECK(cover_x_grounded_L(none).count() == 0);
    const std::vector<LShape> one{LShape::x_grounded(0, 1, 5), LShape::x_grounded(3, 4, 1)};
    CHECK(truth(one) == oracle::EdgeSet{{0, 1}});
    CHECK(oracle::compare({{0, 1}}, cover_x_grounded_L(one)).exact(false));
    CHECK(cover_x_grounded_L({LShape::x_grounded(1, 1, 1)}).count() == 0);
}

TEST_CASE("x-grounded L: touching endpoints count") {
    // horizontal of 0 ends exactly on the vertical of 1; equal heights
    const std::vector<LShape> s{LShape::x_grounded(0, 2, 3), LShape::x_grounded(3, 2, 1)};
    CHECK(truth(s) == oracle::EdgeSet{{0, 1}});
    CHECK(oracle::compare(truth(s), cover_x_grounded_L(s)).exact(false));
}

TEST_CASE("x-grounded L: input errors") {
    CHECK_THROWS_AS(cover_x_grounded_L({LShape::x_grounded(1, 1, 1), LShape::x_grounded(1, 2, 1)}), InputError);
    CHECK_THROWS_AS(cover_x_grounded_L({LShape::grounded(0, 0, 1, 1)}), InputError);
    LShape bent = LShape::x_grounded(0, 3, 1);
    bent.vlen = 2;  // does not reach the axis
    CHECK_THROWS_AS(cover_x_grounded_L({bent}), InputError);
}

TEST_CASE("L-shapes: random instances match the geometric oracle") {
    for (auto mode : {Grounding::diagonal, Grounding::x_axis})
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto s = gen_lshapes(40 + 4 * seed, mode, seed);
            INFO("seed = " << seed);
            const auto want = truth(s);
            CHECK(oracle::edges_of(lshape_graph_oracle(s)) == want);
            CHECK(oracle::compare(want, cover(s)).exact(false));
        }
}

TEST_CASE("L-shapes: 128 random shapes, rational coordinates") {
    Rng rng(8);
    std::vector<LShape> diag;
    Rational pos(0);
    for (int i = 0; i < 128; ++i) {
        pos = pos + Rational(rng.uniform(1, 6), 2);
        diag.push_back(LShape::grounded(pos, -pos, Rational(rng.uniform(0, 40), 3), Rational(rng.uniform(0, 40), 3)));
    }
    CHECK(oracle::compare(truth(diag), cover_grounded_L(diag)).exact(false));
    std::vector<LShape> xs;
    for (int i = 0; i < 128; ++i)
        xs.push_back(LShape::x_grounded(Rational(3 * i + rng.uniform(0, 2), 2), Rational(rng.uniform(0, 60), 2),
                                        Rational(rng.uniform(0, 30), 1)));
    CHECK(oracle::compare(truth(xs), cover_x_grounded_L(xs)).exact(false));
}
