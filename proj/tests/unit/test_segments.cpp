#include "catch_amalgamated.hpp"
#include "oracles.hpp"

using namespace bicover;

namespace {

ColoredSegment seg(Rational x1, Rational y1, Rational x2, Rational y2, Color c) {
    return ColoredSegment::make({x1, y1}, {x2, y2}, c);
}

oracle::EdgeSet truth(const std::vector<ColoredSegment>& s) {
    return oracle::pairs(s.size(), [&](Vertex u, Vertex v) {
        return s[u].color != s[v].color &&
               oracle::seg_meet({s[u].a.x, s[u].a.y}, {s[u].b.x, s[u].b.y}, {s[v].a.x, s[v].a.y}, {s[v].b.x, s[v].b.y});
    });
}

void check_exact(const std::vector<ColoredSegment>& s) {
    const auto want = truth(s);
    CHECK(oracle::edges_of(bichromatic_oracle(s)) == want);
    CHECK(oracle::compare(want, cover_bichromatic_segments(s)).exact(false));
}

}  // namespace

TEST_CASE("oracle segment test handles points") {
    CHECK_FALSE(oracle::seg_meet({1, 0}, {1, 0}, {0, 1}, {2, 1}));
    CHECK(oracle::seg_meet({1, 1}, {1, 1}, {0, 0}, {2, 2}));
    CHECK(oracle::seg_meet({0, 0}, {2, 2}, {2, 2}, {3, 0}));
}

TEST_CASE("segments: proper crossing") {
    const std::vector<ColoredSegment> s{seg(0, 0, 2, 2, Color::red), seg(0, 2, 2, 0, Color::blue)};
    const auto c = cover_bichromatic_segments(s);
    CHECK(oracle::compare({{0, 1}}, c).exact(false));
    CHECK(oracle::compare({{0, 1}}, cover_bichromatic_segments({s[0]}, {s[1]})).exact(false));
}

TEST_CASE("segments: separated strips give nothing") {
    const std::vector<ColoredSegment> s{seg(0, 0, 1, 5, Color::red), seg(0, 1, 1, 7, Color::red),
                                        seg(3, 0, 4, 5, Color::blue), seg(3, 6, 4, 8, Color::blue)};
    CHECK(cover_bichromatic_segments(s).count() == 0);
}

TEST_CASE("segments: touching, vertical and point cases") {
    check_exact({seg(0, 0, 2, 0, Color::red), seg(2, 0, 4, 3, Color::blue)});             // shared endpoint
    check_exact({seg(0, 0, 4, 0, Color::red), seg(2, -1, 2, 1, Color::blue)});            // vertical crossing
    check_exact({seg(0, 0, 4, 0, Color::red), seg(2, 0, 2, 3, Color::blue)});             // T-junction
    check_exact({seg(1, 0, 1, 2, Color::red), seg(1, 2, 1, 5, Color::blue)});             // collinear verticals touching
    check_exact({seg(1, 0, 1, 2, Color::red), seg(1, 3, 1, 5, Color::blue)});             // separated verticals
    check_exact({seg(0, 0, 4, 4, Color::red), seg(2, 2, 2, 2, Color::blue)});             // point on segment
    check_exact({seg(0, 0, 4, 4, Color::red), seg(2, 3, 2, 3, Color::blue)});             // point off segment
    check_exact({seg(1, 1, 1, 1, Color::red), seg(1, 1, 1, 1, Color::blue)});             // equal points
    check_exact({seg(0, 0, 1, 0, Color::red), seg(2, 0, 3, 0, Color::blue)});             // collinear apart
    check_exact({seg(0, 0, 6, 0, Color::red), seg(0, 1, 6, 1, Color::red), seg(3, -1, 3, 2, Color::blue),
                 seg(4, 3, 6, -2, Color::blue)});
}

TEST_CASE("segments: strict mode rejects bad input") {
    CHECK_THROWS_AS(cover_bichromatic_segments({seg(0, 0, 2, 2, Color::red), seg(0, 2, 2, 0, Color::red)}), InputError);
    CHECK_THROWS_AS(cover_bichromatic_segments({seg(0, 0, 2, 2, Color::red), seg(1, 1, 3, 3, Color::blue)}),
                    DegeneracyError);
    CHECK_NOTHROW(cover_bichromatic_segments({seg(0, 0, 2, 2, Color::red), seg(0, 2, 2, 0, Color::red)}, false));
}

TEST_CASE("segments: random disjoint families") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto s = gen_segments(50, 50, seed);
        INFO("seed = " << seed);
        REQUIRE_NOTHROW(validate_segments(s));
        check_exact(s);
    }
}

TEST_CASE("segments: long segments through many slabs") {
    // reds: horizontal rungs; blues: long sloped and vertical segments
    std::vector<ColoredSegment> s;
    for (int i = 0; i < 20; ++i) s.push_back(seg(i % 3, 2 * i, 30 - i % 5, 2 * i, Color::red));
    for (int j = 0; j < 10; ++j) s.push_back(seg(3 * j, -1, 3 * j + 1, 41, Color::blue));
    s.push_back(seg(29, -5, 29, 50, Color::blue));
    check_exact(s);
}

TEST_CASE("segments: generator is deterministic and disjoint per colour") {
    const auto a = gen_segments(40, 30, 9);
    CHECK(a == gen_segments(40, 30, 9));
    CHECK(std::count_if(a.begin(), a.end(), [](const auto& s) { return s.color == Color::red; }) == 40);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i].color == a[j].color)
                CHECK_FALSE(oracle::seg_meet({a[i].a.x, a[i].a.y}, {a[i].b.x, a[i].b.y}, {a[j].a.x, a[j].a.y},
                                             {a[j].b.x, a[j].b.y}));
}
