#pragma once

// Intersection graphs of grounded and x-grounded L-shapes.
//
// Diagonal grounding: the corner is the bottom of the vertical segment and
// the left end of the horizontal one; all corners lie on one line of
// negative slope.
// x-axis grounding (Gamma convention): the vertical segment rises from
// (x, 0) to the corner (x, h), the horizontal one extends right from the
// corner to (x + w, h).
// Segments are closed, so touching counts as intersecting.

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "bicover/capped.hpp"
#include "bicover/dominance.hpp"
#include "bicover/geometry.hpp"
#include "bicover/graph.hpp"

namespace bicover {

enum class Grounding { diagonal, x_axis };

struct LShape {
    Point2 corner;
    Rational hlen;
    Rational vlen;
    Grounding grounding = Grounding::diagonal;

    static LShape grounded(Rational cx, Rational cy, Rational hlen, Rational vlen) {
        return LShape{{cx, cy}, hlen, vlen, Grounding::diagonal};
    }
    static LShape x_grounded(Rational x, Rational h, Rational w) { return LShape{{x, h}, w, h, Grounding::x_axis}; }

    /// Grounding value of an x-grounded shape.
    const Rational& x() const { return corner.x; }

    Point2 horizontal_end() const { return {corner.x + hlen, corner.y}; }
    Point2 vertical_end() const {
        return grounding == Grounding::diagonal ? Point2{corner.x, corner.y + vlen} : Point2{corner.x, corner.y - vlen};
    }

    friend bool operator==(const LShape&, const LShape&) = default;
};

/// Exact closed-set intersection of two L-shapes as unions of two segments.
inline bool lshapes_intersect(const LShape& a, const LShape& b) {
    const std::array<std::array<Point2, 2>, 2> sa{{{a.corner, a.horizontal_end()}, {a.corner, a.vertical_end()}}};
    const std::array<std::array<Point2, 2>, 2> sb{{{b.corner, b.horizontal_end()}, {b.corner, b.vertical_end()}}};
    for (const auto& s : sa)
        for (const auto& t : sb)
            if (segments_intersect(s[0], s[1], t[0], t[1])) return true;
    return false;
}

inline Graph lshape_graph_oracle(const std::vector<LShape>& shapes) {
    return oracle_edges([&](Vertex u, Vertex v) { return lshapes_intersect(shapes[u], shapes[v]); }, shapes.size());
}

namespace detail {

inline std::vector<Vertex> order_by_x(const std::vector<LShape>& shapes) {
    std::vector<Vertex> order(shapes.size());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return shapes[a].corner.x < shapes[b].corner.x; });
    return order;
}

using LKey = TieKey<Rational>;

// For a left of b, the shapes meet iff a's horizontal segment reaches b's
// vertical line and b's vertical segment reaches a's height:
//   x_b <= x_a + hlen_a  and  top-or-bottom condition on y.
// Both are non-strict, so b-points get bias 0 and a-points bias 1, and the
// relation becomes strict dominance b < a.
template <class BPoint, class APoint>
void cover_lshapes_rec(const std::vector<LShape>& shapes, const std::vector<Vertex>& order, std::size_t lo,
                       std::size_t hi, bool filter_crossing, BPoint&& bpoint, APoint&& apoint,
                       std::vector<Biclique>& out) {
    if (hi - lo < 2) return;
    const std::size_t mid = lo + (hi - lo) / 2;
    const Rational& split = shapes[order[mid]].corner.x;

    BasicBigraphInstance<LKey> inst;
    inst.left.d = inst.right.d = 2;
    std::vector<Vertex> left_ids, right_ids;
    for (std::size_t i = mid; i < hi; ++i) {
        left_ids.push_back(order[i]);
        inst.left.pts.push_back(bpoint(shapes[order[i]]));
    }
    for (std::size_t i = lo; i < mid; ++i) {
        const LShape& a = shapes[order[i]];
        // Only shapes whose horizontal segment crosses the split line can
        // meet anything on the right. The mirror set on the right side is
        // empty here: horizontals extend rightwards from a corner that is
        // already right of the split.
        if (filter_crossing && a.corner.x + a.hlen < split) continue;
        right_ids.push_back(order[i]);
        inst.right.pts.push_back(apoint(a));
    }
    append_mapped(partition_bigraph(inst), left_ids, right_ids, out);
    cover_lshapes_rec(shapes, order, lo, mid, filter_crossing, bpoint, apoint, out);
    cover_lshapes_rec(shapes, order, mid, hi, filter_crossing, bpoint, apoint, out);
}

}  // namespace detail

/// Cover of the intersection graph of grounded L-shapes (corners on a common
/// negatively-sloped line).
inline BicliqueCover cover_grounded_L(const std::vector<LShape>& shapes) {
    for (const auto& s : shapes) {
        if (s.grounding != Grounding::diagonal) throw InputError("expected diagonally grounded L-shapes");
        if (s.hlen < Rational(0) || s.vlen < Rational(0)) throw InputError("negative L-shape extent");
    }
    const auto order = detail::order_by_x(shapes);
    for (std::size_t i = 1; i < order.size(); ++i) {
        const Point2& p = shapes[order[i - 1]].corner;
        const Point2& q = shapes[order[i]].corner;
        if (!(p.x < q.x) || !(q.y < p.y)) throw InputError("corners are not on a negatively-sloped line");
        if (orient(shapes[order[0]].corner, p, q) != 0) throw InputError("corners are not collinear");
    }
    BicliqueCover c;
    c.mode = CoverMode::cover;
    using detail::LKey;
    detail::cover_lshapes_rec(
        shapes, order, 0, shapes.size(), false,
        [](const LShape& b) { return std::vector<LKey>{{b.corner.x, 0}, {-(b.corner.y + b.vlen), 0}}; },
        [](const LShape& a) { return std::vector<LKey>{{a.corner.x + a.hlen, 1}, {-a.corner.y, 1}}; },
        c.bicliques);
    return c;
}

/// Cover of the intersection graph of x-grounded L-shapes (Gamma convention).
inline BicliqueCover cover_x_grounded_L(const std::vector<LShape>& shapes) {
    for (const auto& s : shapes) {
        if (s.grounding != Grounding::x_axis) throw InputError("expected x-grounded L-shapes");
        if (s.hlen < Rational(0) || s.vlen < Rational(0) || s.vlen != s.corner.y)
            throw InputError("x-grounded L-shape must rise from the axis with non-negative extents");
    }
    const auto order = detail::order_by_x(shapes);
    for (std::size_t i = 1; i < order.size(); ++i)
        if (shapes[order[i - 1]].x() == shapes[order[i]].x()) throw InputError("duplicate grounding value");
    BicliqueCover c;
    c.mode = CoverMode::cover;
    using detail::LKey;
    // a left of b meet iff x_b <= x_a + w_a and h_a <= h_b.
    detail::cover_lshapes_rec(
        shapes, order, 0, shapes.size(), true,
        [](const LShape& b) { return std::vector<LKey>{{b.x(), 0}, {-b.corner.y, 0}}; },
        [](const LShape& a) { return std::vector<LKey>{{a.x() + a.hlen, 1}, {-a.corner.y, 1}}; }, c.bicliques);
    return c;
}

}  // namespace bicover
