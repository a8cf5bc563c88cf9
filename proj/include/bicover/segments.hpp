#pragma once

// Intersection bigraph of red and blue segments, each colour pairwise
// disjoint. Built on a segment tree over the x-projections: inside a node's
// slab the spanning (long) segments of one colour are totally ordered from
// bottom to top, so meeting a long segment of index k reduces to an index
// range test lo <= k < hi, i.e. a 2-dimensional dominance relation.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bicover/dominance.hpp"
#include "bicover/geometry.hpp"
#include "bicover/graph.hpp"
#include "bicover/segment_tree.hpp"

namespace bicover {

enum class Color { red, blue };

inline const char* to_string(Color c) { return c == Color::red ? "red" : "blue"; }

struct ColoredSegment {
    Point2 a;  // a.x <= b.x
    Point2 b;
    Color color = Color::red;

    static ColoredSegment make(Point2 p, Point2 q, Color color) {
        if (q < p) std::swap(p, q);
        return ColoredSegment{p, q, color};
    }
    bool vertical() const { return a.x == b.x; }
    friend bool operator==(const ColoredSegment&, const ColoredSegment&) = default;
};

class DegeneracyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline bool segments_meet(const ColoredSegment& s, const ColoredSegment& t) {
    return segments_intersect(s.a, s.b, t.a, t.b);
}

/// Same-colour segments must be disjoint; a red and a blue segment must not
/// overlap along a common line. O(n^2).
inline void validate_segments(const std::vector<ColoredSegment>& segs) {
    for (std::size_t i = 0; i < segs.size(); ++i) {
        if (segs[i].b < segs[i].a) throw InputError("segment " + std::to_string(i) + " endpoints not ordered");
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            if (segs[i].color == segs[j].color) {
                if (segments_meet(segs[i], segs[j]))
                    throw InputError(std::string(to_string(segs[i].color)) + " segments " + std::to_string(i) +
                                     " and " + std::to_string(j) + " intersect");
            } else if (collinear_overlap(segs[i].a, segs[i].b, segs[j].a, segs[j].b)) {
                throw DegeneracyError("segments " + std::to_string(i) + " and " + std::to_string(j) +
                                      " overlap collinearly");
            }
        }
    }
}

/// Red-blue intersection graph; vertex i is segs[i].
inline Graph bichromatic_oracle(const std::vector<ColoredSegment>& segs) {
    return oracle_edges(
        [&](Vertex u, Vertex v) { return segs[u].color != segs[v].color && segments_meet(segs[u], segs[v]); },
        segs.size());
}

namespace detail {

// Ordinate of non-vertical segment s at abscissa x (within its x-range).
inline Rational ordinate_at(const ColoredSegment& s, const Rational& x) {
    if (x == s.a.x) return s.a.y;
    if (x == s.b.x) return s.b.y;
    return s.a.y + (s.b.y - s.a.y) * ((x - s.a.x) / (s.b.x - s.a.x));
}

class BichromaticCover {
public:
    BichromaticCover(const std::vector<ColoredSegment>& segs, std::vector<Biclique>& out) : segs_(segs), out_(out) {}

    void run() {
        std::vector<Interval> proj;
        proj.reserve(segs_.size());
        for (std::size_t i = 0; i < segs_.size(); ++i)
            proj.push_back(Interval{segs_[i].a.x, segs_[i].b.x, static_cast<Vertex>(i)});
        const AugSegTree tree(proj);
        for (const auto& v : tree.nodes()) {
            if (v.long_list.empty()) continue;
            std::vector<Vertex> short_red, short_blue, long_red, long_blue;
            for (Vertex id : v.short_list) (segs_[id].color == Color::red ? short_red : short_blue).push_back(id);
            for (Vertex id : v.long_list) (segs_[id].color == Color::red ? long_red : long_blue).push_back(id);
            // Long segments span the slab, so the slab is bounded here.
            const Rational x0 = *v.slab_lo;
            const Rational x1 = *v.slab_hi;
            std::vector<Vertex> reds;
            std::set_union(short_red.begin(), short_red.end(), long_red.begin(), long_red.end(),
                           std::back_inserter(reds));
            // Short and long reds against long blues, short blues against long
            // reds. Long-long pairs meeting inside the slab are only caught by
            // the first call.
            node_pairs(reds, long_blue, x0, x1);
            node_pairs(short_blue, long_red, x0, x1);
        }
        vertical_pairs();
    }

private:
    // Bicliques of {s in probes, l in longs : s meets l inside [x0, x1]}.
    void node_pairs(const std::vector<Vertex>& probes, std::vector<Vertex> longs, const Rational& x0,
                    const Rational& x1) {
        if (probes.empty() || longs.empty()) return;
        std::vector<Rational> key(longs.size());
        std::vector<std::size_t> order(longs.size());
        for (std::size_t i = 0; i < longs.size(); ++i) {
            key[i] = ordinate_at(segs_[longs[i]], x0);
            order[i] = i;
        }
        std::sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) { return key[p] < key[q]; });
        std::vector<Vertex> sorted(longs.size());
        for (std::size_t i = 0; i < order.size(); ++i) sorted[i] = longs[order[i]];

        // below_or_on(q): number of longs l with l(q.x) <= q.y; strictly_below: l(q.x) < q.y.
        auto count = [&](const Point2& q, bool inclusive) {
            std::size_t lo = 0, hi = sorted.size();
            while (lo < hi) {
                const std::size_t mid = lo + (hi - lo) / 2;
                const auto& l = segs_[sorted[mid]];
                const int o = orient(l.a, l.b, q);  // > 0: q above l
                if (o > 0 || (inclusive && o == 0)) lo = mid + 1;
                else hi = mid;
            }
            return static_cast<std::int64_t>(lo);
        };

        BasicBigraphInstance<std::int64_t> inst;
        inst.left.d = inst.right.d = 2;
        std::vector<Vertex> probe_ids;
        for (Vertex id : probes) {
            const auto& s = segs_[id];
            const Rational a = std::max(s.a.x, x0);
            const Rational c = std::min(s.b.x, x1);
            if (c < a) continue;
            Point2 p, q;
            if (s.vertical()) {
                p = {a, std::min(s.a.y, s.b.y)};
                q = {a, std::max(s.a.y, s.b.y)};
            } else {
                p = {a, ordinate_at(s, a)};
                q = {c, ordinate_at(s, c)};
            }
            // Long k meets s iff it is neither strictly below both clipped
            // endpoints nor strictly above both.
            const std::int64_t lo = std::min(count(p, false), count(q, false));
            const std::int64_t hi = std::max(count(p, true), count(q, true));
            if (lo >= hi) continue;
            probe_ids.push_back(id);
            inst.left.pts.push_back({lo - 1, -hi});
        }
        if (probe_ids.empty()) return;
        for (std::size_t k = 0; k < sorted.size(); ++k) {
            const auto kk = static_cast<std::int64_t>(k);
            inst.right.pts.push_back({kk, -kk});
        }
        append_mapped(partition_bigraph(inst), probe_ids, sorted, out_);
    }

    // Vertical red and blue segments on a common line only meet each other
    // there and are never long anywhere.
    void vertical_pairs() {
        std::map<Rational, std::vector<Interval>> by_x;
        for (std::size_t i = 0; i < segs_.size(); ++i)
            if (segs_[i].vertical()) {
                const auto& s = segs_[i];
                by_x[s.a.x].push_back(
                    Interval{std::min(s.a.y, s.b.y), std::max(s.a.y, s.b.y), static_cast<Vertex>(i)});
            }
        for (auto& [x, ivs] : by_x) {
            if (ivs.size() < 2) continue;
            auto c = cover_intervals(std::move(ivs));
            for (const auto& b : c.bicliques) {
                for (const Color first : {Color::red, Color::blue}) {
                    Biclique piece;
                    for (Vertex u : b.left)
                        if (segs_[u].color == first) piece.left.push_back(u);
                    for (Vertex w : b.right)
                        if (segs_[w].color != first) piece.right.push_back(w);
                    if (!piece.left.empty() && !piece.right.empty()) out_.push_back(std::move(piece));
                }
            }
        }
    }

    const std::vector<ColoredSegment>& segs_;
    std::vector<Biclique>& out_;
};

}  // namespace detail

/// Cover of the red-blue intersection graph. Vertex i is segs[i]. With
/// `strict`, colour-class disjointness and the absence of collinear red-blue
/// overlaps are checked first.
inline BicliqueCover cover_bichromatic_segments(const std::vector<ColoredSegment>& segs, bool strict = true) {
    if (strict) validate_segments(segs);
    BicliqueCover c;
    c.mode = CoverMode::cover;
    detail::BichromaticCover(segs, c.bicliques).run();
    return c;
}

/// Reds get ids 0..|reds|-1, blues follow.
inline BicliqueCover cover_bichromatic_segments(const std::vector<ColoredSegment>& reds,
                                                const std::vector<ColoredSegment>& blues, bool strict = true) {
    std::vector<ColoredSegment> all;
    all.reserve(reds.size() + blues.size());
    for (auto s : reds) {
        s.color = Color::red;
        all.push_back(s);
    }
    for (auto s : blues) {
        s.color = Color::blue;
        all.push_back(s);
    }
    return cover_bichromatic_segments(all, strict);
}

}  // namespace bicover
