#pragma once

// Seeded instance generators. All randomness comes from Rng below, so an
// instance is a pure function of (parameters, seed).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bicover/capped.hpp"
#include "bicover/compressed.hpp"
#include "bicover/dominance.hpp"
#include "bicover/geometry.hpp"
#include "bicover/graph.hpp"
#include "bicover/lshapes.hpp"
#include "bicover/segment_tree.hpp"
#include "bicover/segments.hpp"
#include "bicover/semilinear.hpp"

namespace bicover {

/// std::mt19937_64 seeded with the seed value itself. Integers in [lo, hi]
/// by rejection of the biased tail followed by reduction modulo the range;
/// probabilities from the top 53 bits of one draw. No std distributions are
/// used, since their algorithms differ between standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        if (hi < lo) throw InputError("empty range");
        const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        if (range == 0) return static_cast<std::int64_t>(next());  // full 64-bit range
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
        std::uint64_t x;
        do x = next();
        while (x >= limit);
        return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

inline Graph gen_random_graph(std::size_t n, double p, std::uint64_t seed, bool ordered = false) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return Graph(n, std::move(edges), ordered);
}

inline PointSet gen_points(std::size_t n, std::size_t d, std::int64_t range, std::uint64_t seed) {
    Rng rng(seed);
    PointSet ps;
    ps.d = d;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> p;
        for (std::size_t k = 0; k < d; ++k) p.emplace_back(rng.uniform(0, range - 1));
        ps.pts.push_back(std::move(p));
    }
    return ps;
}

inline BigraphInstance gen_bipoints(std::size_t n_left, std::size_t n_right, std::size_t d, std::int64_t range,
                                    std::uint64_t seed) {
    Rng rng(seed);
    BigraphInstance inst;
    inst.left.d = inst.right.d = d;
    for (auto* side : {&inst.left, &inst.right}) {
        const std::size_t count = side == &inst.left ? n_left : n_right;
        for (std::size_t i = 0; i < count; ++i) {
            std::vector<Rational> p;
            for (std::size_t k = 0; k < d; ++k) p.emplace_back(rng.uniform(0, range - 1));
            side->pts.push_back(std::move(p));
        }
    }
    return inst;
}

// ---------------------------------------------------------------------------
// Terrains

struct TerrainPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend bool operator==(const TerrainPoint&, const TerrainPoint&) = default;
};

namespace detail {
// Sign of (b - a) x (c - a) on integer points.
inline int orient_int(const TerrainPoint& a, const TerrainPoint& b, const TerrainPoint& c) {
    const __int128 v = static_cast<__int128>(b.x - a.x) * (c.y - a.y) - static_cast<__int128>(b.y - a.y) * (c.x - a.x);
    return (v > 0) - (v < 0);
}
}  // namespace detail

inline void check_terrain(const std::vector<TerrainPoint>& pts) {
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i].x <= pts[i - 1].x) throw InputError("terrain abscissas must increase strictly");
}

/// i and k see each other iff the open segment between them passes strictly
/// above every vertex in between. O(n^3).
inline Graph terrain_visibility_bruteforce(const std::vector<TerrainPoint>& pts) {
    check_terrain(pts);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t k = i + 1; k < pts.size(); ++k) {
            bool visible = true;
            for (std::size_t j = i + 1; j < k && visible; ++j)
                visible = detail::orient_int(pts[i], pts[k], pts[j]) < 0;  // j strictly below
            if (visible) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(k));
        }
    return Graph(pts.size(), std::move(edges), true);
}

/// Same graph in O(n^2): from each i, k is visible iff the slope i->k
/// exceeds every slope i->j seen so far.
inline Graph terrain_visibility(const std::vector<TerrainPoint>& pts) {
    check_terrain(pts);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::size_t steepest = i + 1;
        for (std::size_t k = i + 1; k < pts.size(); ++k) {
            if (k == i + 1 || detail::orient_int(pts[i], pts[k], pts[steepest]) < 0) {
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(k));
                steepest = k;
            }
        }
    }
    return Graph(pts.size(), std::move(edges), true);
}

struct Terrain {
    std::vector<TerrainPoint> points;
    Graph graph;
};

inline Terrain gen_terrain(std::size_t n, std::uint64_t seed) {
    if (n < 2) throw InputError("terrain needs at least two vertices");
    Rng rng(seed);
    Terrain t;
    std::int64_t x = 0;
    const auto height = static_cast<std::int64_t>(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        x += rng.uniform(1, 3);
        t.points.push_back({x, rng.uniform(0, height)});
    }
    t.graph = terrain_visibility(t.points);
    return t;
}

inline Graph gen_capped_closure(std::size_t n, double p, std::uint64_t seed) {
    return close_under_x_property(gen_random_graph(n, p, seed, true));
}

// ---------------------------------------------------------------------------
// Geometric families

/// Left endpoints uniform in [0, 4n], lengths uniform in [0, max_len].
inline std::vector<Interval> gen_intervals(std::size_t n, std::uint64_t seed, std::int64_t max_len = 8) {
    Rng rng(seed);
    std::vector<Interval> out;
    const auto span = static_cast<std::int64_t>(4 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t lo = rng.uniform(0, span);
        const std::int64_t len = rng.uniform(0, max_len);
        out.push_back(Interval{Rational(lo), Rational(lo + len), static_cast<Vertex>(i)});
    }
    return out;
}

/// Boxes in [0, 4n]^d with side lengths up to about 4n / n^(1/d), so the
/// expected degree stays bounded as n grows.
inline std::vector<Box> gen_boxes(std::size_t n, std::size_t d, std::uint64_t seed) {
    if (d == 0) throw InputError("box dimension must be at least 1");
    Rng rng(seed);
    const auto span = static_cast<std::int64_t>(4 * n);
    std::int64_t root = 1;  // floor(n^(1/d))
    auto pow_le = [&](std::int64_t r) {
        std::int64_t acc = 1;
        for (std::size_t k = 0; k < d; ++k) {
            acc *= r;
            if (acc > static_cast<std::int64_t>(n)) return false;
        }
        return true;
    };
    while (pow_le(root + 1)) ++root;
    const std::int64_t max_len = std::max<std::int64_t>(1, span / root);
    std::vector<Box> out;
    for (std::size_t i = 0; i < n; ++i) {
        Box b;
        b.owner = static_cast<Vertex>(i);
        for (std::size_t k = 0; k < d; ++k) {
            const std::int64_t lo = rng.uniform(0, span);
            b.lo.emplace_back(lo);
            b.hi.emplace_back(lo + rng.uniform(0, max_len));
        }
        out.push_back(std::move(b));
    }
    return out;
}

/// Random short segments, resampled until each colour class is pairwise
/// disjoint and no red-blue pair overlaps collinearly. Reds come first.
inline std::vector<ColoredSegment> gen_segments(std::size_t n_red, std::size_t n_blue, std::uint64_t seed) {
    Rng rng(seed);
    const std::size_t n = n_red + n_blue;
    std::int64_t side = 8;
    while (side * side < static_cast<std::int64_t>(16 * n)) side *= 2;
    constexpr std::int64_t kMaxLen = 6;
    // Bucket grid: segments sharing a point share a bucket of their bounding boxes.
    constexpr std::int64_t kCell = 8;
    std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::size_t>> grid;

    std::vector<ColoredSegment> out;
    out.reserve(n);
    std::size_t attempts = 0;
    while (out.size() < n) {
        if (++attempts > 1000 * (n + 10)) throw InputError("segment generator failed to place disjoint segments");
        const Color color = out.size() < n_red ? Color::red : Color::blue;
        const std::int64_t x = rng.uniform(0, side);
        const std::int64_t y = rng.uniform(0, side);
        const std::int64_t dx = rng.uniform(-kMaxLen, kMaxLen);
        const std::int64_t dy = rng.uniform(-kMaxLen, kMaxLen);
        const auto s = ColoredSegment::make({Rational(x), Rational(y)}, {Rational(x + dx), Rational(y + dy)}, color);
        const std::int64_t cx0 = std::min(x, x + dx) / kCell, cx1 = std::max(x, x + dx) / kCell;
        const std::int64_t cy0 = std::min(y, y + dy) / kCell, cy1 = std::max(y, y + dy) / kCell;
        bool ok = true;
        for (std::int64_t cx = cx0; cx <= cx1 && ok; ++cx)
            for (std::int64_t cy = cy0; cy <= cy1 && ok; ++cy) {
                const auto it = grid.find({cx, cy});
                if (it == grid.end()) continue;
                for (std::size_t j : it->second) {
                    const auto& o = out[j];
                    if (o.color == color ? segments_meet(o, s) : collinear_overlap(o.a, o.b, s.a, s.b)) {
                        ok = false;
                        break;
                    }
                }
            }
        if (!ok) continue;
        for (std::int64_t cx = cx0; cx <= cx1; ++cx)
            for (std::int64_t cy = cy0; cy <= cy1; ++cy) grid[{cx, cy}].push_back(out.size());
        out.push_back(s);
    }
    return out;
}

/// Diagonal: corners on y = -x with hlen, vlen in [0, 2n / 8 + 2].
/// x-axis: distinct grounding values, heights in [0, n], widths in [0, n / 8 + 2].
inline std::vector<LShape> gen_lshapes(std::size_t n, Grounding mode, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<LShape> out;
    std::int64_t pos = 0;
    const auto reach = static_cast<std::int64_t>(n / 8 + 2);
    for (std::size_t i = 0; i < n; ++i) {
        pos += rng.uniform(1, 2);
        if (mode == Grounding::diagonal) {
            out.push_back(LShape::grounded(Rational(pos), Rational(-pos), Rational(rng.uniform(0, 2 * reach)),
                                           Rational(rng.uniform(0, 2 * reach))));
        } else {
            const std::int64_t h = rng.uniform(0, static_cast<std::int64_t>(n));
            out.push_back(LShape::x_grounded(Rational(pos), Rational(h), Rational(rng.uniform(0, reach))));
        }
    }
    return out;
}

/// Random strict-DNF instance over integer points in [0, 64)^d with
/// coefficients in [-3, 3].
inline SemilinearInstance gen_semilinear(std::size_t n, std::size_t d, std::size_t ell, std::size_t t,
                                         std::uint64_t seed) {
    Rng rng(seed);
    SemilinearInstance inst;
    inst.d = d;
    inst.ell = ell;
    inst.t = t;
    for (auto* side : {&inst.g, &inst.h}) {
        side->assign(ell, std::vector<Affine>(t));
        for (auto& term : *side)
            for (auto& f : term)
                for (std::size_t k = 0; k <= d; ++k) f.emplace_back(rng.uniform(-3, 3));
    }
    inst.pts.d = d;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> p;
        for (std::size_t k = 0; k < d; ++k) p.emplace_back(rng.uniform(0, 63));
        inst.pts.pts.push_back(std::move(p));
    }
    return inst;
}

// ---------------------------------------------------------------------------
// Lower-bound configuration

struct ErdosInstance {
    std::size_t k = 0;
    HalfplaneConfig config;  // points (i, j), lines y = m x + b
    Graph incidence;         // point-on-line incidences; points first
};

/// Points {(i, j) : 1 <= i <= k, 1 <= j <= 2k^2}, lines {y = m x + b :
/// 1 <= m <= k, 1 <= b <= k^2}. Every line meets exactly k points.
inline ErdosInstance gen_erdos(std::size_t k) {
    ErdosInstance e;
    e.k = k;
    const auto kk = static_cast<std::int64_t>(k);
    for (std::int64_t i = 1; i <= kk; ++i)
        for (std::int64_t j = 1; j <= 2 * kk * kk; ++j) e.config.points.emplace_back(Rational(i), Rational(j));
    for (std::int64_t m = 1; m <= kk; ++m)
        for (std::int64_t b = 1; b <= kk * kk; ++b) e.config.lines.emplace_back(Rational(m), Rational(b));
    // Incidences directly: line (m, b) passes through (i, m i + b).
    const auto np = static_cast<Vertex>(e.config.points.size());
    const auto column = 2 * kk * kk;
    std::vector<Edge> edges;
    for (std::int64_t m = 1; m <= kk; ++m)
        for (std::int64_t b = 1; b <= kk * kk; ++b)
            for (std::int64_t i = 1; i <= kk; ++i) {
                const std::int64_t y = m * i + b;
                if (y > column) continue;
                const auto p = static_cast<Vertex>((i - 1) * column + (y - 1));
                const auto h = static_cast<Vertex>((m - 1) * kk * kk + (b - 1));
                edges.emplace_back(p, np + h);
            }
    e.incidence = Graph(e.config.n(), std::move(edges));
    return e;
}

struct UnitDiskIncidence {
    Graph graph;  // points first, then halfplanes
    std::string note;
};

/// Containment bigraph of the lower-bound configuration. Shifting every
/// line up by a tiny offset and replacing it by a huge circle realizes it
/// as a unit disk graph after scaling; the realization is not built here.
inline UnitDiskIncidence gen_unit_disk_incidence(std::size_t k) {
    UnitDiskIncidence u;
    u.graph = k == 0 ? Graph() : halfplane_graph(gen_erdos(k).config);
    u.note = "unit-disk-realizable: lines shifted up by a small offset and replaced by huge circles";
    return u;
}

}  // namespace bicover
