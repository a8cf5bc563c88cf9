#pragma once

// Biclique partitions of d-dimensional comparability bigraphs and graphs.
//
// The edge relation is strict dominance: a < b in every coordinate.
// Both constructions split on the last active coordinate at a balanced
// threshold, emit the cross subproblem one dimension lower, and recurse
// on the two halves. Ties between coordinate values are allowed.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bicover/graph.hpp"
#include "bicover/rational.hpp"

namespace bicover {

template <class Coord>
struct BasicPointSet {
    std::size_t d = 0;
    std::vector<std::vector<Coord>> pts;

    std::size_t size() const { return pts.size(); }

    void check() const {
        for (const auto& p : pts)
            if (p.size() != d) throw InputError("point has " + std::to_string(p.size()) +
                                                " coordinates, expected " + std::to_string(d));
    }
    friend bool operator==(const BasicPointSet&, const BasicPointSet&) = default;
};

template <class Coord>
struct BasicBigraphInstance {
    BasicPointSet<Coord> left;
    BasicPointSet<Coord> right;

    std::size_t n() const { return left.size() + right.size(); }
    friend bool operator==(const BasicBigraphInstance&, const BasicBigraphInstance&) = default;
};

using PointSet = BasicPointSet<Rational>;
using BigraphInstance = BasicBigraphInstance<Rational>;

/// a < b strictly in the first `dims` coordinates.
template <class Coord>
bool dominated(std::span<const Coord> a, std::span<const Coord> b, std::size_t dims) {
    for (std::size_t i = 0; i < dims; ++i)
        if (!(a[i] < b[i])) return false;
    return true;
}

template <class Coord>
bool dominated(const std::vector<Coord>& a, const std::vector<Coord>& b) {
    return dominated<Coord>(std::span<const Coord>(a), std::span<const Coord>(b), a.size());
}

namespace detail {

template <class Coord>
class DominanceRecursion {
public:
    struct Item {
        Vertex id;
        bool right;
        const Coord* coords;
    };

    explicit DominanceRecursion(std::vector<Biclique>& out) : out_(out) {}

    // Bigraph: left items dominated by right items in coords [0, dims).
    void bigraph(std::vector<Item> items, std::size_t dims) {
        std::size_t lefts = 0;
        for (const auto& it : items) lefts += !it.right;
        if (lefts == 0 || lefts == items.size()) return;
        if (dims == 0) {
            std::vector<Vertex> l, r;
            for (const auto& it : items) (it.right ? r : l).push_back(it.id);
            out_.push_back(make_biclique(std::move(l), std::move(r)));
            return;
        }
        const std::size_t axis = dims - 1;
        Coord threshold;
        if (!split_threshold(items, axis, threshold)) return;  // all equal: no strict pair

        std::vector<Item> cross, low, high;
        for (const auto& it : items) {
            const bool is_low = !(threshold < it.coords[axis]);
            if (is_low != it.right) cross.push_back(it);
            (is_low ? low : high).push_back(it);
        }
        items.clear();
        items.shrink_to_fit();
        bigraph(std::move(cross), dims - 1);
        bigraph(std::move(low), dims);
        bigraph(std::move(high), dims);
    }

    // Graph: pairs comparable in coords [0, dims).
    void graph(std::vector<Item> items, std::size_t dims) {
        if (items.size() < 2) return;
        if (dims == 0) {
            std::vector<Vertex> ids;
            for (const auto& it : items) ids.push_back(it.id);
            std::sort(ids.begin(), ids.end());
            detail::complete_partition(ids, out_);
            return;
        }
        const std::size_t axis = dims - 1;
        Coord threshold;
        if (!split_threshold(items, axis, threshold)) return;

        std::vector<Item> cross, low, high;
        for (auto it : items) {
            const bool is_low = !(threshold < it.coords[axis]);
            (is_low ? low : high).push_back(it);
            it.right = !is_low;
            cross.push_back(it);
        }
        items.clear();
        items.shrink_to_fit();
        bigraph(std::move(cross), dims - 1);
        graph(std::move(low), dims);
        graph(std::move(high), dims);
    }

private:
    // Balanced split value: the distinct value v (strictly below the maximum)
    // minimizing max(#{<= v}, #{> v}). Equals the lower median when values are
    // distinct. Returns false when every value is equal.
    static bool split_threshold(const std::vector<Item>& items, std::size_t axis, Coord& threshold) {
        std::vector<Coord> values;
        values.reserve(items.size());
        for (const auto& it : items) values.push_back(it.coords[axis]);
        std::sort(values.begin(), values.end());
        const std::size_t m = values.size();
        std::size_t best = m;
        std::size_t best_cost = m + 1;
        for (std::size_t i = 0; i + 1 < m; ++i) {
            if (values[i] == values[i + 1]) continue;
            const std::size_t low = i + 1;
            const std::size_t cost = std::max(low, m - low);
            if (cost < best_cost) {
                best_cost = cost;
                best = i;
            }
        }
        if (best == m) return false;
        threshold = values[best];
        return true;
    }

    std::vector<Biclique>& out_;
};

}  // namespace detail

/// Partition of the bigraph {(l, r) : phi(l) < phi(r) in every coordinate}.
/// Vertex ids: left points 0..|L|-1, right points |L|..|L|+|R|-1.
/// Bicliques appear in preorder of the recursion tree (cross, low, high).
template <class Coord>
BicliqueCover partition_bigraph(const BasicBigraphInstance<Coord>& inst) {
    if (inst.left.d != inst.right.d) throw InputError("bigraph sides have different dimensions");
    inst.left.check();
    inst.right.check();
    using Rec = detail::DominanceRecursion<Coord>;
    std::vector<typename Rec::Item> items;
    items.reserve(inst.n());
    const auto nl = static_cast<Vertex>(inst.left.size());
    for (std::size_t i = 0; i < inst.left.size(); ++i)
        items.push_back({static_cast<Vertex>(i), false, inst.left.pts[i].data()});
    for (std::size_t i = 0; i < inst.right.size(); ++i)
        items.push_back({nl + static_cast<Vertex>(i), true, inst.right.pts[i].data()});
    BicliqueCover c;
    c.mode = CoverMode::partition;
    Rec(c.bicliques).bigraph(std::move(items), inst.left.d);
    return c;
}

/// Partition of the comparability graph {(u, v) : phi(u) < phi(v) or phi(v) < phi(u)}.
template <class Coord>
BicliqueCover partition_graph(const BasicPointSet<Coord>& pts) {
    pts.check();
    using Rec = detail::DominanceRecursion<Coord>;
    std::vector<typename Rec::Item> items;
    items.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) items.push_back({static_cast<Vertex>(i), false, pts.pts[i].data()});
    BicliqueCover c;
    c.mode = CoverMode::partition;
    Rec(c.bicliques).graph(std::move(items), pts.d);
    return c;
}

namespace detail {

// Relabels a partition_bigraph result: left index i -> left_ids[i], right
// index |L| + j -> right_ids[j].
inline void append_mapped(BicliqueCover&& part, const std::vector<Vertex>& left_ids,
                          const std::vector<Vertex>& right_ids, std::vector<Biclique>& out) {
    const auto nl = static_cast<Vertex>(left_ids.size());
    for (auto& b : part.bicliques) {
        for (auto& x : b.left) x = left_ids[x];
        for (auto& x : b.right) x = right_ids[x - nl];
        std::sort(b.left.begin(), b.left.end());
        std::sort(b.right.begin(), b.right.end());
        out.push_back(std::move(b));
    }
}

}  // namespace detail

/// O(|L| |R|) count of dominated pairs.
template <class Coord>
std::size_t dominance_edge_count(const BasicBigraphInstance<Coord>& inst) {
    if (inst.left.d != inst.right.d) throw InputError("bigraph sides have different dimensions");
    std::size_t count = 0;
    for (const auto& l : inst.left.pts)
        for (const auto& r : inst.right.pts) count += dominated(l, r);
    return count;
}

/// Explicit bigraph (ids as in partition_bigraph), by exhaustive comparison.
template <class Coord>
Graph comparability_bigraph_oracle(const BasicBigraphInstance<Coord>& inst) {
    std::vector<Edge> edges;
    const auto nl = static_cast<Vertex>(inst.left.size());
    for (std::size_t i = 0; i < inst.left.size(); ++i)
        for (std::size_t j = 0; j < inst.right.size(); ++j)
            if (dominated(inst.left.pts[i], inst.right.pts[j])) edges.emplace_back(static_cast<Vertex>(i), nl + static_cast<Vertex>(j));
    return Graph(inst.n(), std::move(edges));
}

/// Explicit comparability graph, by exhaustive comparison.
template <class Coord>
Graph comparability_graph_oracle(const BasicPointSet<Coord>& pts) {
    return oracle_edges(
        [&](Vertex u, Vertex v) { return dominated(pts.pts[u], pts.pts[v]) || dominated(pts.pts[v], pts.pts[u]); },
        pts.size());
}

}  // namespace bicover
