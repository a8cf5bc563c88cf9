#pragma once

// Augmented segment tree over closed elementary intervals, and the interval
// and box covers built on its (short, long) node lists.

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bicover/graph.hpp"
#include "bicover/rational.hpp"

namespace bicover {

struct Interval {
    Rational lo;
    Rational hi;
    Vertex owner = 0;
    friend bool operator==(const Interval&, const Interval&) = default;
};

inline bool intervals_meet(const Interval& a, const Interval& b) { return !(a.hi < b.lo) && !(b.hi < a.lo); }

/// Balanced tree whose leaves are the closed elementary intervals
/// (-inf, p1], [p1, p2], ..., [pm, +inf) over the distinct endpoints.
class AugSegTree {
public:
    struct Node {
        std::size_t first_leaf = 0;  // leaves [first_leaf, last_leaf]
        std::size_t last_leaf = 0;
        std::optional<Rational> slab_lo;  // nullopt: -inf
        std::optional<Rational> slab_hi;  // nullopt: +inf
        std::ptrdiff_t parent = -1;
        std::ptrdiff_t left = -1;
        std::ptrdiff_t right = -1;
        std::vector<Vertex> long_list;
        std::vector<Vertex> short_list;

        bool is_leaf() const { return left < 0; }
    };

    explicit AugSegTree(const std::vector<Interval>& intervals) {
        for (const auto& iv : intervals) {
            if (iv.hi < iv.lo)
                throw InputError("interval of owner " + std::to_string(iv.owner) + " has lo > hi");
            points_.push_back(iv.lo);
            points_.push_back(iv.hi);
        }
        std::sort(points_.begin(), points_.end());
        points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
        const std::size_t leaves = points_.size() + 1;
        nodes_.reserve(2 * leaves);
        build(0, leaves - 1, -1);
        leaf_node_.assign(leaves, 0);
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            if (nodes_[i].is_leaf()) leaf_node_[nodes_[i].first_leaf] = i;
        for (const auto& iv : intervals) insert(iv);
    }

    const std::vector<Node>& nodes() const { return nodes_; }
    const Node& root() const { return nodes_.front(); }
    std::size_t leaf_count() const { return points_.size() + 1; }
    const std::vector<Rational>& endpoints() const { return points_; }

    /// Closed slab of node v contains x.
    bool slab_contains(const Node& v, const Rational& x) const {
        return (!v.slab_lo || *v.slab_lo <= x) && (!v.slab_hi || x <= *v.slab_hi);
    }

private:
    std::size_t build(std::size_t first, std::size_t last, std::ptrdiff_t parent) {
        const std::size_t id = nodes_.size();
        nodes_.push_back(Node{});
        Node& v = nodes_.back();
        v.first_leaf = first;
        v.last_leaf = last;
        v.parent = parent;
        if (first > 0) v.slab_lo = points_[first - 1];
        if (last < points_.size()) v.slab_hi = points_[last];
        if (first == last) return id;
        const std::size_t mid = first + (last - first + 1 + 1) / 2;  // left gets ceil(k/2) leaves
        const std::size_t l = build(first, mid - 1, static_cast<std::ptrdiff_t>(id));
        const std::size_t r = build(mid, last, static_cast<std::ptrdiff_t>(id));
        nodes_[id].left = static_cast<std::ptrdiff_t>(l);
        nodes_[id].right = static_cast<std::ptrdiff_t>(r);
        return id;
    }

    // 1-based index of x among the distinct endpoints.
    std::size_t rank(const Rational& x) const {
        return static_cast<std::size_t>(std::lower_bound(points_.begin(), points_.end(), x) - points_.begin()) + 1;
    }

    void insert(const Interval& iv) {
        const std::size_t a = rank(iv.lo);
        const std::size_t b = rank(iv.hi);
        if (a < b) add_long(0, a, b - 1, iv.owner);
        // Endpoint p_k lies in the closed leaves k-1 and k.
        for (std::size_t leaf : {a - 1, a, b - 1, b}) {
            std::ptrdiff_t v = static_cast<std::ptrdiff_t>(leaf_node_[leaf]);
            while (v >= 0) {
                auto& list = nodes_[static_cast<std::size_t>(v)].short_list;
                if (!list.empty() && list.back() == iv.owner) break;  // path above already added
                list.push_back(iv.owner);
                v = nodes_[static_cast<std::size_t>(v)].parent;
            }
        }
    }

    // Canonical decomposition of leaves [a, b].
    void add_long(std::size_t id, std::size_t a, std::size_t b, Vertex owner) {
        Node& v = nodes_[id];
        if (b < v.first_leaf || v.last_leaf < a) return;
        if (a <= v.first_leaf && v.last_leaf <= b) {
            v.long_list.push_back(owner);
            return;
        }
        const auto l = static_cast<std::size_t>(v.left);
        const auto r = static_cast<std::size_t>(v.right);
        add_long(l, a, b, owner);
        add_long(r, a, b, owner);
    }

    std::vector<Rational> points_;
    std::vector<Node> nodes_;
    std::vector<std::size_t> leaf_node_;
};

inline AugSegTree build_augtree(const std::vector<Interval>& intervals) { return AugSegTree(intervals); }

/// Owners contained in `sorted_ids` removed from `list` (both sorted).
inline std::vector<Vertex> sorted_difference(const std::vector<Vertex>& list, const std::vector<Vertex>& sorted_ids) {
    std::vector<Vertex> out;
    std::set_difference(list.begin(), list.end(), sorted_ids.begin(), sorted_ids.end(), std::back_inserter(out));
    return out;
}

namespace detail {

// Groups of owners with identical intervals. Two equal intervals sit in
// exactly the same long and short lists, so removing shared ids from the
// short side never pairs them; every other meeting pair gets a node where
// one is long and the other only short.
inline std::vector<std::vector<Vertex>> equal_interval_groups(const std::vector<Interval>& intervals) {
    std::map<std::pair<Rational, Rational>, std::vector<Vertex>> groups;
    for (const auto& iv : intervals) groups[{iv.lo, iv.hi}].push_back(iv.owner);
    std::vector<std::vector<Vertex>> out;
    for (auto& [x, ids] : groups)
        if (ids.size() > 1) {
            std::sort(ids.begin(), ids.end());
            out.push_back(std::move(ids));
        }
    return out;
}

}  // namespace detail

/// Cover of the intersection graph of closed intervals: one biclique
/// (S_v minus L_v, L_v) per tree node, in node preorder, followed by a
/// partition of each group of identical intervals.
inline BicliqueCover cover_intervals(std::vector<Interval> intervals) {
    std::sort(intervals.begin(), intervals.end(), [](const Interval& a, const Interval& b) { return a.owner < b.owner; });
    for (std::size_t i = 1; i < intervals.size(); ++i)
        if (intervals[i - 1].owner == intervals[i].owner) throw InputError("duplicate interval owner");
    const AugSegTree tree(intervals);
    BicliqueCover c;
    c.mode = CoverMode::cover;
    for (const auto& v : tree.nodes()) {
        if (v.long_list.empty()) continue;
        auto s = sorted_difference(v.short_list, v.long_list);
        if (s.empty()) continue;
        c.bicliques.push_back(Biclique{std::move(s), v.long_list});
    }
    for (const auto& group : detail::equal_interval_groups(intervals)) c.append(cover_complete(group));
    return c;
}

inline Graph interval_graph_oracle(const std::vector<Interval>& intervals, std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < intervals.size(); ++i)
        for (std::size_t j = i + 1; j < intervals.size(); ++j)
            if (intervals_meet(intervals[i], intervals[j])) edges.emplace_back(intervals[i].owner, intervals[j].owner);
    return Graph(n, std::move(edges));
}

/// Closed axis-parallel box.
struct Box {
    std::vector<Rational> lo;
    std::vector<Rational> hi;
    Vertex owner = 0;

    std::size_t d() const { return lo.size(); }
    Interval axis(std::size_t k) const { return Interval{lo[k], hi[k], owner}; }
    friend bool operator==(const Box&, const Box&) = default;
};

inline bool boxes_meet(const Box& a, const Box& b) {
    for (std::size_t k = 0; k < a.d(); ++k)
        if (!intervals_meet(a.axis(k), b.axis(k))) return false;
    return true;
}

inline Graph box_graph_oracle(const std::vector<Box>& boxes, std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < boxes.size(); ++i)
        for (std::size_t j = i + 1; j < boxes.size(); ++j)
            if (boxes_meet(boxes[i], boxes[j])) edges.emplace_back(boxes[i].owner, boxes[j].owner);
    return Graph(n, std::move(edges));
}

namespace detail {

// `subset` holds indices into `boxes`; returned bicliques use owners.
inline void cover_boxes_rec(const std::vector<Box>& boxes, const std::vector<std::size_t>& subset, std::size_t axis,
                            std::vector<Biclique>& out) {
    std::vector<Interval> proj;
    proj.reserve(subset.size());
    for (std::size_t i : subset) proj.push_back(boxes[i].axis(axis));
    std::sort(proj.begin(), proj.end(), [](const Interval& a, const Interval& b) { return a.owner < b.owner; });
    if (axis == 0) {
        auto c = cover_intervals(std::move(proj));
        out.insert(out.end(), std::make_move_iterator(c.bicliques.begin()), std::make_move_iterator(c.bicliques.end()));
        return;
    }
    std::map<Vertex, std::size_t> index_of;
    for (std::size_t i : subset) index_of.emplace(boxes[i].owner, i);

    const AugSegTree tree(proj);
    for (const auto& v : tree.nodes()) {
        if (v.long_list.empty() || v.short_list.empty()) continue;
        std::vector<Vertex> members;
        std::set_union(v.short_list.begin(), v.short_list.end(), v.long_list.begin(), v.long_list.end(),
                       std::back_inserter(members));
        std::vector<std::size_t> sub;
        sub.reserve(members.size());
        for (Vertex id : members) sub.push_back(index_of.at(id));
        std::vector<Biclique> inner;
        cover_boxes_rec(boxes, sub, axis - 1, inner);
        auto in = [](const std::vector<Vertex>& sorted, Vertex x) {
            return std::binary_search(sorted.begin(), sorted.end(), x);
        };
        for (const auto& b : inner) {
            for (int orient = 0; orient < 2; ++orient) {
                const auto& first = orient == 0 ? v.short_list : v.long_list;
                const auto& second = orient == 0 ? v.long_list : v.short_list;
                Biclique piece;
                for (Vertex x : b.left)
                    if (in(first, x)) piece.left.push_back(x);
                for (Vertex x : b.right)
                    if (in(second, x)) piece.right.push_back(x);
                if (!piece.left.empty() && !piece.right.empty()) out.push_back(std::move(piece));
            }
        }
    }
    // Boxes that are flat on this axis at a common value meet on it.
    std::map<Rational, std::vector<std::size_t>> flat;
    for (std::size_t i : subset)
        if (boxes[i].lo[axis] == boxes[i].hi[axis]) flat[boxes[i].lo[axis]].push_back(i);
    for (const auto& [x, group] : flat)
        if (group.size() > 1) cover_boxes_rec(boxes, group, axis - 1, out);
}

}  // namespace detail

/// Cover of the intersection graph of closed boxes in R^d.
inline BicliqueCover cover_boxes(const std::vector<Box>& boxes, std::size_t d) {
    if (d == 0) throw InputError("box dimension must be at least 1");
    for (const auto& b : boxes) {
        if (b.lo.size() != d || b.hi.size() != d) throw InputError("box dimension mismatch");
        for (std::size_t k = 0; k < d; ++k)
            if (b.hi[k] < b.lo[k]) throw InputError("box of owner " + std::to_string(b.owner) + " has lo > hi");
    }
    std::vector<std::size_t> all(boxes.size());
    for (std::size_t i = 0; i < boxes.size(); ++i) all[i] = i;
    BicliqueCover c;
    c.mode = CoverMode::cover;
    detail::cover_boxes_rec(boxes, all, d - 1, c.bicliques);
    return c;
}

}  // namespace bicover
