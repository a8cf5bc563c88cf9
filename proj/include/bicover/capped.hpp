#pragma once

// Capped (terrain-like) ordered graphs: the X-property check, the
// two-dimensional dominance embedding of a capped bigraph, and the
// recursive cover built on it.

#include <algorithm>
#include <array>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "bicover/dominance.hpp"
#include "bicover/graph.hpp"

namespace bicover {

using Quadruple = std::array<Vertex, 4>;

class NotCappedError : public std::invalid_argument {
public:
    explicit NotCappedError(const Quadruple& q)
        : std::invalid_argument("not capped: i<j<k<l = " + std::to_string(q[0]) + " " + std::to_string(q[1]) + " " +
                                std::to_string(q[2]) + " " + std::to_string(q[3]) + " has ik, jl in E but il not"),
          violation(q) {}
    Quadruple violation;
};

/// Graph with vertex order = index order and sorted adjacency lists.
class OrderedGraph {
public:
    explicit OrderedGraph(Graph g) : graph_(std::move(g)), adj_(graph_) {
        if (!graph_.ordered()) throw InputError("graph is not marked as ordered");
    }
    const Graph& graph() const { return graph_; }
    const Adjacency& adjacency() const { return adj_; }
    std::size_t n() const { return graph_.n(); }

private:
    Graph graph_;
    Adjacency adj_;
};

struct CappedCheck {
    bool capped = true;
    std::optional<Quadruple> violation;  // lexicographically least
};

namespace detail {

// Calls visit(i, j, k, l) for every pair i < l with il not in E that has
// some j, k with i < j < k < l, ik and jl in E; (j, k) reported is the
// least such pair. Stops early when visit returns false after finishing
// the current i. Runs in O(n^2 + m).
template <class Visit>
void scan_x_violations(const Adjacency& adj, Visit&& visit) {
    const std::size_t n = adj.n();
    std::vector<std::size_t> first_above(n, 0);  // index in adj[l] of first neighbor > i
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = i + 1; l < n; ++l) {
            const auto nb = adj[l];
            while (first_above[l] < nb.size() && nb[first_above[l]] <= i) ++first_above[l];
        }
        const auto ni = adj[static_cast<Vertex>(i)];
        std::size_t pos = static_cast<std::size_t>(std::upper_bound(ni.begin(), ni.end(), static_cast<Vertex>(i)) - ni.begin());
        const std::size_t first_up = pos;
        std::optional<Vertex> k_max;  // max neighbor k of i with i < k < l
        bool any = false;
        for (std::size_t l = i + 1; l < n; ++l) {
            const bool il_edge = pos < ni.size() && ni[pos] == l;
            if (!il_edge && k_max) {
                const auto nl = adj[static_cast<Vertex>(l)];
                if (first_above[l] < nl.size()) {
                    const Vertex j = nl[first_above[l]];
                    if (j < *k_max) {
                        const auto kit = std::upper_bound(ni.begin() + static_cast<std::ptrdiff_t>(first_up), ni.end(), j);
                        any = true;
                        visit(static_cast<Vertex>(i), j, *kit, static_cast<Vertex>(l));
                    }
                }
            }
            if (il_edge) {
                k_max = static_cast<Vertex>(l);
                ++pos;
            }
        }
        if (any && !visit.keep_going()) return;
    }
}

}  // namespace detail

/// Checks the X-property: no i<j<k<l with ik, jl in E and il not in E.
inline CappedCheck check_capped(const OrderedGraph& g) {
    struct Least {
        std::optional<Quadruple> best;
        void operator()(Vertex i, Vertex j, Vertex k, Vertex l) {
            const Quadruple q{i, j, k, l};
            if (!best || q < *best) best = q;
        }
        bool keep_going() const { return false; }
    } least;
    detail::scan_x_violations(g.adjacency(), least);
    CappedCheck r;
    r.capped = !least.best.has_value();
    r.violation = least.best;
    return r;
}

/// Adds il for every violation until a fixpoint; deterministic scan order.
inline Graph close_under_x_property(const Graph& g) {
    std::vector<Edge> edges = g.edges();
    for (;;) {
        const Graph cur(g.n(), edges, true);
        const Adjacency adj(cur);
        struct Collect {
            std::vector<Edge>* out;
            void operator()(Vertex i, Vertex, Vertex, Vertex l) { out->emplace_back(i, l); }
            bool keep_going() const { return true; }
        };
        std::vector<Edge> added;
        detail::scan_x_violations(adj, Collect{&added});
        if (added.empty()) return cur;
        edges.insert(edges.end(), added.begin(), added.end());
    }
}

/// Two-dimensional dominance representation of the cut bigraph
/// ([lo, cut), [cut, hi)). Coordinates are doubled to stay integral:
/// l -> (2l, 2 min-neighbor - 1), r -> (2 max-neighbor + 1, 2r).
struct CappedEmbedding {
    BasicBigraphInstance<std::int64_t> instance;
    std::vector<Vertex> left_ids;   // graph vertex of each left point
    std::vector<Vertex> right_ids;  // graph vertex of each right point
    std::vector<Vertex> isolated;   // vertices with no edge across the cut
};

inline CappedEmbedding embed_capped_range(const OrderedGraph& g, Vertex lo, Vertex cut, Vertex hi) {
    const auto& adj = g.adjacency();
    CappedEmbedding e;
    e.instance.left.d = e.instance.right.d = 2;
    for (Vertex l = lo; l < cut; ++l) {
        const auto nb = adj[l];
        const auto it = std::lower_bound(nb.begin(), nb.end(), cut);
        if (it == nb.end() || *it >= hi) {
            e.isolated.push_back(l);
            continue;
        }
        e.left_ids.push_back(l);
        e.instance.left.pts.push_back({2 * std::int64_t{l}, 2 * std::int64_t{*it} - 1});
    }
    for (Vertex r = cut; r < hi; ++r) {
        const auto nb = adj[r];
        auto it = std::lower_bound(nb.begin(), nb.end(), cut);
        if (it == nb.begin() || *std::prev(it) < lo) {
            e.isolated.push_back(r);
            continue;
        }
        e.right_ids.push_back(r);
        e.instance.right.pts.push_back({2 * std::int64_t{*std::prev(it)} + 1, 2 * std::int64_t{r}});
    }
    return e;
}

inline CappedEmbedding embed_capped_bigraph(const OrderedGraph& g, std::size_t cut) {
    if (cut > g.n()) throw InputError("cut " + std::to_string(cut) + " out of range");
    return embed_capped_range(g, 0, static_cast<Vertex>(cut), static_cast<Vertex>(g.n()));
}

namespace detail {

inline void cover_capped_range(const OrderedGraph& g, Vertex lo, Vertex hi, std::vector<Biclique>& out) {
    if (hi - lo < 2) return;
    const Vertex mid = lo + (hi - lo) / 2;
    auto emb = embed_capped_range(g, lo, mid, hi);
    append_mapped(partition_bigraph(emb.instance), emb.left_ids, emb.right_ids, out);
    cover_capped_range(g, lo, mid, out);
    cover_capped_range(g, mid, hi, out);
}

}  // namespace detail

/// Biclique cover of a capped graph: halve the vertex order, embed the cut
/// bigraph in the plane, partition it by dominance, recurse on both halves.
/// With `strict`, the X-property is verified first (NotCappedError).
inline BicliqueCover cover_capped(const OrderedGraph& g, bool strict = true) {
    if (strict) {
        const auto chk = check_capped(g);
        if (!chk.capped) throw NotCappedError(*chk.violation);
    }
    BicliqueCover c;
    c.mode = CoverMode::cover;
    detail::cover_capped_range(g, 0, static_cast<Vertex>(g.n()), c.bicliques);
    return c;
}

}  // namespace bicover
