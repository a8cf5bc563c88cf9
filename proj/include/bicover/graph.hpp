#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bicover {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class MalformedCoverError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// Edges are stored normalized (u < v) and sorted. When `ordered` is set,
/// the vertex index order is the graph's total order (capped graphs).
class Graph {
public:
    Graph() = default;

    /// Throws InputError on self-loops, duplicate edges or out-of-range
    /// endpoints. Edge orientation is normalized.
    Graph(std::size_t n, std::vector<Edge> edges, bool ordered = false) : n_(n), ordered_(ordered) {
        for (auto& [u, v] : edges) {
            if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
            if (u >= n || v >= n) throw InputError("edge endpoint out of range");
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw InputError("duplicate edge");
        edges_ = std::move(edges);
    }

    /// Like the constructor but silently drops duplicates.
    static Graph from_edge_list(std::size_t n, std::vector<Edge> edges, bool ordered = false) {
        for (auto& [u, v] : edges)
            if (u > v) std::swap(u, v);
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        return Graph(n, std::move(edges), ordered);
    }

    std::size_t n() const { return n_; }
    std::size_t m() const { return edges_.size(); }
    bool ordered() const { return ordered_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(Vertex u, Vertex v) const {
        if (u > v) std::swap(u, v);
        return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    bool ordered_ = false;
};

/// Compressed sorted adjacency lists.
class Adjacency {
public:
    explicit Adjacency(const Graph& g) : offsets_(g.n() + 1, 0) {
        for (const auto& [u, v] : g.edges()) {
            ++offsets_[u + 1];
            ++offsets_[v + 1];
        }
        for (std::size_t i = 0; i < g.n(); ++i) offsets_[i + 1] += offsets_[i];
        targets_.resize(offsets_.back());
        std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
        // Edges are sorted by (u, v): lower neighbors arrive in increasing
        // order in the first pass, upper neighbors in the second.
        for (const auto& [u, v] : g.edges()) targets_[fill[v]++] = u;
        for (const auto& [u, v] : g.edges()) targets_[fill[u]++] = v;
    }

    std::size_t n() const { return offsets_.size() - 1; }
    std::span<const Vertex> operator[](std::size_t v) const {
        return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
    }
    bool adjacent(Vertex u, Vertex v) const {
        const auto nb = (*this)[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

private:
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> targets_;
};

/// Complete bipartite subgraph given by two disjoint sorted vertex lists.
struct Biclique {
    std::vector<Vertex> left;
    std::vector<Vertex> right;

    std::size_t size() const { return left.size() + right.size(); }
    friend bool operator==(const Biclique&, const Biclique&) = default;
};

inline Biclique make_biclique(std::vector<Vertex> left, std::vector<Vertex> right) {
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    return Biclique{std::move(left), std::move(right)};
}

enum class CoverMode { cover, partition };

inline const char* to_string(CoverMode mode) { return mode == CoverMode::cover ? "cover" : "partition"; }

struct BicliqueCover {
    std::vector<Biclique> bicliques;
    CoverMode mode = CoverMode::cover;

    std::size_t size() const {
        std::size_t s = 0;
        for (const auto& b : bicliques) s += b.size();
        return s;
    }
    std::size_t count() const { return bicliques.size(); }

    void append(BicliqueCover&& other) {
        bicliques.insert(bicliques.end(), std::make_move_iterator(other.bicliques.begin()),
                         std::make_move_iterator(other.bicliques.end()));
    }

    friend bool operator==(const BicliqueCover&, const BicliqueCover&) = default;
};

/// Number of bicliques containing the most frequently used vertex.
inline std::size_t max_vertex_multiplicity(const BicliqueCover& c, std::size_t n) {
    std::vector<std::size_t> count(n, 0);
    std::size_t best = 0;
    for (const auto& b : c.bicliques) {
        for (Vertex v : b.left) best = std::max(best, ++count.at(v));
        for (Vertex v : b.right) best = std::max(best, ++count.at(v));
    }
    return best;
}

struct NonEdgeInBiclique {
    std::size_t biclique;
    Vertex u;
    Vertex v;
    friend bool operator==(const NonEdgeInBiclique&, const NonEdgeInBiclique&) = default;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Edge> uncovered_edges;
    std::vector<NonEdgeInBiclique> non_edges_in_bicliques;
    std::vector<Edge> multiplicity_violations;
    std::size_t measured_size = 0;
    std::size_t max_vertex_multiplicity = 0;

    friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

/// Exact check of a cover (or partition) against an explicit graph.
/// Enumerates every pair of every biclique.
inline ValidationReport validate_cover(const Graph& g, const BicliqueCover& c) {
    const std::size_t n = g.n();
    for (std::size_t i = 0; i < c.bicliques.size(); ++i) {
        const auto& b = c.bicliques[i];
        if (b.left.empty() || b.right.empty())
            throw MalformedCoverError("biclique " + std::to_string(i) + " has an empty side");
        for (const auto* side : {&b.left, &b.right}) {
            for (std::size_t j = 0; j < side->size(); ++j) {
                if ((*side)[j] >= n)
                    throw InputError("biclique " + std::to_string(i) + " vertex out of range");
                if (j > 0 && (*side)[j - 1] >= (*side)[j])
                    throw MalformedCoverError("biclique " + std::to_string(i) + " side not strictly sorted");
            }
        }
        // Sides must be disjoint; both are sorted.
        auto l = b.left.begin();
        auto r = b.right.begin();
        while (l != b.left.end() && r != b.right.end()) {
            if (*l == *r) throw MalformedCoverError("biclique " + std::to_string(i) + " sides overlap");
            if (*l < *r) ++l;
            else ++r;
        }
    }

    // Upper adjacency in CSR form: edge index of (u, v), u < v.
    std::vector<std::size_t> offsets(n + 1, 0);
    for (const auto& e : g.edges()) ++offsets[e.first + 1];
    for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    const auto& edges = g.edges();
    auto edge_index = [&](Vertex a, Vertex b) -> std::ptrdiff_t {
        if (a > b) std::swap(a, b);
        const auto first = edges.begin() + static_cast<std::ptrdiff_t>(offsets[a]);
        const auto last = edges.begin() + static_cast<std::ptrdiff_t>(offsets[a + 1]);
        const auto it = std::lower_bound(first, last, Edge{a, b});
        if (it == last || *it != Edge{a, b}) return -1;
        return it - edges.begin();
    };

    ValidationReport report;
    std::vector<std::uint32_t> times(edges.size(), 0);
    std::vector<std::size_t> vertex_count(n, 0);
    for (std::size_t i = 0; i < c.bicliques.size(); ++i) {
        const auto& b = c.bicliques[i];
        report.measured_size += b.size();
        for (Vertex u : b.left) ++vertex_count[u];
        for (Vertex v : b.right) ++vertex_count[v];
        for (Vertex u : b.left) {
            for (Vertex v : b.right) {
                const auto idx = edge_index(u, v);
                if (idx < 0) report.non_edges_in_bicliques.push_back({i, u, v});
                else ++times[static_cast<std::size_t>(idx)];
            }
        }
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (times[e] == 0) report.uncovered_edges.push_back(edges[e]);
        else if (times[e] > 1 && c.mode == CoverMode::partition) report.multiplicity_violations.push_back(edges[e]);
    }
    for (std::size_t v = 0; v < n; ++v) report.max_vertex_multiplicity = std::max(report.max_vertex_multiplicity, vertex_count[v]);
    report.valid = report.uncovered_edges.empty() && report.non_edges_in_bicliques.empty() &&
                   report.multiplicity_violations.empty();
    return report;
}

namespace detail {
inline void complete_partition(std::span<const Vertex> ids, std::vector<Biclique>& out) {
    if (ids.size() < 2) return;
    const std::size_t mid = ids.size() / 2;
    out.push_back(make_biclique({ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(mid)},
                                {ids.begin() + static_cast<std::ptrdiff_t>(mid), ids.end()}));
    complete_partition(ids.first(mid), out);
    complete_partition(ids.subspan(mid), out);
}
}  // namespace detail

/// Partition of the complete graph on the given vertices by recursive halving.
/// Produces |ids|-1 bicliques of total size at most |ids| * ceil(log2 |ids|).
inline BicliqueCover cover_complete(std::span<const Vertex> ids) {
    BicliqueCover c;
    c.mode = CoverMode::partition;
    detail::complete_partition(ids, c.bicliques);
    return c;
}

inline BicliqueCover cover_complete(std::size_t n) {
    std::vector<Vertex> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<Vertex>(i);
    return cover_complete(std::span<const Vertex>(ids));
}

/// Brute-force graph from a symmetric pair predicate: O(n^2) evaluations.
template <class Pred>
Graph oracle_edges(Pred&& pred, std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (pred(static_cast<Vertex>(u), static_cast<Vertex>(v)))
                edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return Graph(n, std::move(edges));
}

/// One biclique per edge.
inline BicliqueCover trivial_cover(const Graph& g) {
    BicliqueCover c;
    c.mode = CoverMode::partition;
    c.bicliques.reserve(g.m());
    for (const auto& [u, v] : g.edges()) c.bicliques.push_back(Biclique{{u}, {v}});
    return c;
}

/// Smallest k with 2^k >= n (0 for n <= 1).
inline unsigned ceil_log2(std::size_t n) {
    unsigned k = 0;
    while ((std::size_t{1} << k) < n) ++k;
    return k;
}

}  // namespace bicover
