#pragma once

// Algorithms that read a biclique cover as a compressed graph: BFS and APSP
// through hub vertices, 3-hop spanners, and lower-bound certificates.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bicover/dominance.hpp"
#include "bicover/graph.hpp"
#include "bicover/rational.hpp"

namespace bicover {

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// Original vertices plus one hub per biclique, joined to every vertex of
/// the biclique. A hub entered from one side may only be left towards the
/// other side; otherwise two vertices on the same side would look adjacent.
class HubGraph {
public:
    HubGraph(std::size_t n, const BicliqueCover& c) : n_(n), cover_(&c), offsets_(n + 1, 0) {
        for (const auto& b : c.bicliques)
            for (const auto* side : {&b.left, &b.right})
                for (Vertex v : *side) {
                    if (v >= n) throw InputError("cover vertex " + std::to_string(v) + " out of range");
                    ++offsets_[v + 1];
                }
        for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
        member_.resize(offsets_.back());
        std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
        for (std::size_t i = 0; i < c.bicliques.size(); ++i) {
            for (Vertex v : c.bicliques[i].left) member_[fill[v]++] = 2 * i;
            for (Vertex v : c.bicliques[i].right) member_[fill[v]++] = 2 * i + 1;
        }
    }

    std::size_t n() const { return n_; }
    std::size_t hubs() const { return cover_->count(); }
    std::size_t edge_count() const { return member_.size(); }

    /// Distances in G from root; kUnreachable for other components.
    std::vector<std::size_t> bfs(Vertex root) const {
        if (root >= n_) throw InputError("root " + std::to_string(root) + " out of range");
        const std::size_t states = 2 * cover_->count();
        std::vector<std::size_t> dist(n_, kUnreachable);
        std::vector<bool> hub_seen(states, false);
        // Queue entries: original vertices v as v, hub states h as n + h.
        std::vector<std::size_t> queue;
        queue.reserve(n_ + states);
        dist[root] = 0;
        queue.push_back(root);
        std::vector<std::size_t> hub_dist(states, 0);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::size_t x = queue[head];
            if (x < n_) {
                for (std::size_t k = offsets_[x]; k < offsets_[x + 1]; ++k) {
                    const std::size_t h = member_[k];  // entered from side h & 1
                    if (hub_seen[h]) continue;
                    hub_seen[h] = true;
                    hub_dist[h] = 2 * dist[x] + 1;
                    queue.push_back(n_ + h);
                }
            } else {
                const std::size_t h = x - n_;
                const auto& b = cover_->bicliques[h / 2];
                const auto& targets = (h & 1) ? b.left : b.right;
                for (Vertex w : targets) {
                    if (dist[w] != kUnreachable) continue;
                    dist[w] = (hub_dist[h] + 1) / 2;
                    queue.push_back(w);
                }
            }
        }
        return dist;
    }

private:
    std::size_t n_;
    const BicliqueCover* cover_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> member_;  // 2 * biclique + side
};

/// BFS distances in the graph covered by c, in O(n + size(c)).
inline std::vector<std::size_t> bfs_via_cover(std::size_t n, const BicliqueCover& c, Vertex root) {
    return HubGraph(n, c).bfs(root);
}

struct DistanceMatrix {
    std::size_t n = 0;
    std::vector<std::size_t> data;
    std::size_t at(std::size_t i, std::size_t j) const { return data[i * n + j]; }
};

inline DistanceMatrix apsp_via_cover(std::size_t n, const BicliqueCover& c) {
    const HubGraph hub(n, c);
    DistanceMatrix m;
    m.n = n;
    m.data.reserve(n * n);
    for (std::size_t s = 0; s < n; ++s) {
        const auto row = hub.bfs(static_cast<Vertex>(s));
        m.data.insert(m.data.end(), row.begin(), row.end());
    }
    return m;
}

/// Textbook BFS on the explicit graph.
inline std::vector<std::size_t> bfs_adjacency(const Graph& g, Vertex root) {
    const Adjacency adj(g);
    std::vector<std::size_t> dist(g.n(), kUnreachable);
    std::vector<Vertex> queue{root};
    dist[root] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        for (Vertex w : adj[u])
            if (dist[w] == kUnreachable) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

/// Each biclique becomes two stars centred at the minimum of each side.
/// Sorted, without duplicates.
inline std::vector<Edge> spanner_3hop(std::size_t n, const BicliqueCover& c) {
    std::vector<Edge> edges;
    for (const auto& b : c.bicliques) {
        if (b.left.empty() || b.right.empty()) throw MalformedCoverError("biclique with an empty side");
        const Vertex cl = b.left.front();
        const Vertex cr = b.right.front();
        for (Vertex u : b.left) edges.emplace_back(std::min(u, cr), std::max(u, cr));
        for (Vertex w : b.right) edges.emplace_back(std::min(w, cl), std::max(w, cl));
    }
    for (const auto& [u, v] : edges)
        if (v >= n) throw InputError("cover vertex out of range");
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

class NotSubgraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

class BitRows {
public:
    BitRows(std::size_t rows, std::size_t bits) : words_((bits + 63) / 64), data_(rows * words_, 0) {}
    std::uint64_t* row(std::size_t r) { return data_.data() + r * words_; }
    const std::uint64_t* row(std::size_t r) const { return data_.data() + r * words_; }
    void set(std::size_t r, std::size_t b) { row(r)[b / 64] |= std::uint64_t{1} << (b % 64); }
    std::size_t words() const { return words_; }

private:
    std::size_t words_;
    std::vector<std::uint64_t> data_;
};

// Closed balls of radius 0..r around every vertex of h.
inline std::vector<BitRows> balls(const Adjacency& h, std::size_t r) {
    const std::size_t n = h.n();
    std::vector<BitRows> out;
    out.emplace_back(n, n);
    for (std::size_t v = 0; v < n; ++v) out[0].set(v, v);
    for (std::size_t k = 1; k <= r; ++k) {
        BitRows next = out.back();
        const BitRows& prev = out.back();
        for (std::size_t v = 0; v < n; ++v) {
            std::uint64_t* dst = next.row(v);
            for (Vertex w : h[v]) {
                const std::uint64_t* src = prev.row(w);
                for (std::size_t i = 0; i < next.words(); ++i) dst[i] |= src[i];
            }
        }
        out.push_back(std::move(next));
    }
    return out;
}

}  // namespace detail

/// True iff every edge uv of g has a path of length <= t in h. Requires
/// h to be a subgraph of g.
inline bool verify_spanner(const Graph& g, const std::vector<Edge>& h_edges, std::size_t t) {
    for (auto [u, v] : h_edges)
        if (!g.has_edge(u, v))
            throw NotSubgraphError("spanner edge " + std::to_string(u) + "-" + std::to_string(v) + " not in graph");
    if (g.m() == 0) return true;
    if (t == 0) return false;
    const Graph h = Graph::from_edge_list(g.n(), h_edges);
    const Adjacency hadj(h);
    const Adjacency gadj(g);
    const std::size_t n = g.n();

    // Meet in the middle: d(u, v) <= t iff B(u, ceil(t/2)) and B(v, floor(t/2)) meet.
    constexpr std::size_t kBitsetLimit = 16384;
    if (t <= 4 && n <= kBitsetLimit) {
        const std::size_t big = (t + 1) / 2;
        const std::size_t small = t / 2;
        const auto ball = detail::balls(hadj, big);
        const std::size_t words = ball[0].words();
        for (std::size_t u = 0; u < n; ++u) {
            const std::uint64_t* bu = ball[big].row(u);
            for (Vertex v : gadj[u]) {
                if (v < u) continue;
                const std::uint64_t* bv = ball[small].row(v);
                bool meet = false;
                for (std::size_t i = 0; i < words && !meet; ++i) meet = (bu[i] & bv[i]) != 0;
                if (!meet) return false;
            }
        }
        return true;
    }

    std::vector<std::size_t> dist(n, kUnreachable);
    std::vector<Vertex> touched;
    for (std::size_t u = 0; u < n; ++u) {
        touched.assign(1, static_cast<Vertex>(u));
        dist[u] = 0;
        for (std::size_t head = 0; head < touched.size(); ++head) {
            const Vertex x = touched[head];
            if (dist[x] == t) continue;
            for (Vertex w : hadj[x])
                if (dist[w] == kUnreachable) {
                    dist[w] = dist[x] + 1;
                    touched.push_back(w);
                }
        }
        bool ok = true;
        for (Vertex v : gadj[u])
            if (v > u && dist[v] == kUnreachable) ok = false;
        for (Vertex x : touched) dist[x] = kUnreachable;
        if (!ok) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Certificates

enum class CertificateKind { zarankiewicz, charging };

inline const char* to_string(CertificateKind k) { return k == CertificateKind::zarankiewicz ? "zarankiewicz" : "charging"; }

struct AuditRow {
    std::size_t biclique = 0;
    std::size_t points = 0;
    std::size_t halfplanes = 0;
    std::size_t iota = 0;
    bool holds = true;  // points + halfplanes >= iota
    friend bool operator==(const AuditRow&, const AuditRow&) = default;
};

struct Certificate {
    CertificateKind kind = CertificateKind::zarankiewicz;
    std::string digest;  // of the inputs
    std::size_t bound = 0;
    std::size_t edges = 0;
    std::size_t t = 0;     // zarankiewicz
    std::size_t iota = 0;  // charging
    bool asserted_free = false;  // freeness taken from the caller, not checked
    std::vector<AuditRow> audit;
    std::size_t audit_violations = 0;
    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// 64-bit FNV-1a, hex.
inline std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : bytes) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 15];
        h >>= 4;
    }
    return out;
}

inline std::string graph_digest(const Graph& g) {
    std::ostringstream os;
    os << "graph " << g.n() << ' ' << g.m() << ' ' << (g.ordered() ? 1 : 0) << '\n';
    for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return fnv1a_hex(os.str());
}

struct KttWitness {
    std::vector<Vertex> a;
    std::vector<Vertex> b;
};

class KttFoundError : public std::runtime_error {
public:
    explicit KttFoundError(KttWitness w)
        : std::runtime_error("graph contains K_{" + std::to_string(w.a.size()) + "," + std::to_string(w.a.size()) +
                             "}: " + describe(w)),
          witness(std::move(w)) {}
    KttWitness witness;

private:
    static std::string describe(const KttWitness& w) {
        std::string s = "{";
        for (std::size_t i = 0; i < w.a.size(); ++i) s += (i ? " " : "") + std::to_string(w.a[i]);
        s += "} x {";
        for (std::size_t i = 0; i < w.b.size(); ++i) s += (i ? " " : "") + std::to_string(w.b[i]);
        return s + "}";
    }
};

/// Exhaustive search for K_{t,t}, t in {1, 2, 3}. For t = 3 only when n is
/// small enough; throws InputError otherwise.
inline std::optional<KttWitness> find_ktt(const Graph& g, std::size_t t) {
    const Adjacency adj(g);
    const std::size_t n = g.n();
    if (t == 0) return KttWitness{};
    if (t == 1) {
        if (g.m() == 0) return std::nullopt;
        return KttWitness{{g.edges()[0].first}, {g.edges()[0].second}};
    }
    if (t == 2) {
        // Two vertices with two common neighbours. O(sum of squared degrees).
        std::vector<std::int64_t> via(n, -1);
        for (std::size_t u = 0; u < n; ++u) {
            std::vector<Vertex> reached;
            for (Vertex v : adj[u])
                for (Vertex w : adj[v]) {
                    if (w <= u) continue;
                    if (via[w] >= 0) {
                        auto b = std::vector<Vertex>{static_cast<Vertex>(via[w]), v};
                        std::sort(b.begin(), b.end());
                        return KttWitness{{static_cast<Vertex>(u), w}, b};
                    }
                    via[w] = v;
                    reached.push_back(w);
                }
            for (Vertex w : reached) via[w] = -1;
        }
        return std::nullopt;
    }
    if (t == 3) {
        constexpr std::size_t kLimit = 2000;
        if (n > kLimit) throw InputError("K_{3,3} search limited to n <= 2000; assert freeness instead");
        std::vector<std::vector<Vertex>> common(n);
        std::vector<std::size_t> hits(n, 0);
        for (std::size_t u = 0; u < n; ++u) {
            std::vector<Vertex> touched;
            for (Vertex v : adj[u])
                for (Vertex w : adj[v])
                    if (w > u) {
                        if (common[w].empty()) touched.push_back(w);
                        common[w].push_back(v);
                    }
            std::sort(touched.begin(), touched.end());
            for (Vertex w : touched) {
                const auto& c = common[w];
                if (c.size() >= 3) {
                    std::vector<Vertex> seen;
                    for (Vertex x : c)
                        for (Vertex y : adj[x])
                            if (y > w) {
                                if (hits[y]++ == 0) seen.push_back(y);
                                if (hits[y] == 3) {
                                    std::vector<Vertex> b;
                                    for (Vertex z : c)
                                        if (b.size() < 3 && adj.adjacent(y, z)) b.push_back(z);
                                    std::sort(b.begin(), b.end());
                                    return KttWitness{{static_cast<Vertex>(u), w, y}, b};
                                }
                            }
                    for (Vertex y : seen) hits[y] = 0;
                }
            }
            for (Vertex w : touched) common[w].clear();
        }
        return std::nullopt;
    }
    throw InputError("K_{t,t} search supports t <= 3; assert freeness instead");
}

/// Lower bound ceil(|E| / t) on every biclique cover of a K_{t,t}-free graph.
/// With `assume_free` the caller vouches for freeness and no search is run.
inline Certificate zarankiewicz_certificate(const Graph& g, std::size_t t, bool assume_free = false) {
    if (t == 0) throw InputError("t must be positive");
    if (!assume_free)
        if (auto w = find_ktt(g, t)) throw KttFoundError(std::move(*w));
    Certificate c;
    c.kind = CertificateKind::zarankiewicz;
    c.digest = graph_digest(g);
    c.edges = g.m();
    c.t = t;
    c.bound = (g.m() + t - 1) / t;
    c.asserted_free = assume_free;
    return c;
}

/// Points and closed lower halfplanes y <= m x + b. Vertex ids: points
/// first, then halfplanes.
struct HalfplaneConfig {
    std::vector<std::pair<Rational, Rational>> points;  // (x, y)
    std::vector<std::pair<Rational, Rational>> lines;   // (m, b)

    std::size_t n() const { return points.size() + lines.size(); }
    bool contains(std::size_t p, std::size_t h) const {
        const auto& [x, y] = points[p];
        const auto& [m, b] = lines[h];
        return y <= m * x + b;
    }
    bool on_line(std::size_t p, std::size_t h) const {
        const auto& [x, y] = points[p];
        const auto& [m, b] = lines[h];
        return y == m * x + b;
    }
    std::string text() const {
        std::ostringstream os;
        os << "halfplanes " << points.size() << ' ' << lines.size() << '\n';
        for (const auto& [x, y] : points) os << x << ' ' << y << '\n';
        for (const auto& [m, b] : lines) os << m << ' ' << b << '\n';
        return os.str();
    }
};

/// Bipartite containment graph of a configuration.
inline Graph halfplane_graph(const HalfplaneConfig& cfg) {
    std::vector<Edge> edges;
    const auto np = static_cast<Vertex>(cfg.points.size());
    for (std::size_t p = 0; p < cfg.points.size(); ++p)
        for (std::size_t h = 0; h < cfg.lines.size(); ++h)
            if (cfg.contains(p, h)) edges.emplace_back(static_cast<Vertex>(p), np + static_cast<Vertex>(h));
    return Graph(cfg.n(), std::move(edges));
}

/// Point-on-boundary incidences.
inline Graph incidence_graph(const HalfplaneConfig& cfg) {
    std::vector<Edge> edges;
    const auto np = static_cast<Vertex>(cfg.points.size());
    for (std::size_t p = 0; p < cfg.points.size(); ++p)
        for (std::size_t h = 0; h < cfg.lines.size(); ++h)
            if (cfg.on_line(p, h)) edges.emplace_back(static_cast<Vertex>(p), np + static_cast<Vertex>(h));
    return Graph(cfg.n(), std::move(edges));
}

class SoundnessError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Lower bound equal to the number of point-line incidences, valid for every
/// biclique cover of the containment graph. With a cover, every biclique is
/// checked for soundness and for |P_i| + |H_i| >= incidences inside it.
inline Certificate charging_certificate(const HalfplaneConfig& cfg, const BicliqueCover* cover = nullptr) {
    Certificate c;
    c.kind = CertificateKind::charging;
    c.digest = fnv1a_hex(cfg.text());
    std::size_t iota = 0;
    std::size_t edges = 0;
    for (std::size_t p = 0; p < cfg.points.size(); ++p)
        for (std::size_t h = 0; h < cfg.lines.size(); ++h) {
            iota += cfg.on_line(p, h);
            edges += cfg.contains(p, h);
        }
    c.iota = iota;
    c.bound = iota;
    c.edges = edges;
    if (!cover) return c;

    const std::size_t np = cfg.points.size();
    for (std::size_t i = 0; i < cover->bicliques.size(); ++i) {
        const auto& b = cover->bicliques[i];
        const bool left_points = !b.left.empty() && b.left.front() < np;
        const auto& ps = left_points ? b.left : b.right;
        const auto& hs = left_points ? b.right : b.left;
        for (Vertex p : ps)
            for (Vertex h : hs) {
                if (p >= np || h < np || h >= cfg.n() || !cfg.contains(p, h - np))
                    throw SoundnessError("biclique " + std::to_string(i) + " pairs " + std::to_string(p) + " and " +
                                         std::to_string(h) + " which are not a point inside a halfplane");
            }
        AuditRow row;
        row.biclique = i;
        row.points = ps.size();
        row.halfplanes = hs.size();
        for (Vertex p : ps)
            for (Vertex h : hs) row.iota += cfg.on_line(p, h - np);
        row.holds = row.points + row.halfplanes >= row.iota;
        c.audit_violations += !row.holds;
        c.audit.push_back(row);
    }
    return c;
}

/// Cover of the containment graph: points sharing an abscissa x see the
/// halfplanes as the one-dimensional order y <= m x + b, so each column is
/// a one-dimensional dominance bigraph.
inline BicliqueCover cover_point_halfplane(const HalfplaneConfig& cfg) {
    std::map<Rational, std::vector<Vertex>> columns;
    for (std::size_t p = 0; p < cfg.points.size(); ++p) columns[cfg.points[p].first].push_back(static_cast<Vertex>(p));
    const auto np = static_cast<Vertex>(cfg.points.size());
    std::vector<Vertex> hids(cfg.lines.size());
    for (std::size_t h = 0; h < cfg.lines.size(); ++h) hids[h] = np + static_cast<Vertex>(h);

    BicliqueCover c;
    c.mode = CoverMode::partition;
    for (const auto& [x, ps] : columns) {
        BasicBigraphInstance<TieKey<Rational>> inst;
        inst.left.d = inst.right.d = 1;
        for (Vertex p : ps) inst.left.pts.push_back({{cfg.points[p].second, 0}});
        for (const auto& [m, b] : cfg.lines) inst.right.pts.push_back({{m * x + b, 1}});
        detail::append_mapped(partition_bigraph(inst), ps, hids, c.bicliques);
    }
    return c;
}

}  // namespace bicover
