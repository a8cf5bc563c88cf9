#pragma once

// Plain-text formats. Every reader checks the header, the counts and the
// absence of trailing tokens, and reports the offending line.

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bicover/compressed.hpp"
#include "bicover/dominance.hpp"
#include "bicover/generators.hpp"
#include "bicover/graph.hpp"
#include "bicover/lshapes.hpp"
#include "bicover/rational.hpp"
#include "bicover/segment_tree.hpp"
#include "bicover/segments.hpp"
#include "bicover/semilinear.hpp"

namespace bicover {

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace io {

class Reader {
public:
    explicit Reader(std::istream& in) {
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok) tokens_.push_back({tok, lineno});
        }
    }

    bool done() const { return pos_ == tokens_.size(); }

    std::string word(const char* what) {
        if (done()) throw FormatError(std::string("unexpected end of input, expected ") + what);
        return tokens_[pos_++].text;
    }

    void expect(std::string_view keyword) {
        const std::string w = word("header");
        if (w != keyword) fail("expected '" + std::string(keyword) + "', found '" + w + "'");
    }

    std::size_t count(const char* what) {
        const std::string w = word(what);
        std::size_t value = 0;
        for (char ch : w) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) fail(std::string("expected ") + what + ", found '" + w + "'");
            value = value * 10 + static_cast<std::size_t>(ch - '0');
            if (value > (std::size_t{1} << 40)) fail(std::string(what) + " too large");
        }
        return value;
    }

    Rational rational() {
        const std::string w = word("a rational");
        static const char* relations[] = {"<", "<=", "=", "==", ">", ">=", "!=", "≤", "≥"};
        for (const char* r : relations)
            if (w == r)
                fail("relational token '" + w +
                     "': atoms are implicit 'g(x) + h(y) < 0' in strict DNF form; non-strict and equality atoms "
                     "must be normalized to strict DNF before loading");
        try {
            return Rational::parse(w);
        } catch (const std::exception& e) {
            fail(e.what());
        }
    }

    void finish() {
        if (!done()) fail("trailing data '" + tokens_[pos_].text + "'");
    }

    [[noreturn]] void fail(const std::string& msg) const {
        const std::size_t at = pos_ == 0 ? 0 : pos_ - 1;
        const std::size_t line = at < tokens_.size() ? tokens_[at].line : 0;
        throw FormatError("line " + std::to_string(line) + ": " + msg);
    }

private:
    struct Token {
        std::string text;
        std::size_t line;
    };
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

inline Vertex vertex(Reader& r, std::size_t n) {
    const std::size_t v = r.count("a vertex index");
    if (v >= n) r.fail("vertex " + std::to_string(v) + " out of range");
    return static_cast<Vertex>(v);
}

}  // namespace io

// ---------------------------------------------------------------------------
// graph

inline Graph read_graph_body(io::Reader& r) {
    const std::size_t n = r.count("vertex count");
    const std::size_t m = r.count("edge count");
    const std::size_t ordered = r.count("ordered flag");
    if (ordered > 1) r.fail("ordered flag must be 0 or 1");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Vertex u = io::vertex(r, n);
        const Vertex v = io::vertex(r, n);
        if (!(u < v)) r.fail("edge must be written as u v with u < v");
        edges.emplace_back(u, v);
    }
    try {
        return Graph(n, std::move(edges), ordered == 1);
    } catch (const InputError& e) {
        throw FormatError(e.what());
    }
}

inline Graph read_graph(std::istream& in) {
    io::Reader r(in);
    r.expect("graph");
    Graph g = read_graph_body(r);
    r.finish();
    return g;
}

inline void write_graph(std::ostream& os, const Graph& g) {
    os << "graph " << g.n() << ' ' << g.m() << ' ' << (g.ordered() ? 1 : 0) << '\n';
    for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

// ---------------------------------------------------------------------------
// cover

inline BicliqueCover read_cover(std::istream& in) {
    io::Reader r(in);
    r.expect("cover");
    const std::size_t k = r.count("biclique count");
    const std::string mode = r.word("mode");
    BicliqueCover c;
    if (mode == "cover") c.mode = CoverMode::cover;
    else if (mode == "partition") c.mode = CoverMode::partition;
    else r.fail("mode must be 'cover' or 'partition'");
    constexpr std::size_t kAnyVertex = std::size_t{1} << 32;
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t nl = r.count("left size");
        const std::size_t nr = r.count("right size");
        Biclique b;
        for (std::size_t j = 0; j < nl; ++j) b.left.push_back(io::vertex(r, kAnyVertex));
        for (std::size_t j = 0; j < nr; ++j) b.right.push_back(io::vertex(r, kAnyVertex));
        c.bicliques.push_back(std::move(b));
    }
    r.finish();
    return c;
}

inline void write_cover(std::ostream& os, const BicliqueCover& c) {
    os << "cover " << c.count() << ' ' << to_string(c.mode) << '\n';
    for (const auto& b : c.bicliques) {
        os << b.left.size() << ' ' << b.right.size() << '\n';
        for (std::size_t i = 0; i < b.left.size(); ++i) os << (i ? " " : "") << b.left[i];
        os << '\n';
        for (std::size_t i = 0; i < b.right.size(); ++i) os << (i ? " " : "") << b.right[i];
        os << '\n';
    }
}

// ---------------------------------------------------------------------------
// points / bipoints

inline void read_rows(io::Reader& r, std::size_t d, std::size_t n, PointSet& ps) {
    ps.d = d;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> p;
        p.reserve(d);
        for (std::size_t k = 0; k < d; ++k) p.push_back(r.rational());
        ps.pts.push_back(std::move(p));
    }
}

inline void write_rows(std::ostream& os, const PointSet& ps) {
    for (const auto& p : ps.pts) {
        for (std::size_t k = 0; k < p.size(); ++k) os << (k ? " " : "") << p[k];
        os << '\n';
    }
}

inline void write_points(std::ostream& os, const PointSet& ps) {
    os << "points " << ps.d << ' ' << ps.size() << '\n';
    write_rows(os, ps);
}

inline void write_bipoints(std::ostream& os, const BigraphInstance& inst) {
    os << "bipoints " << inst.left.d << ' ' << inst.left.size() << ' ' << inst.right.size() << '\n';
    write_rows(os, inst.left);
    write_rows(os, inst.right);
}

// ---------------------------------------------------------------------------
// semilinear

inline void write_semilinear(std::ostream& os, const SemilinearInstance& inst) {
    os << "semilinear " << inst.d << ' ' << inst.ell << ' ' << inst.t << ' ' << inst.n() << '\n';
    for (const auto* side : {&inst.g, &inst.h})
        for (const auto& term : *side)
            for (const auto& f : term) {
                for (std::size_t k = 0; k < f.size(); ++k) os << (k ? " " : "") << f[k];
                os << '\n';
            }
    write_rows(os, inst.pts);
}

// ---------------------------------------------------------------------------
// L-shapes

struct LShapeSet {
    Grounding mode = Grounding::diagonal;
    std::vector<LShape> shapes;
};

inline void write_lshapes(std::ostream& os, const LShapeSet& set) {
    os << "lshapes " << (set.mode == Grounding::diagonal ? "diag" : "xaxis") << ' ' << set.shapes.size() << '\n';
    for (const auto& s : set.shapes) {
        if (set.mode == Grounding::diagonal)
            os << s.corner.x << ' ' << s.corner.y << ' ' << s.hlen << ' ' << s.vlen << '\n';
        else
            os << s.x() << ' ' << s.corner.y << ' ' << s.hlen << '\n';
    }
}

// ---------------------------------------------------------------------------
// intervals / boxes / segments / terrain / halfplanes

struct IntervalSet {
    std::vector<Interval> intervals;  // owner = row
};
struct BoxSet {
    std::size_t d = 1;
    std::vector<Box> boxes;  // owner = row
};
struct SegmentSet {
    std::vector<ColoredSegment> segments;  // vertex = row
};
struct TerrainSet {
    std::vector<TerrainPoint> points;
};

inline void write_intervals(std::ostream& os, const IntervalSet& set) {
    os << "intervals " << set.intervals.size() << '\n';
    for (const auto& iv : set.intervals) os << iv.lo << ' ' << iv.hi << '\n';
}

inline void write_boxes(std::ostream& os, const BoxSet& set) {
    os << "boxes " << set.d << ' ' << set.boxes.size() << '\n';
    for (const auto& b : set.boxes) {
        for (std::size_t k = 0; k < set.d; ++k) os << (k ? " " : "") << b.lo[k] << ' ' << b.hi[k];
        os << '\n';
    }
}

inline void write_segments(std::ostream& os, const SegmentSet& set) {
    os << "segments " << set.segments.size() << '\n';
    for (const auto& s : set.segments)
        os << s.a.x << ' ' << s.a.y << ' ' << s.b.x << ' ' << s.b.y << ' ' << to_string(s.color) << '\n';
}

inline void write_terrain(std::ostream& os, const TerrainSet& set) {
    os << "terrain " << set.points.size() << '\n';
    for (const auto& p : set.points) os << p.x << ' ' << p.y << '\n';
}

inline void write_halfplanes(std::ostream& os, const HalfplaneConfig& cfg) { os << cfg.text(); }

// ---------------------------------------------------------------------------
// any instance, dispatched on the header keyword

using Instance = std::variant<Graph, PointSet, BigraphInstance, SemilinearInstance, LShapeSet, IntervalSet, BoxSet,
                              SegmentSet, TerrainSet, HalfplaneConfig>;

inline const char* instance_kind(const Instance& inst) {
    static const char* names[] = {"graph",     "points",  "bipoints", "semilinear", "lshapes",
                                  "intervals", "boxes",   "segments", "terrain",    "halfplanes"};
    return names[inst.index()];
}

inline Instance read_instance(std::istream& in) {
    io::Reader r(in);
    const std::string kind = r.word("a header keyword");
    Instance out;
    if (kind == "graph") {
        out = read_graph_body(r);
    } else if (kind == "points") {
        const std::size_t d = r.count("dimension");
        const std::size_t n = r.count("point count");
        PointSet ps;
        read_rows(r, d, n, ps);
        out = std::move(ps);
    } else if (kind == "bipoints") {
        const std::size_t d = r.count("dimension");
        const std::size_t nl = r.count("left count");
        const std::size_t nr = r.count("right count");
        BigraphInstance inst;
        read_rows(r, d, nl, inst.left);
        read_rows(r, d, nr, inst.right);
        out = std::move(inst);
    } else if (kind == "semilinear") {
        SemilinearInstance inst;
        inst.d = r.count("dimension");
        inst.ell = r.count("term count");
        inst.t = r.count("conjunct count");
        const std::size_t n = r.count("point count");
        for (auto* side : {&inst.g, &inst.h}) {
            side->assign(inst.ell, std::vector<Affine>(inst.t));
            for (auto& term : *side)
                for (auto& f : term)
                    for (std::size_t k = 0; k <= inst.d; ++k) f.push_back(r.rational());
        }
        read_rows(r, inst.d, n, inst.pts);
        out = std::move(inst);
    } else if (kind == "lshapes") {
        LShapeSet set;
        const std::string mode = r.word("grounding mode");
        if (mode == "diag") set.mode = Grounding::diagonal;
        else if (mode == "xaxis") set.mode = Grounding::x_axis;
        else r.fail("grounding mode must be 'diag' or 'xaxis'");
        const std::size_t n = r.count("shape count");
        for (std::size_t i = 0; i < n; ++i) {
            if (set.mode == Grounding::diagonal) {
                Rational cx = r.rational(), cy = r.rational(), h = r.rational(), v = r.rational();
                set.shapes.push_back(LShape::grounded(cx, cy, h, v));
            } else {
                Rational x = r.rational(), h = r.rational(), w = r.rational();
                set.shapes.push_back(LShape::x_grounded(x, h, w));
            }
        }
        out = std::move(set);
    } else if (kind == "intervals") {
        IntervalSet set;
        const std::size_t n = r.count("interval count");
        for (std::size_t i = 0; i < n; ++i) {
            Rational lo = r.rational(), hi = r.rational();
            if (hi < lo) r.fail("interval with lo > hi");
            set.intervals.push_back(Interval{lo, hi, static_cast<Vertex>(i)});
        }
        out = std::move(set);
    } else if (kind == "boxes") {
        BoxSet set;
        set.d = r.count("dimension");
        if (set.d == 0) r.fail("box dimension must be at least 1");
        const std::size_t n = r.count("box count");
        for (std::size_t i = 0; i < n; ++i) {
            Box b;
            b.owner = static_cast<Vertex>(i);
            for (std::size_t k = 0; k < set.d; ++k) {
                b.lo.push_back(r.rational());
                b.hi.push_back(r.rational());
                if (b.hi.back() < b.lo.back()) r.fail("box side with lo > hi");
            }
            set.boxes.push_back(std::move(b));
        }
        out = std::move(set);
    } else if (kind == "segments") {
        SegmentSet set;
        const std::size_t n = r.count("segment count");
        for (std::size_t i = 0; i < n; ++i) {
            Rational x1 = r.rational(), y1 = r.rational(), x2 = r.rational(), y2 = r.rational();
            const std::string color = r.word("a colour");
            Color c = Color::red;
            if (color == "red") c = Color::red;
            else if (color == "blue") c = Color::blue;
            else r.fail("colour must be 'red' or 'blue'");
            set.segments.push_back(ColoredSegment::make({x1, y1}, {x2, y2}, c));
        }
        out = std::move(set);
    } else if (kind == "terrain") {
        TerrainSet set;
        const std::size_t n = r.count("vertex count");
        for (std::size_t i = 0; i < n; ++i) {
            const Rational x = r.rational(), y = r.rational();
            if (!x.is_integer() || !y.is_integer()) r.fail("terrain coordinates must be integers");
            set.points.push_back({x.num(), y.num()});
        }
        out = std::move(set);
    } else if (kind == "halfplanes") {
        HalfplaneConfig cfg;
        const std::size_t np = r.count("point count");
        const std::size_t nl = r.count("line count");
        for (std::size_t i = 0; i < np; ++i) {
            Rational x = r.rational(), y = r.rational();
            cfg.points.emplace_back(x, y);
        }
        for (std::size_t i = 0; i < nl; ++i) {
            Rational m = r.rational(), b = r.rational();
            cfg.lines.emplace_back(m, b);
        }
        out = std::move(cfg);
    } else {
        r.fail("unknown instance kind '" + kind + "'");
    }
    r.finish();
    return out;
}

inline void write_instance(std::ostream& os, const Instance& inst) {
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Graph>) write_graph(os, v);
            else if constexpr (std::is_same_v<T, PointSet>) write_points(os, v);
            else if constexpr (std::is_same_v<T, BigraphInstance>) write_bipoints(os, v);
            else if constexpr (std::is_same_v<T, SemilinearInstance>) write_semilinear(os, v);
            else if constexpr (std::is_same_v<T, LShapeSet>) write_lshapes(os, v);
            else if constexpr (std::is_same_v<T, IntervalSet>) write_intervals(os, v);
            else if constexpr (std::is_same_v<T, BoxSet>) write_boxes(os, v);
            else if constexpr (std::is_same_v<T, SegmentSet>) write_segments(os, v);
            else if constexpr (std::is_same_v<T, TerrainSet>) write_terrain(os, v);
            else write_halfplanes(os, v);
        },
        inst);
}

// ---------------------------------------------------------------------------
// certificate

inline void write_certificate(std::ostream& os, const Certificate& c) {
    os << "kind " << to_string(c.kind) << '\n';
    os << "digest " << c.digest << '\n';
    os << "bound " << c.bound << '\n';
    os << "edges " << c.edges << '\n';
    if (c.kind == CertificateKind::zarankiewicz) {
        os << "t " << c.t << '\n';
        os << "freeness " << (c.asserted_free ? "asserted" : "checked") << '\n';
    } else {
        os << "iota " << c.iota << '\n';
        if (!c.audit.empty()) os << "audit_violations " << c.audit_violations << '\n';
        for (const auto& row : c.audit)
            os << "biclique " << row.biclique << ' ' << row.points << ' ' << row.halfplanes << ' ' << row.iota << '\n';
    }
}

inline std::string to_text(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    return os.str();
}

inline std::string to_text(const BicliqueCover& c) {
    std::ostringstream os;
    write_cover(os, c);
    return os.str();
}

inline std::string to_text(const Instance& inst) {
    std::ostringstream os;
    write_instance(os, inst);
    return os.str();
}

}  // namespace bicover
