// bicover: generate instances, build and check biclique covers, and run the
// compressed-graph algorithms on them.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or format error.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dispatch.hpp"

using namespace cli;
using json = nlohmann::json;

namespace {

struct Global {
    std::uint64_t seed = 1;
    bool fast = false;
    bool strict = false;
    std::string format = "text";
    bool no_timing = false;
};

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return read_instance(in);
}

BicliqueCover load_cover(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return read_cover(in);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << text;
}

std::size_t max_vertex_plus_one(const BicliqueCover& c) {
    std::size_t n = 0;
    for (const auto& b : c.bicliques) {
        for (Vertex v : b.left) n = std::max<std::size_t>(n, v + 1);
        for (Vertex v : b.right) n = std::max<std::size_t>(n, v + 1);
    }
    return n;
}

std::string dist_str(std::size_t d) { return d == kUnreachable ? "inf" : std::to_string(d); }

// ---------------------------------------------------------------------------
// gen

struct GenParams {
    std::size_t n = 100;
    std::size_t d = 2;
    std::size_t k = 2;
    double p = 0.1;
    std::size_t ell = 1;
    std::size_t t = 2;
    std::size_t n_red = 0;
    std::size_t n_blue = 0;
    std::int64_t max_len = 8;
    std::string mode = "diag";
};

const std::vector<std::string> kGenClasses = {"terrain", "capped",   "intervals", "boxes",   "segments",
                                              "lshapes", "erdos",    "semilinear-demo", "points", "bipoints",
                                              "graph"};

std::pair<Instance, std::string> generate(const std::string& cls, const GenParams& p, std::uint64_t seed) {
    std::ostringstream params;
    Instance inst;
    if (cls == "terrain") {
        inst = TerrainSet{gen_terrain(p.n, seed).points};
        params << "n=" << p.n;
    } else if (cls == "capped") {
        inst = gen_capped_closure(p.n, p.p, seed);
        params << "n=" << p.n << ",p=" << p.p;
    } else if (cls == "intervals") {
        inst = IntervalSet{gen_intervals(p.n, seed, p.max_len)};
        params << "n=" << p.n << ",max_len=" << p.max_len;
    } else if (cls == "boxes") {
        inst = BoxSet{p.d, gen_boxes(p.n, p.d, seed)};
        params << "n=" << p.n << ",d=" << p.d;
    } else if (cls == "segments") {
        const std::size_t red = p.n_red ? p.n_red : p.n / 2;
        const std::size_t blue = p.n_blue ? p.n_blue : p.n - p.n / 2;
        inst = SegmentSet{gen_segments(red, blue, seed)};
        params << "red=" << red << ",blue=" << blue;
    } else if (cls == "lshapes") {
        if (p.mode != "diag" && p.mode != "xaxis") throw UsageError("--mode must be diag or xaxis");
        const Grounding g = p.mode == "diag" ? Grounding::diagonal : Grounding::x_axis;
        inst = LShapeSet{g, gen_lshapes(p.n, g, seed)};
        params << "n=" << p.n << ",mode=" << p.mode;
    } else if (cls == "erdos") {
        inst = gen_erdos(p.k).config;
        params << "k=" << p.k;
    } else if (cls == "semilinear-demo") {
        inst = gen_semilinear(p.n, p.d, p.ell, p.t, seed);
        params << "n=" << p.n << ",d=" << p.d << ",ell=" << p.ell << ",t=" << p.t;
    } else if (cls == "points") {
        inst = gen_points(p.n, p.d, std::int64_t{1} << 20, seed);
        params << "n=" << p.n << ",d=" << p.d;
    } else if (cls == "bipoints") {
        inst = gen_bipoints(p.n / 2, p.n - p.n / 2, p.d, std::int64_t{1} << 20, seed);
        params << "n=" << p.n << ",d=" << p.d;
    } else if (cls == "graph") {
        inst = gen_random_graph(p.n, p.p, seed);
        params << "n=" << p.n << ",p=" << p.p;
    } else {
        throw UsageError("unknown instance class '" + cls + "'");
    }
    return {std::move(inst), params.str()};
}

int cmd_gen(const Global& g, const std::string& cls, const GenParams& p, const std::string& out) {
    auto [inst, params] = generate(cls, p, g.seed);
    write_text(out, to_text(inst));
    if (!out.empty() && out != "-")
        write_text(out + ".manifest", "gen " + cls + " " + params + " " + std::to_string(g.seed) + "\n");
    return 0;
}

// ---------------------------------------------------------------------------
// cover / verify

int cmd_cover(const Global& g, const std::string& path, const std::string& algo, const std::string& out) {
    const Instance inst = load_instance(path);
    const auto start = std::chrono::steady_clock::now();
    const BicliqueCover c = build_cover(inst, algo, !g.fast);
    const auto stop = std::chrono::steady_clock::now();
    const long long millis =
        g.no_timing ? 0 : std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    if (!out.empty()) write_text(out, to_text(c));
    const std::size_t n = vertex_count(inst);
    const std::size_t m = oracle_graph(inst).m();
    const std::size_t mult = max_vertex_multiplicity(c, n);
    if (g.format == "json") {
        std::cout << json{{"n", n}, {"m", m}, {"size", c.size()}, {"bicliques", c.count()},
                          {"max_multiplicity", mult}, {"millis", millis}}
                         .dump()
                  << '\n';
    } else {
        std::cout << n << ' ' << m << ' ' << c.size() << ' ' << c.count() << ' ' << mult << ' ' << millis << '\n';
    }
    return 0;
}

int cmd_verify(const Global& g, const std::string& inst_path, const std::string& cover_path, const std::string& mode,
               bool oracle) {
    const Instance inst = load_instance(inst_path);
    if (!std::holds_alternative<Graph>(inst) && !oracle)
        throw UsageError(std::string("a ") + instance_kind(inst) + " instance needs --oracle");
    BicliqueCover c = load_cover(cover_path);
    if (mode == "cover") c.mode = CoverMode::cover;
    else if (mode == "partition") c.mode = CoverMode::partition;
    else if (!mode.empty()) throw UsageError("--mode must be cover or partition");
    const Graph graph = oracle_graph(inst);
    const ValidationReport r = validate_cover(graph, c);

    constexpr std::size_t kShow = 20;
    if (g.format == "json") {
        json j{{"valid", r.valid}, {"measured_size", r.measured_size}, {"max_vertex_multiplicity", r.max_vertex_multiplicity}};
        j["uncovered_edges"] = json::array();
        for (std::size_t i = 0; i < r.uncovered_edges.size() && i < kShow; ++i)
            j["uncovered_edges"].push_back({r.uncovered_edges[i].first, r.uncovered_edges[i].second});
        j["non_edges_in_bicliques"] = json::array();
        for (std::size_t i = 0; i < r.non_edges_in_bicliques.size() && i < kShow; ++i) {
            const auto& e = r.non_edges_in_bicliques[i];
            j["non_edges_in_bicliques"].push_back({e.biclique, e.u, e.v});
        }
        j["multiplicity_violations"] = json::array();
        for (std::size_t i = 0; i < r.multiplicity_violations.size() && i < kShow; ++i)
            j["multiplicity_violations"].push_back({r.multiplicity_violations[i].first, r.multiplicity_violations[i].second});
        j["counts"] = {r.uncovered_edges.size(), r.non_edges_in_bicliques.size(), r.multiplicity_violations.size()};
        std::cout << j.dump() << '\n';
    } else {
        std::cout << (r.valid ? "valid" : "invalid") << ' ' << to_string(c.mode) << " size " << r.measured_size
                  << " max_multiplicity " << r.max_vertex_multiplicity << '\n';
        std::cout << "uncovered_edges " << r.uncovered_edges.size() << '\n';
        for (std::size_t i = 0; i < r.uncovered_edges.size() && i < kShow; ++i)
            std::cout << "  uncovered " << r.uncovered_edges[i].first << ' ' << r.uncovered_edges[i].second << '\n';
        std::cout << "non_edges_in_bicliques " << r.non_edges_in_bicliques.size() << '\n';
        for (std::size_t i = 0; i < r.non_edges_in_bicliques.size() && i < kShow; ++i) {
            const auto& e = r.non_edges_in_bicliques[i];
            std::cout << "  non_edge biclique " << e.biclique << ' ' << e.u << ' ' << e.v << '\n';
        }
        std::cout << "multiplicity_violations " << r.multiplicity_violations.size() << '\n';
        for (std::size_t i = 0; i < r.multiplicity_violations.size() && i < kShow; ++i)
            std::cout << "  repeated " << r.multiplicity_violations[i].first << ' ' << r.multiplicity_violations[i].second
                      << '\n';
    }
    return r.valid ? 0 : 1;
}

// ---------------------------------------------------------------------------
// compressed

int cmd_bfs(const Global& g, const std::string& cover_path, std::optional<std::size_t> n, std::size_t root) {
    const BicliqueCover c = load_cover(cover_path);
    const std::size_t nn = n.value_or(max_vertex_plus_one(c));
    const auto dist = bfs_via_cover(nn, c, static_cast<Vertex>(root));
    if (g.format == "json") {
        json arr = json::array();
        for (auto d : dist) arr.push_back(d == kUnreachable ? json(nullptr) : json(d));
        std::cout << json{{"root", root}, {"dist", arr}}.dump() << '\n';
    } else {
        for (std::size_t v = 0; v < dist.size(); ++v) std::cout << v << ' ' << dist_str(dist[v]) << '\n';
    }
    return 0;
}

int cmd_apsp(const Global& g, const std::string& cover_path, std::optional<std::size_t> n) {
    const BicliqueCover c = load_cover(cover_path);
    const std::size_t nn = n.value_or(max_vertex_plus_one(c));
    const DistanceMatrix m = apsp_via_cover(nn, c);
    if (g.format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < nn; ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < nn; ++j) row.push_back(m.at(i, j) == kUnreachable ? json(nullptr) : json(m.at(i, j)));
            rows.push_back(row);
        }
        std::cout << rows.dump() << '\n';
    } else {
        for (std::size_t i = 0; i < nn; ++i) {
            for (std::size_t j = 0; j < nn; ++j) std::cout << (j ? " " : "") << dist_str(m.at(i, j));
            std::cout << '\n';
        }
    }
    return 0;
}

int cmd_spanner(const Global& g, const std::string& cover_path, std::optional<std::size_t> n,
                const std::string& graph_path, std::size_t t, const std::string& out) {
    const BicliqueCover c = load_cover(cover_path);
    std::optional<Graph> graph;
    if (!graph_path.empty()) graph = oracle_graph(load_instance(graph_path));
    const std::size_t nn = n.value_or(graph ? graph->n() : max_vertex_plus_one(c));
    const auto edges = spanner_3hop(nn, c);
    const Graph h(nn, edges);
    if (!out.empty()) write_text(out, to_text(h));
    bool ok = true;
    if (graph) ok = verify_spanner(*graph, edges, t);
    if (g.format == "json") {
        json j{{"edges", edges.size()}, {"cover_size", c.size()}};
        if (graph) j["verified"] = ok, j["t"] = t;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "spanner_edges " << edges.size() << " cover_size " << c.size();
        if (graph) std::cout << " t " << t << ' ' << (ok ? "verified" : "FAILED");
        std::cout << '\n';
        if (out.empty()) write_graph(std::cout, h);
    }
    return ok ? 0 : 1;
}

int cmd_cert(const Global& g, const std::string& kind, const std::string& path, std::size_t t, bool assume_free,
             const std::string& cover_path) {
    const Instance inst = load_instance(path);
    Certificate cert;
    try {
        if (kind == "zarankiewicz") {
            // halfplane containment graphs are dense in K_{2,2}; the bound is
            // about the on-line incidences
            const auto* cfg = std::get_if<HalfplaneConfig>(&inst);
            cert = zarankiewicz_certificate(cfg ? incidence_graph(*cfg) : oracle_graph(inst), t, assume_free);
        } else if (kind == "charging") {
            const auto* cfg = std::get_if<HalfplaneConfig>(&inst);
            if (!cfg) throw UsageError("charging certificates need a halfplanes instance");
            std::optional<BicliqueCover> c;
            if (!cover_path.empty()) c = load_cover(cover_path);
            cert = charging_certificate(*cfg, c ? &*c : nullptr);
        } else {
            throw UsageError("certificate kind must be zarankiewicz or charging");
        }
    } catch (const KttFoundError& e) {
        std::cout << "refused " << e.what() << '\n';
        return 1;
    } catch (const SoundnessError& e) {
        std::cout << "unsound " << e.what() << '\n';
        return 1;
    }
    if (g.format == "json") {
        json j{{"kind", to_string(cert.kind)}, {"digest", cert.digest}, {"bound", cert.bound}, {"edges", cert.edges}};
        if (cert.kind == CertificateKind::zarankiewicz) j["t"] = cert.t;
        else j["iota"] = cert.iota, j["audit_violations"] = cert.audit_violations;
        std::cout << j.dump() << '\n';
    } else {
        write_certificate(std::cout, cert);
    }
    return cert.audit_violations == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------
// bench

struct BenchRow {
    std::string cls;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::size_t size = 0;
    std::size_t bicliques = 0;
    std::size_t max_mult = 0;
    long long millis = 0;
    double ratio = 0;
    std::optional<std::size_t> cert_bound;
};

Instance bench_instance(const std::string& cls, std::size_t n, std::size_t d, std::uint64_t seed) {
    if (cls == "intervals") return IntervalSet{gen_intervals(n, seed)};
    if (cls == "boxes") return BoxSet{d, gen_boxes(n, d, seed)};
    if (cls == "dominance") return gen_bipoints(n / 2, n - n / 2, d, std::int64_t{1} << 30, seed);
    if (cls == "comparability") return gen_points(n, d, std::int64_t{1} << 30, seed);
    if (cls == "semilinear") {
        PointSet pts;
        pts.d = 2;
        for (const auto& iv : gen_intervals(n, seed)) pts.pts.push_back({iv.lo, iv.hi});
        return interval_overlap_semilinear(std::move(pts));
    }
    if (cls == "capped") return gen_capped_closure(n, 4.0 / static_cast<double>(n), seed);
    if (cls == "terrain") return TerrainSet{gen_terrain(n, seed).points};
    if (cls == "lshapes") return LShapeSet{Grounding::diagonal, gen_lshapes(n, Grounding::diagonal, seed)};
    if (cls == "xlshapes") return LShapeSet{Grounding::x_axis, gen_lshapes(n, Grounding::x_axis, seed)};
    if (cls == "segments") return SegmentSet{gen_segments(n / 2, n - n / 2, seed)};
    if (cls == "complete") return Graph(n, [&] {
        std::vector<Edge> e;
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        return e;
    }());
    throw UsageError("unknown bench class '" + cls + "'");
}

std::string svg_plot(const std::vector<BenchRow>& rows) {
    std::map<std::string, std::vector<std::pair<double, double>>> series;
    double xmin = 1e300, xmax = -1e300, ymax = 0;
    for (const auto& r : rows) {
        const double x = std::log2(static_cast<double>(std::max<std::size_t>(r.n, 1)));
        series[r.cls].emplace_back(x, r.ratio);
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymax = std::max(ymax, r.ratio);
    }
    if (xmax <= xmin) xmax = xmin + 1;
    if (ymax <= 0) ymax = 1;
    const double w = 640, h = 400, pad = 50;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
    os << "<text x=\"" << pad << "\" y=\"20\" font-size=\"14\">size / bound vs log2 n (max " << ymax << ")</text>\n";
    os << "<line x1=\"" << pad << "\" y1=\"" << h - pad << "\" x2=\"" << w - pad << "\" y2=\"" << h - pad
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << pad << "\" y1=\"" << pad << "\" x2=\"" << pad << "\" y2=\"" << h - pad
       << "\" stroke=\"black\"/>\n";
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    std::size_t ci = 0;
    for (const auto& [cls, pts] : series) {
        os << "<polyline fill=\"none\" stroke=\"" << colors[ci % 6] << "\" points=\"";
        for (const auto& [x, y] : pts)
            os << pad + (x - xmin) / (xmax - xmin) * (w - 2 * pad) << ',' << h - pad - y / ymax * (h - 2 * pad) << ' ';
        os << "\"/>\n<text x=\"" << w - pad - 80 << "\" y=\"" << pad + 16 * static_cast<double>(ci) << "\" fill=\""
           << colors[ci % 6] << "\" font-size=\"12\">" << cls << "</text>\n";
        ++ci;
    }
    os << "</svg>\n";
    return os.str();
}

int cmd_bench(const Global& g, const std::string& cls, std::size_t log_min, std::size_t log_max, std::size_t reps,
              std::size_t d, const std::string& csv, const std::string& plot) {
    if (log_min > log_max || log_max > 20) throw UsageError("need --log-min <= --log-max <= 20");
    std::vector<BenchRow> rows;
    for (std::size_t lg = log_min; lg <= log_max; lg += 1) {
        for (std::size_t rep = 0; rep < reps; ++rep) {
            const std::uint64_t seed = g.seed + rep;
            BenchRow row;
            row.cls = cls;
            row.seed = seed;
            if (cls == "erdos") {
                const std::size_t k = lg;  // n = 3 k^3
                const auto e = gen_erdos(k);
                row.n = e.config.n();
                const auto start = std::chrono::steady_clock::now();
                const auto c = cover_point_halfplane(e.config);
                const auto stop = std::chrono::steady_clock::now();
                row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
                row.size = c.size();
                row.bicliques = c.count();
                row.max_mult = max_vertex_multiplicity(c, row.n);
                row.cert_bound = charging_certificate(e.config).bound;
                row.ratio = size_over_bound(row.size, row.n, bound_exponent(cls, d, 2));
            } else {
                const std::size_t n = std::size_t{1} << lg;
                const Instance inst = bench_instance(cls, n, d, seed);
                row.n = vertex_count(inst);
                const auto start = std::chrono::steady_clock::now();
                const auto c = build_cover(inst, "auto", !g.fast);
                const auto stop = std::chrono::steady_clock::now();
                row.millis = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
                row.size = c.size();
                row.bicliques = c.count();
                row.max_mult = max_vertex_multiplicity(c, row.n);
                row.ratio = size_over_bound(row.size, row.n, bound_exponent(cls, d, 2));
            }
            if (g.no_timing) row.millis = 0;
            rows.push_back(row);
        }
    }
    std::sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
        return std::tie(a.cls, a.n, a.seed) < std::tie(b.cls, b.n, b.seed);
    });
    std::ostringstream os;
    os << "class,n,seed,size,bicliques,max_mult,millis,size_over_bound";
    if (cls == "erdos") os << ",cert_bound";
    os << '\n';
    for (const auto& r : rows) {
        char ratio[32];
        std::snprintf(ratio, sizeof ratio, "%.6f", r.ratio);
        os << r.cls << ',' << r.n << ',' << r.seed << ',' << r.size << ',' << r.bicliques << ',' << r.max_mult << ','
           << r.millis << ',' << ratio;
        if (r.cert_bound) os << ',' << *r.cert_bound;
        os << '\n';
    }
    write_text(csv, os.str());
    if (!plot.empty()) write_text(plot, svg_plot(rows));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Biclique covers of geometric graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--seed", g.seed, "random seed");
    auto* fast = app.add_flag("--fast", g.fast, "skip precondition checks (unchecked input)");
    app.add_flag("--strict", g.strict, "check preconditions (default)")->excludes(fast);
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--no-timing", g.no_timing, "report 0 for all timings, for byte-identical output");

    std::function<int()> run;

    // gen
    auto* gen = app.add_subcommand("gen", "generate an instance");
    std::string gen_class, gen_out;
    GenParams gp;
    gen->add_option("class", gen_class, "instance class")->required();
    gen->add_option("--n", gp.n, "vertex count");
    gen->add_option("--d", gp.d, "dimension");
    gen->add_option("--k", gp.k, "grid parameter (erdos)");
    gen->add_option("--p", gp.p, "edge probability (capped, graph)");
    gen->add_option("--ell", gp.ell, "DNF terms");
    gen->add_option("--t", gp.t, "conjuncts per term");
    gen->add_option("--red", gp.n_red, "red segments");
    gen->add_option("--blue", gp.n_blue, "blue segments");
    gen->add_option("--max-len", gp.max_len, "maximum interval length");
    gen->add_option("--mode", gp.mode, "L-shape grounding: diag or xaxis");
    gen->add_option("--out,-o", gen_out, "output path (default stdout)");
    gen->callback([&] { run = [&] { return cmd_gen(g, gen_class, gp, gen_out); }; });

    // cover
    auto* cover = app.add_subcommand("cover", "build a cover of an instance");
    std::string cover_in, cover_algo = "auto", cover_out;
    cover->add_option("instance", cover_in)->required();
    cover->add_option("--algo", cover_algo,
                      "auto, trivial, complete, capped, dominance, semilinear, lshapes, intervals, boxes, segments, "
                      "halfplanes");
    cover->add_option("--out,-o", cover_out, "cover output path");
    cover->callback([&] { run = [&] { return cmd_cover(g, cover_in, cover_algo, cover_out); }; });

    // verify
    auto* verify = app.add_subcommand("verify", "check a cover against a graph or instance");
    std::string ver_in, ver_cover, ver_mode;
    bool ver_oracle = false;
    verify->add_option("instance", ver_in)->required();
    verify->add_option("cover", ver_cover)->required();
    verify->add_option("--mode", ver_mode, "check as cover or partition (default: the file's mode)");
    verify->add_flag("--oracle", ver_oracle, "rebuild the edge set by brute force from the instance");
    verify->callback([&] { run = [&] { return cmd_verify(g, ver_in, ver_cover, ver_mode, ver_oracle); }; });

    // bfs / apsp
    auto* bfs = app.add_subcommand("bfs", "BFS distances through a cover");
    std::string bfs_cover;
    std::optional<std::size_t> bfs_n;
    std::size_t bfs_root = 0;
    bfs->add_option("cover", bfs_cover)->required();
    bfs->add_option("--n", bfs_n, "vertex count (default: largest id + 1)");
    bfs->add_option("--root", bfs_root);
    bfs->callback([&] { run = [&] { return cmd_bfs(g, bfs_cover, bfs_n, bfs_root); }; });

    auto* apsp = app.add_subcommand("apsp", "all-pairs distances through a cover");
    std::string apsp_cover;
    std::optional<std::size_t> apsp_n;
    apsp->add_option("cover", apsp_cover)->required();
    apsp->add_option("--n", apsp_n);
    apsp->callback([&] { run = [&] { return cmd_apsp(g, apsp_cover, apsp_n); }; });

    // spanner
    auto* span = app.add_subcommand("spanner", "3-hop spanner from a cover");
    std::string sp_cover, sp_graph, sp_out;
    std::optional<std::size_t> sp_n;
    std::size_t sp_t = 3;
    span->add_option("cover", sp_cover)->required();
    span->add_option("--n", sp_n);
    span->add_option("--graph", sp_graph, "graph or instance to verify against");
    span->add_option("--t", sp_t, "hop bound for verification");
    span->add_option("--out,-o", sp_out, "spanner output path");
    span->callback([&] { run = [&] { return cmd_spanner(g, sp_cover, sp_n, sp_graph, sp_t, sp_out); }; });

    // cert
    auto* cert = app.add_subcommand("cert", "lower-bound certificate");
    std::string cert_kind, cert_in, cert_cover;
    std::size_t cert_t = 2;
    bool cert_assume = false;
    cert->add_option("kind", cert_kind, "zarankiewicz or charging")->required();
    cert->add_option("instance", cert_in)->required();
    cert->add_option("--t", cert_t);
    cert->add_flag("--assume-free", cert_assume, "take K_{t,t}-freeness as given");
    cert->add_option("--cover", cert_cover, "cover to audit (charging)");
    cert->callback([&] { run = [&] { return cmd_cert(g, cert_kind, cert_in, cert_t, cert_assume, cert_cover); }; });

    // bench
    auto* bench = app.add_subcommand("bench", "size sweep over n = 2^log-min .. 2^log-max");
    std::string b_class, b_csv, b_plot;
    std::size_t b_min = 8, b_max = 12, b_reps = 1, b_d = 2;
    bench->add_option("class", b_class)->required();
    bench->add_option("--log-min", b_min);
    bench->add_option("--log-max", b_max);
    bench->add_option("--reps", b_reps);
    bench->add_option("--d", b_d);
    bench->add_option("--csv", b_csv, "CSV output path (default stdout)");
    bench->add_option("--plot", b_plot, "SVG plot path");
    bench->callback([&] { run = [&] { return cmd_bench(g, b_class, b_min, b_max, b_reps, b_d, b_csv, b_plot); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return run ? run() : 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << '\n';
        return 2;
    } catch (const MalformedCoverError& e) {
        std::cerr << "malformed cover: " << e.what() << '\n';
        return 2;
    } catch (const NotCappedError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
