#pragma once

// Instance-kind dispatch shared by the CLI subcommands.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include "bicover/bicover.hpp"

namespace cli {

using namespace bicover;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact edge set of an instance by brute force.
inline Graph oracle_graph(const Instance& inst) {
    return std::visit(
        [](const auto& v) -> Graph {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Graph>) return v;
            else if constexpr (std::is_same_v<T, PointSet>) return comparability_graph_oracle(v);
            else if constexpr (std::is_same_v<T, BigraphInstance>) return comparability_bigraph_oracle(v);
            else if constexpr (std::is_same_v<T, SemilinearInstance>) return semilinear_oracle(v);
            else if constexpr (std::is_same_v<T, LShapeSet>) return lshape_graph_oracle(v.shapes);
            else if constexpr (std::is_same_v<T, IntervalSet>) return interval_graph_oracle(v.intervals, v.intervals.size());
            else if constexpr (std::is_same_v<T, BoxSet>) return box_graph_oracle(v.boxes, v.boxes.size());
            else if constexpr (std::is_same_v<T, SegmentSet>) return bichromatic_oracle(v.segments);
            else if constexpr (std::is_same_v<T, TerrainSet>) return terrain_visibility_bruteforce(v.points);
            else return halfplane_graph(v);
        },
        inst);
}

inline std::size_t vertex_count(const Instance& inst) {
    return std::visit(
        [](const auto& v) -> std::size_t {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Graph>) return v.n();
            else if constexpr (std::is_same_v<T, PointSet>) return v.size();
            else if constexpr (std::is_same_v<T, BigraphInstance>) return v.n();
            else if constexpr (std::is_same_v<T, SemilinearInstance>) return v.n();
            else if constexpr (std::is_same_v<T, LShapeSet>) return v.shapes.size();
            else if constexpr (std::is_same_v<T, IntervalSet>) return v.intervals.size();
            else if constexpr (std::is_same_v<T, BoxSet>) return v.boxes.size();
            else if constexpr (std::is_same_v<T, SegmentSet>) return v.segments.size();
            else if constexpr (std::is_same_v<T, TerrainSet>) return v.points.size();
            else return v.n();
        },
        inst);
}

/// Default construction for each instance kind; `algo` may name it
/// explicitly and must then match the kind.
inline BicliqueCover build_cover(const Instance& inst, const std::string& algo, bool strict) {
    auto want = [&](const char* name) {
        if (algo != "auto" && algo != name)
            throw UsageError("algorithm '" + algo + "' does not apply to a " + instance_kind(inst) + " instance");
    };
    return std::visit(
        [&](const auto& v) -> BicliqueCover {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Graph>) {
                if (algo == "trivial") return trivial_cover(v);
                if (algo == "complete") {
                    if (v.m() != v.n() * (v.n() - (v.n() > 0)) / 2) throw UsageError("graph is not complete");
                    return cover_complete(v.n());
                }
                want("capped");
                if (!v.ordered()) throw UsageError("capped cover needs an ordered graph (flag 1); use --algo trivial");
                return cover_capped(OrderedGraph(v), strict);
            } else if constexpr (std::is_same_v<T, PointSet>) {
                want("dominance");
                return partition_graph(v);
            } else if constexpr (std::is_same_v<T, BigraphInstance>) {
                want("dominance");
                return partition_bigraph(v);
            } else if constexpr (std::is_same_v<T, SemilinearInstance>) {
                want("semilinear");
                return cover_semilinear(v);
            } else if constexpr (std::is_same_v<T, LShapeSet>) {
                want("lshapes");
                return v.mode == Grounding::diagonal ? cover_grounded_L(v.shapes) : cover_x_grounded_L(v.shapes);
            } else if constexpr (std::is_same_v<T, IntervalSet>) {
                want("intervals");
                return cover_intervals(v.intervals);
            } else if constexpr (std::is_same_v<T, BoxSet>) {
                want("boxes");
                return cover_boxes(v.boxes, v.d);
            } else if constexpr (std::is_same_v<T, SegmentSet>) {
                want("segments");
                return cover_bichromatic_segments(v.segments, strict);
            } else if constexpr (std::is_same_v<T, TerrainSet>) {
                want("capped");
                return cover_capped(OrderedGraph(terrain_visibility(v.points)), strict);
            } else {
                want("halfplanes");
                return cover_point_halfplane(v);
            }
        },
        inst);
}

/// Exponent e of the size bound n (log2 n + 1)^e for each generator class.
inline double bound_exponent(const std::string& cls, std::size_t d, std::size_t t) {
    if (cls == "intervals" || cls == "complete") return 1;
    if (cls == "boxes" || cls == "dominance" || cls == "comparability") return static_cast<double>(d);
    if (cls == "semilinear") return static_cast<double>(t + 1);
    return 3;  // capped, terrain, lshapes, segments, erdos
}

inline double size_over_bound(std::size_t size, std::size_t n, double e) {
    if (n < 2) return 0;
    const double lg = std::log2(static_cast<double>(n)) + 1;
    return static_cast<double>(size) / (static_cast<double>(n) * std::pow(lg, e));
}

}  // namespace cli
