#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bicover/dominance.hpp"
#include "bicover/graph.hpp"
#include "bicover/rational.hpp"

namespace bicover {

/// Affine functional c0 + c1 x1 + ... + cd xd, stored as [c0, c1, ..., cd].
using Affine = std::vector<Rational>;

inline Rational evaluate(const Affine& f, std::span<const Rational> x) {
    Rational acc = f[0];
    for (std::size_t k = 0; k < x.size(); ++k)
        if (f[k + 1].num() != 0) acc += f[k + 1] * x[k];
    return acc;
}

/// dnf-semilinear graph of complexity (t, ell):
///   uv in E  <=>  OR_i AND_j  g[i][j](phi(u)) + h[i][j](phi(v)) < 0,
/// closed symmetrically over (u, v) and (v, u); never reflexive.
struct SemilinearInstance {
    std::size_t d = 0;
    std::size_t ell = 0;
    std::size_t t = 0;
    PointSet pts;
    std::vector<std::vector<Affine>> g;  // [ell][t], each of length d + 1
    std::vector<std::vector<Affine>> h;

    std::size_t n() const { return pts.size(); }

    void check() const {
        if (pts.d != d) throw InputError("semilinear point dimension mismatch");
        pts.check();
        for (const auto* side : {&g, &h}) {
            if (side->size() != ell) throw InputError("semilinear: expected ell term rows");
            for (const auto& term : *side) {
                if (term.size() != t) throw InputError("semilinear: expected t conjuncts per term");
                for (const auto& f : term)
                    if (f.size() != d + 1) throw InputError("semilinear: functional needs d+1 coefficients");
            }
        }
    }

    bool term_holds(std::size_t i, Vertex u, Vertex v) const {
        for (std::size_t j = 0; j < t; ++j)
            if (!(evaluate(g[i][j], pts.pts[u]) + evaluate(h[i][j], pts.pts[v]) < Rational(0))) return false;
        return true;
    }

    bool adjacent(Vertex u, Vertex v) const {
        if (u == v) return false;
        for (std::size_t i = 0; i < ell; ++i)
            if (term_holds(i, u, v) || term_holds(i, v, u)) return true;
        return false;
    }
};

/// Exact O(n^2 ell t d) evaluation of the symmetric edge relation.
inline Graph semilinear_oracle(const SemilinearInstance& inst) {
    inst.check();
    return oracle_edges([&](Vertex u, Vertex v) { return inst.adjacent(u, v); }, inst.n());
}

namespace detail {

class SemilinearCover {
public:
    SemilinearCover(const SemilinearInstance& inst, std::vector<Biclique>& out) : inst_(inst), out_(out) {
        // Images g_i(phi(u)) and -h_i(phi(u)) for every term and vertex.
        gimg_.resize(inst.ell);
        himg_.resize(inst.ell);
        for (std::size_t i = 0; i < inst.ell; ++i) {
            gimg_[i].resize(inst.n());
            himg_[i].resize(inst.n());
            for (std::size_t u = 0; u < inst.n(); ++u) {
                for (std::size_t j = 0; j < inst.t; ++j) {
                    gimg_[i][u].push_back(evaluate(inst.g[i][j], inst.pts.pts[u]));
                    himg_[i][u].push_back(-evaluate(inst.h[i][j], inst.pts.pts[u]));
                }
            }
        }
    }

    void run(std::size_t lo, std::size_t hi) {
        if (hi - lo < 2) return;
        const std::size_t mid = lo + (hi - lo) / 2;
        for (std::size_t i = 0; i < inst_.ell; ++i) {
            cut(i, lo, mid, mid, hi);  // g_i(L) < -h_i(R)
            cut(i, mid, hi, lo, mid);  // g_i(R) < -h_i(L)
        }
        run(lo, mid);
        run(mid, hi);
    }

private:
    void cut(std::size_t term, std::size_t gl, std::size_t gh, std::size_t hl, std::size_t hh) {
        BigraphInstance bi;
        bi.left.d = bi.right.d = inst_.t;
        for (std::size_t u = gl; u < gh; ++u) bi.left.pts.push_back(gimg_[term][u]);
        for (std::size_t v = hl; v < hh; ++v) bi.right.pts.push_back(himg_[term][v]);
        auto part = partition_bigraph(bi);
        const std::size_t nl = gh - gl;
        for (auto& b : part.bicliques) {
            for (auto& x : b.left) x = static_cast<Vertex>(gl + x);
            for (auto& x : b.right) x = static_cast<Vertex>(hl + (x - nl));
            std::sort(b.left.begin(), b.left.end());
            std::sort(b.right.begin(), b.right.end());
            out_.push_back(std::move(b));
        }
    }

    const SemilinearInstance& inst_;
    std::vector<Biclique>& out_;
    std::vector<std::vector<std::vector<Rational>>> gimg_;
    std::vector<std::vector<std::vector<Rational>>> himg_;
};

}  // namespace detail

/// Biclique cover of a dnf-semilinear graph. Vertices are halved by index;
/// each term contributes two t-dimensional dominance bigraphs per cut.
/// The result may cover an edge more than once (cover mode).
inline BicliqueCover cover_semilinear(const SemilinearInstance& inst) {
    inst.check();
    BicliqueCover c;
    c.mode = CoverMode::cover;
    detail::SemilinearCover(inst, c.bicliques).run(0, inst.n());
    return c;
}

/// The strict interval-overlap encoding: phi(v) = (lo, hi),
/// f1 = x1 - y2, f2 = y1 - x2 (intervals overlap in an open sense).
inline SemilinearInstance interval_overlap_semilinear(PointSet pts) {
    SemilinearInstance inst;
    inst.d = 2;
    inst.ell = 1;
    inst.t = 2;
    inst.pts = std::move(pts);
    inst.g = {{Affine{0, 1, 0}, Affine{0, 0, -1}}};
    inst.h = {{Affine{0, 0, -1}, Affine{0, 1, 0}}};
    return inst;
}

}  // namespace bicover
