#ifndef HARPER_WEIGHTS_HPP
#define HARPER_WEIGHTS_HPP

#include <vector>

#include "harper/graph.hpp"
#include "harper/monomial.hpp"

namespace harper {

// Unitary monomial weight on every edge of a graph. The stored value is the
// weight of the edge in its recorded (u -> v) orientation; reversing an edge
// takes the adjoint.
struct WeightFunction {
    int rank = 0;
    std::vector<UnitaryMonomial> wt; // indexed like Graph::edges

    UnitaryMonomial weight(const OrientedEdge& oe) const {
        return oe.rev ? mono_adjoint(wt[oe.edge]) : wt[oe.edge];
    }
    UnitaryMonomial path_weight(const std::vector<OrientedEdge>& path) const {
        UnitaryMonomial w = UnitaryMonomial::one(rank);
        for (const auto& oe : path) w = mono_mul(weight(oe), w);
        return w;
    }
};

inline void check_weight_function(const Graph& g, const WeightFunction& wf) {
    if (wf.rank != g.rank) throw ValidationError("weight rank differs from graph rank");
    if (int(wf.wt.size()) != g.num_edges())
        throw ValidationError("weight function must assign a weight to every edge");
    for (const auto& m : wf.wt)
        if (int(m.exponent.size()) != g.rank)
            throw ValidationError("weight exponent vector has wrong length");
}

// Tree potential W: W(root) = 1, W(w) = wt(v -> w) * W(v) along tree edges.
inline std::vector<UnitaryMonomial> tree_vertex_potential(const Graph& g, const SpanningTree& t,
                                                          const WeightFunction& wf) {
    std::vector<UnitaryMonomial> W(g.num_vertices(), UnitaryMonomial::one(wf.rank));
    for (int v = 0; v < g.num_vertices(); ++v) W[v] = wf.path_weight(tree_path(g, t, v));
    return W;
}

// Weights expressed through the tree: wt'(e: v -> w) = W(v) * wt(e) * W(w)^*.
// Tree edges become trivial; a non-tree edge carries its loop holonomy.
inline WeightFunction reexpress_through_tree(const Graph& g, const SpanningTree& t,
                                             const WeightFunction& wf) {
    auto W = tree_vertex_potential(g, t, wf);
    WeightFunction out;
    out.rank = wf.rank;
    out.wt.resize(g.num_edges(), UnitaryMonomial::one(wf.rank));
    for (int e = 0; e < g.num_edges(); ++e) {
        OrientedEdge oe{e, false};
        out.wt[e] = mono_mul(W[g.source(oe)], mono_mul(wf.wt[e], mono_adjoint(W[g.target(oe)])));
    }
    return out;
}

// Exponent matrix of the non-tree-edge holonomies (rows = loops), used to
// check that the weights generate the full torus.
inline std::vector<std::vector<long long>> holonomy_exponents(const Graph& g,
                                                              const SpanningTree& t,
                                                              const WeightFunction& wf) {
    WeightFunction treed = reexpress_through_tree(g, t, wf);
    std::vector<std::vector<long long>> rows;
    for (int e = 0; e < g.num_edges(); ++e)
        if (!t.has_edge(e)) rows.push_back(treed.wt[e].exponent);
    return rows;
}

// True iff the holonomy exponents form a basis of Z^rank (|det| == 1).
inline bool weights_generate_torus(const Graph& g, const SpanningTree& t,
                                   const WeightFunction& wf) {
    auto rows = holonomy_exponents(g, t, wf);
    const int n = g.rank;
    if (int(rows.size()) != n) return false;
    // integer determinant by fraction-free Gaussian elimination (Bareiss)
    std::vector<std::vector<long long>> a = rows;
    long long prev = 1;
    long long sign = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) return false;
        if (piv != col) { std::swap(a[piv], a[col]); sign = -sign; }
        for (int r = col + 1; r < n; ++r) {
            for (int c = col + 1; c < n; ++c)
                a[r][c] = (a[r][c] * a[col][col] - a[r][col] * a[col][c]) / prev;
            a[r][col] = 0;
        }
        prev = a[col][col];
    }
    long long det = sign * a[n - 1][n - 1];
    return det == 1 || det == -1;
}

} // namespace harper

#endif
