#ifndef HARPER_REGAUGE_HPP
#define HARPER_REGAUGE_HPP

#include <optional>
#include <vector>

#include "harper/hamiltonian.hpp"

namespace harper {

// Matrix whose entries are either zero or unitary monomials; products and
// adjoints stay exact. Gauge matrices are of this kind (monomial-weighted
// permutation matrices).
class MonomialMatrix {
public:
    int n = 0, rank = 0;
    std::vector<std::optional<UnitaryMonomial>> a;

    MonomialMatrix() = default;
    MonomialMatrix(int n_, int rank_) : n(n_), rank(rank_), a(size_t(n_) * n_) {}

    static MonomialMatrix identity(int n, int rank) {
        MonomialMatrix m(n, rank);
        for (int i = 0; i < n; ++i) m.at(i, i) = UnitaryMonomial::one(rank);
        return m;
    }

    std::optional<UnitaryMonomial>& at(int i, int j) { return a[size_t(i) * n + j]; }
    const std::optional<UnitaryMonomial>& at(int i, int j) const { return a[size_t(i) * n + j]; }

    MonomialMatrix adjoint() const {
        MonomialMatrix m(n, rank);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (at(i, j)) m.at(j, i) = mono_adjoint(*at(i, j));
        return m;
    }

    // Valid whenever no two nonzero summands collide (true for monomial-
    // weighted permutation matrices).
    friend MonomialMatrix operator*(const MonomialMatrix& x, const MonomialMatrix& y) {
        MonomialMatrix m(x.n, x.rank);
        for (int i = 0; i < x.n; ++i)
            for (int k = 0; k < x.n; ++k) {
                if (!x.at(i, k)) continue;
                for (int j = 0; j < x.n; ++j) {
                    if (!y.at(k, j)) continue;
                    if (m.at(i, j))
                        throw std::logic_error("monomial matrix product has colliding terms");
                    m.at(i, j) = mono_mul(*x.at(i, k), *y.at(k, j));
                }
            }
        return m;
    }

    MonomialMatrix scaled(const UnitaryMonomial& s) const {
        MonomialMatrix m(n, rank);
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i]) m.a[i] = mono_mul(s, *a[i]);
        return m;
    }

    friend bool operator==(const MonomialMatrix& x, const MonomialMatrix& y) {
        if (x.n != y.n) return false;
        for (size_t i = 0; i < x.a.size(); ++i) {
            if (bool(x.a[i]) != bool(y.a[i])) return false;
            if (x.a[i] && !(*x.a[i] == *y.a[i])) return false;
        }
        return true;
    }

    AMatrix to_amatrix() const {
        AMatrix m(n, n, rank);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (at(i, j)) m(i, j) = TorusPolynomial::from_mono(*at(i, j));
        return m;
    }
    CMatrix eval(const TorusPoint& t) const { return to_amatrix().eval(t); }

    bool is_unitary() const {
        return (*this) * adjoint() == identity(n, rank);
    }
};

// Gauge potential carrying the datum (t, wf) to the datum t2: computed by
// propagating the t-expressed weights along the t2 tree from its root.
// phi(root2) = 1, phi(w) = wt_t(v -> w) * phi(v) for t2-edges.
inline std::vector<UnitaryMonomial> gauge_potential(const Graph& g, const SpanningTree& t,
                                                    const SpanningTree& t2,
                                                    const WeightFunction& wf) {
    WeightFunction treed = reexpress_through_tree(g, t, wf);
    return tree_vertex_potential(g, t2, treed);
}

// Re-gauging matrix M with M[pos_{t2}(v), pos_t(v)] = phi(v). It intertwines
// the Hamiltonians: H_{t2} = M H_t M^*.
inline MonomialMatrix regauge_matrix(const Graph& g, const SpanningTree& t,
                                     const SpanningTree& t2, const WeightFunction& wf) {
    auto phi = gauge_potential(g, t, t2, wf);
    const int k = g.num_vertices();
    MonomialMatrix M(k, g.rank);
    for (int v = 0; v < k; ++v) M.at(t2.position(v), t.position(v)) = phi[v];
    return M;
}

// Weights after re-gauging: wt'(e: v -> w) = phi(v) * wt_t(e) * phi(w)^*.
// These are compatible with t2 (every t2-edge weight is trivial).
inline WeightFunction regauged_weights(const Graph& g, const SpanningTree& t,
                                       const SpanningTree& t2, const WeightFunction& wf) {
    WeightFunction treed = reexpress_through_tree(g, t, wf);
    auto phi = gauge_potential(g, t, t2, wf);
    WeightFunction out;
    out.rank = wf.rank;
    out.wt.resize(g.num_edges(), UnitaryMonomial::one(wf.rank));
    for (int e = 0; e < g.num_edges(); ++e) {
        OrientedEdge oe{e, false};
        out.wt[e] =
            mono_mul(phi[g.source(oe)], mono_mul(treed.wt[e], mono_adjoint(phi[g.target(oe)])));
    }
    return out;
}

// Weight function transported along an automorphism: the image edge carries
// the weight of its preimage (with orientation bookkeeping for flipped loops).
inline WeightFunction transport_weights(const Graph& g, const GraphAutomorphism& phi,
                                        const WeightFunction& wf) {
    WeightFunction out;
    out.rank = wf.rank;
    out.wt.resize(g.num_edges(), UnitaryMonomial::one(wf.rank));
    for (int e = 0; e < g.num_edges(); ++e) {
        OrientedEdge img = phi.apply(OrientedEdge{e, false});
        out.wt[img.edge] = img.rev ? mono_adjoint(wf.wt[e]) : wf.wt[e];
    }
    return out;
}

// Symmetry lift of an automorphism over the base datum (t, wf): the
// re-gauging matrix from (t, wf) to the pushed-forward datum g(t).
inline MonomialMatrix symmetry_matrix(const Graph& g, const SpanningTree& t,
                                      const WeightFunction& wf, const GraphAutomorphism& phi) {
    return regauge_matrix(g, t, push_forward(g, t, phi), wf);
}

namespace detail {
inline UnitaryMonomial scalar_ratio(const MonomialMatrix& lhs, const MonomialMatrix& rhs) {
    std::optional<UnitaryMonomial> c;
    for (int i = 0; i < lhs.n; ++i)
        for (int j = 0; j < lhs.n; ++j) {
            if (bool(lhs.at(i, j)) != bool(rhs.at(i, j)))
                throw std::logic_error("matrices differ by more than a scalar");
            if (!lhs.at(i, j)) continue;
            UnitaryMonomial r = mono_mul(*lhs.at(i, j), mono_adjoint(*rhs.at(i, j)));
            if (!c) c = r;
            else if (!(*c == r)) throw std::logic_error("matrix ratio is not scalar");
        }
    if (!c) throw std::logic_error("zero matrix in scalar ratio");
    return *c;
}
} // namespace detail

// Scalar 2-cocycle of a composable pair of re-gaugings ta -> tb -> tc: the
// exact monomial C with M(tb -> tc) * M(ta -> tb) = C * M(ta -> tc).
inline UnitaryMonomial cocycle_trees(const Graph& g, const WeightFunction& wf,
                                     const SpanningTree& ta, const SpanningTree& tb,
                                     const SpanningTree& tc) {
    MonomialMatrix lhs = regauge_matrix(g, tb, tc, wf) * regauge_matrix(g, ta, tb, wf);
    return detail::scalar_ratio(lhs, regauge_matrix(g, ta, tc, wf));
}

// Cocycle of a pair of automorphism lifts over the base datum t: the second
// factor is based at the pushed-forward datum, so the morphisms compose.
inline UnitaryMonomial cocycle(const Graph& g, const SpanningTree& t, const WeightFunction& wf,
                               const GraphAutomorphism& h, const GraphAutomorphism& phi) {
    SpanningTree t1 = push_forward(g, t, phi);
    SpanningTree t2 = push_forward(g, t1, h);
    return cocycle_trees(g, wf, t, t1, t2);
}

// Checks M(tb -> tc) * M(ta -> tb) == C * M(ta -> tc) entry by entry.
inline bool verify_cocycle_equation(const Graph& g, const WeightFunction& wf,
                                    const SpanningTree& ta, const SpanningTree& tb,
                                    const SpanningTree& tc) {
    MonomialMatrix lhs = regauge_matrix(g, tb, tc, wf) * regauge_matrix(g, ta, tb, wf);
    MonomialMatrix rhs =
        regauge_matrix(g, ta, tc, wf).scaled(cocycle_trees(g, wf, ta, tb, tc));
    return lhs == rhs;
}

} // namespace harper

#endif
