#ifndef HARPER_HAMILTONIAN_HPP
#define HARPER_HAMILTONIAN_HPP

#include <vector>

#include "harper/linalg.hpp"
#include "harper/weights.hpp"

namespace harper {

// Matrix over the torus algebra: entries are Laurent polynomials in the
// torus generators.
class AMatrix {
public:
    int rows = 0, cols = 0, rank = 0;
    std::vector<TorusPolynomial> a;

    AMatrix() = default;
    AMatrix(int r, int c, int rk)
        : rows(r), cols(c), rank(rk), a(size_t(r) * c, TorusPolynomial(rk)) {}

    TorusPolynomial& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
    const TorusPolynomial& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }

    AMatrix adjoint() const {
        AMatrix m(cols, rows, rank);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(j, i) = (*this)(i, j).adjoint();
        return m;
    }

    friend AMatrix operator*(const AMatrix& x, const AMatrix& y) {
        if (x.cols != y.rows) throw std::logic_error("matrix product shape mismatch");
        AMatrix m(x.rows, y.cols, x.rank);
        for (int i = 0; i < x.rows; ++i)
            for (int j = 0; j < y.cols; ++j)
                for (int k = 0; k < x.cols; ++k)
                    m(i, j) = m(i, j) + x(i, k) * y(k, j);
        return m;
    }

    bool approx_equal(const AMatrix& o, double tol = TorusPolynomial::kDropTol) const {
        if (rows != o.rows || cols != o.cols) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (!a[i].approx_equal(o.a[i], tol)) return false;
        return true;
    }

    CMatrix eval(const TorusPoint& t) const {
        CMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m(i, j) = poly_eval((*this)(i, j), t);
        return m;
    }

    bool is_self_adjoint(double tol = TorusPolynomial::kDropTol) const {
        return approx_equal(adjoint(), tol);
    }
};

// Adjacency Hamiltonian attached to a gauging datum. Entry (i, j) (positions
// in the vertex order) sums the tree-expressed weights of all edges oriented
// from order[i] to order[j]; each loop contributes its holonomy plus the
// adjoint to the diagonal.
inline AMatrix build_hamiltonian(const Graph& g, const SpanningTree& t, const WeightFunction& wf) {
    check_weight_function(g, wf);
    validate_tree(g, t);
    WeightFunction treed = reexpress_through_tree(g, t, wf);
    const int k = g.num_vertices();
    AMatrix H(k, k, g.rank);
    std::vector<int> pos(k);
    for (int i = 0; i < k; ++i) pos[t.order[i]] = i;
    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edges[e];
        const UnitaryMonomial& w = treed.wt[e];
        if (ed.is_loop()) {
            int i = pos[ed.u];
            H(i, i).add_term(w);
            H(i, i).add_term(mono_adjoint(w));
        } else {
            int i = pos[ed.u], j = pos[ed.v];
            H(i, j).add_term(w);
            H(j, i).add_term(mono_adjoint(w));
        }
    }
    return H;
}

} // namespace harper

#endif
