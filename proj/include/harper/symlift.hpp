#ifndef HARPER_SYMLIFT_HPP
#define HARPER_SYMLIFT_HPP

#include <vector>

#include "harper/regauge.hpp"
#include "harper/snf.hpp"

namespace harper {

// Affine torus map t -> E * t + offset (mod 1), E integral.
struct TorusAction {
    IMatrix E;
    std::vector<Rational> offset;

    int n() const { return int(offset.size()); }

    static TorusAction identity(int n) {
        TorusAction a;
        a.E.assign(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i) a.E[i][i] = 1;
        a.offset.assign(n, Rational(0));
        return a;
    }

    std::vector<Rational> apply(const std::vector<Rational>& t) const {
        std::vector<Rational> out(n(), Rational(0));
        for (int i = 0; i < n(); ++i) {
            for (int j = 0; j < n(); ++j) out[i] = out[i] + Rational(E[i][j]) * t[j];
            out[i] = (out[i] + offset[i]).mod1();
        }
        return out;
    }
    std::vector<double> apply(const std::vector<double>& t) const {
        std::vector<double> out(n(), 0.0);
        for (int i = 0; i < n(); ++i) {
            for (int j = 0; j < n(); ++j) out[i] += double(E[i][j]) * t[j];
            out[i] += offset[i].to_double();
            out[i] -= std::floor(out[i]);
        }
        return out;
    }
    TorusPoint apply(const TorusPoint& t) const {
        if (t.exact()) return TorusPoint::turns(apply(t.turns_exact()));
        return TorusPoint::turns(apply(t.turns_d()));
    }

    bool fixes(const std::vector<Rational>& t) const {
        auto img = apply(t);
        for (int i = 0; i < n(); ++i)
            if (!(img[i] == t[i].mod1())) return false;
        return true;
    }

    friend bool operator==(const TorusAction& a, const TorusAction& b) {
        if (a.E != b.E || a.n() != b.n()) return false;
        for (int i = 0; i < a.n(); ++i)
            if (!(a.offset[i].mod1() == b.offset[i].mod1())) return false;
        return true;
    }
};

// a after b: (a . b)(t) = E_a (E_b t + o_b) + o_a.
inline TorusAction compose(const TorusAction& a, const TorusAction& b) {
    const int n = a.n();
    TorusAction c = TorusAction::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            c.E[i][j] = 0;
            for (int k = 0; k < n; ++k) c.E[i][j] += a.E[i][k] * b.E[k][j];
        }
    for (int i = 0; i < n; ++i) {
        Rational o = a.offset[i];
        for (int k = 0; k < n; ++k) o = o + Rational(a.E[i][k]) * b.offset[k];
        c.offset[i] = o.mod1();
    }
    return c;
}

inline long long integer_det(const IMatrix& a0) {
    IMatrix a = a0;
    const int n = int(a.size());
    long long prev = 1, sign = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != col) { std::swap(a[piv], a[col]); sign = -sign; }
        for (int r = col + 1; r < n; ++r) {
            for (int c = col + 1; c < n; ++c)
                a[r][c] = (a[r][c] * a[col][col] - a[r][col] * a[col][c]) / prev;
            a[r][col] = 0;
        }
        prev = a[col][col];
    }
    return n ? sign * a[n - 1][n - 1] : 1;
}

inline bool is_unimodular(const IMatrix& a) {
    long long d = integer_det(a);
    return d == 1 || d == -1;
}

namespace detail {

// Solve X * M = N over the rationals for square unimodular M (columns of the
// unknown combination); here we need E with B * E_row-form... we solve
// B * x = y columnwise via Gaussian elimination in exact rationals.
inline std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> A,
                                            std::vector<Rational> y) {
    const int n = int(A.size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!(A[r][col] == Rational(0))) { piv = r; break; }
        if (piv < 0) throw std::logic_error("singular matrix in rational solve");
        std::swap(A[piv], A[col]);
        std::swap(y[piv], y[col]);
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Rational f = A[r][col] / A[col][col];
            for (int c = col; c < n; ++c) A[r][c] = A[r][c] - f * A[col][c];
            y[r] = y[r] - f * y[col];
        }
    }
    std::vector<Rational> x(n);
    for (int i = 0; i < n; ++i) x[i] = y[i] / A[i][i];
    return x;
}

} // namespace detail

// Torus action induced by a graph automorphism over the base datum (t, wf).
// Determined by matching holonomies: if the base non-tree edges carry
// holonomies phase q_i, exponents B_i and their images under the lift carry
// phase p_i, exponents R_i, the action solves B * psi(t) = R * t + (p - q).
inline TorusAction induced_action(const Graph& g, const SpanningTree& t, const WeightFunction& wf,
                                  const GraphAutomorphism& phi) {
    const int n = g.rank;
    WeightFunction treed = reexpress_through_tree(g, t, wf);
    WeightFunction wt2 = regauged_weights(g, t, push_forward(g, t, phi), wf);
    IMatrix B, R;
    std::vector<Rational> q, p;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (t.has_edge(e)) continue;
        const UnitaryMonomial& h = treed.wt[e];
        B.push_back(h.exponent);
        q.push_back(h.phase);
        UnitaryMonomial m = wt2.weight(phi.apply(OrientedEdge{e, false}));
        R.push_back(m.exponent);
        p.push_back(m.phase);
    }
    if (!is_unimodular(B))
        throw ValidationError("base holonomies do not form a torus generator basis");
    std::vector<std::vector<Rational>> Bq(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Bq[i][j] = Rational(B[i][j]);
    TorusAction act;
    act.E.assign(n, std::vector<long long>(n, 0));
    act.offset.assign(n, Rational(0));
    // columns of E solve B * E_col(j) = R_col(j)
    for (int j = 0; j < n; ++j) {
        std::vector<Rational> rhs(n);
        for (int i = 0; i < n; ++i) rhs[i] = Rational(R[i][j]);
        auto col = detail::solve_rational(Bq, rhs);
        for (int i = 0; i < n; ++i) {
            if (!col[i].is_integer()) throw std::logic_error("induced action is not integral");
            act.E[i][j] = col[i].num();
        }
    }
    std::vector<Rational> diff(n);
    for (int i = 0; i < n; ++i) diff[i] = p[i] - q[i];
    auto off = detail::solve_rational(Bq, diff);
    for (int i = 0; i < n; ++i) act.offset[i] = off[i].mod1();
    if (!is_unimodular(act.E)) throw std::logic_error("induced action matrix is not unimodular");
    return act;
}

// Fixed points of the action on the torus: (E - I) t == -offset (mod 1).
inline AffineSubtorus fixed_set(const TorusAction& a) {
    const int n = a.n();
    IMatrix M = a.E;
    for (int i = 0; i < n; ++i) M[i][i] -= 1;
    std::vector<Rational> b(n);
    for (int i = 0; i < n; ++i) b[i] = Rational(0) - a.offset[i];
    return solve_torus_congruence(M, b);
}

// Common fixed set of several actions (stacked congruences).
inline AffineSubtorus common_fixed_set(const std::vector<TorusAction>& acts, int n) {
    IMatrix M;
    std::vector<Rational> b;
    for (const auto& a : acts) {
        for (int i = 0; i < n; ++i) {
            std::vector<long long> row = a.E[i];
            row[i] -= 1;
            M.push_back(row);
            b.push_back(Rational(0) - a.offset[i]);
        }
    }
    if (M.empty()) { // whole torus
        AffineSubtorus s;
        s.n = n;
        s.points.push_back(std::vector<Rational>(n, Rational(0)));
        for (int j = 0; j < n; ++j) {
            std::vector<long long> dir(n, 0);
            dir[j] = 1;
            s.directions.push_back(dir);
        }
        return s;
    }
    return solve_torus_congruence(M, b);
}

// Indices (into `autos`) of the automorphisms whose induced action fixes the
// given rational point.
inline std::vector<int> stabilizer_indices(const std::vector<TorusAction>& actions,
                                           const std::vector<Rational>& point) {
    std::vector<int> out;
    for (int i = 0; i < int(actions.size()); ++i)
        if (actions[i].fixes(point)) out.push_back(i);
    return out;
}

} // namespace harper

#endif
