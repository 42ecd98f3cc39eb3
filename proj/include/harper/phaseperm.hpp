#ifndef HARPER_PHASEPERM_HPP
#define HARPER_PHASEPERM_HPP

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "harper/linalg.hpp"
#include "harper/regauge.hpp"

namespace harper {

// Exact unitary of the form M e_j = e^{2 pi i phase_j} e_{perm_j}:
// a permutation matrix with rational-turn phases. Closed under products and
// inverses, so finite matrix groups built from them can be handled exactly.
class PhasePermMatrix {
public:
    std::vector<int> perm;        // column j hits row perm[j]
    std::vector<Rational> phases; // turn of column j, reduced mod 1

    PhasePermMatrix() = default;
    PhasePermMatrix(std::vector<int> p, std::vector<Rational> ph)
        : perm(std::move(p)), phases(std::move(ph)) {
        for (auto& x : phases) x = x.mod1();
    }

    int n() const { return int(perm.size()); }

    static PhasePermMatrix identity(int n) {
        PhasePermMatrix m;
        m.perm.resize(n);
        for (int i = 0; i < n; ++i) m.perm[i] = i;
        m.phases.assign(n, Rational(0));
        return m;
    }
    static PhasePermMatrix scalar(int n, const Rational& turn) {
        PhasePermMatrix m = identity(n);
        for (auto& p : m.phases) p = turn.mod1();
        return m;
    }

    bool is_scalar() const {
        for (int j = 0; j < n(); ++j)
            if (perm[j] != j || !(phases[j] == phases[0])) return false;
        return true;
    }
    bool is_identity() const { return is_scalar() && phases[0].is_zero(); }

    friend PhasePermMatrix operator*(const PhasePermMatrix& a, const PhasePermMatrix& b) {
        PhasePermMatrix m;
        const int k = a.n();
        m.perm.resize(k);
        m.phases.resize(k);
        for (int j = 0; j < k; ++j) {
            m.perm[j] = a.perm[b.perm[j]];
            m.phases[j] = (b.phases[j] + a.phases[b.perm[j]]).mod1();
        }
        return m;
    }
    PhasePermMatrix inverse() const {
        PhasePermMatrix m;
        m.perm.resize(n());
        m.phases.resize(n());
        for (int j = 0; j < n(); ++j) {
            m.perm[perm[j]] = j;
            m.phases[perm[j]] = (-phases[j]).mod1();
        }
        return m;
    }
    PhasePermMatrix scaled(const Rational& turn) const {
        PhasePermMatrix m = *this;
        for (auto& p : m.phases) p = (p + turn).mod1();
        return m;
    }

    friend bool operator==(const PhasePermMatrix& a, const PhasePermMatrix& b) {
        if (a.perm != b.perm) return false;
        for (int j = 0; j < a.n(); ++j)
            if (!(a.phases[j] == b.phases[j])) return false;
        return true;
    }
    friend bool operator<(const PhasePermMatrix& a, const PhasePermMatrix& b) {
        if (a.perm != b.perm) return a.perm < b.perm;
        for (int j = 0; j < a.n(); ++j)
            if (!(a.phases[j] == b.phases[j])) return a.phases[j] < b.phases[j];
        return false;
    }

    Complex trace() const {
        Complex t = 0;
        for (int j = 0; j < n(); ++j)
            if (perm[j] == j) t += unit_phase(phases[j]);
        return t;
    }

    CMatrix to_cmatrix() const {
        CMatrix m(n(), n());
        for (int j = 0; j < n(); ++j) m(perm[j], j) = unit_phase(phases[j]);
        return m;
    }

    int order() const {
        PhasePermMatrix x = *this;
        PhasePermMatrix e = identity(n());
        int k = 1;
        while (!(x == e)) {
            x = x * *this;
            ++k;
            if (k > 100000) throw std::logic_error("element order overflow");
        }
        return k;
    }
};

// Exact evaluation of a monomial matrix at a rational torus point.
inline PhasePermMatrix eval_exact(const MonomialMatrix& m, const std::vector<Rational>& t) {
    PhasePermMatrix out;
    out.perm.assign(m.n, -1);
    out.phases.assign(m.n, Rational(0));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (m.at(i, j)) {
                if (out.perm[j] != -1)
                    throw std::logic_error("matrix is not a monomial permutation matrix");
                out.perm[j] = i;
                out.phases[j] = mono_eval_turns(*m.at(i, j), t);
            }
    for (int j = 0; j < m.n; ++j)
        if (out.perm[j] < 0) throw std::logic_error("matrix column is zero");
    return out;
}

// Group generated by the given matrices (breadth-first closure).
inline std::vector<PhasePermMatrix> group_closure(const std::vector<PhasePermMatrix>& gens) {
    if (gens.empty()) return {};
    std::set<PhasePermMatrix> seen;
    std::vector<PhasePermMatrix> frontier{PhasePermMatrix::identity(gens[0].n())};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<PhasePermMatrix> next;
        for (const auto& x : frontier)
            for (const auto& g : gens) {
                PhasePermMatrix y = x * g;
                if (seen.insert(y).second) next.push_back(y);
                if (seen.size() > 200000) throw std::logic_error("group closure too large");
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

// Scalar matrices contained in the group (as turns).
inline std::vector<Rational> scalar_subgroup(const std::vector<PhasePermMatrix>& grp) {
    std::vector<Rational> out;
    for (const auto& g : grp)
        if (g.is_scalar()) out.push_back(g.phases[0]);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<int> element_order_histogram(const std::vector<PhasePermMatrix>& grp) {
    std::map<int, int> hist;
    for (auto& g : grp) ++hist[g.order()];
    std::vector<int> flat;
    for (auto& [o, c] : hist) { flat.push_back(o); flat.push_back(c); }
    return flat;
}

inline int count_involutions(const std::vector<PhasePermMatrix>& grp) {
    int c = 0;
    for (auto& g : grp)
        if (!g.is_identity() && (g * g).is_identity()) ++c;
    return c;
}

// Conjugacy classes: vector of index lists into grp.
inline std::vector<std::vector<int>> conjugacy_classes(const std::vector<PhasePermMatrix>& grp) {
    std::map<PhasePermMatrix, int> index;
    for (int i = 0; i < int(grp.size()); ++i) index[grp[i]] = i;
    std::vector<char> done(grp.size(), 0);
    std::vector<std::vector<int>> classes;
    for (int i = 0; i < int(grp.size()); ++i) {
        if (done[i]) continue;
        std::set<int> cls;
        for (const auto& h : grp) cls.insert(index.at(h * grp[i] * h.inverse()));
        std::vector<int> v(cls.begin(), cls.end());
        for (int j : v) done[j] = 1;
        classes.push_back(v);
    }
    return classes;
}

// Small generating set found greedily (for search spaces over generators).
inline std::vector<PhasePermMatrix> small_generating_set(const std::vector<PhasePermMatrix>& grp) {
    std::vector<PhasePermMatrix> gens;
    size_t covered = 1;
    // deterministic order: prefer high element order first
    std::vector<int> idx(grp.size());
    for (size_t i = 0; i < grp.size(); ++i) idx[i] = int(i);
    std::vector<int> ord(grp.size());
    for (size_t i = 0; i < grp.size(); ++i) ord[i] = grp[i].order();
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (ord[a] != ord[b]) return ord[a] > ord[b];
        return grp[a] < grp[b];
    });
    for (int i : idx) {
        if (covered == grp.size()) break;
        if (grp[i].is_identity()) continue;
        auto trial = gens;
        trial.push_back(grp[i]);
        size_t sz = group_closure(trial).size();
        if (sz > covered) {
            gens = trial;
            covered = sz;
        }
    }
    return gens;
}

} // namespace harper

#endif
