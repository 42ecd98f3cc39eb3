#ifndef HARPER_ANALYSIS_HPP
#define HARPER_ANALYSIS_HPP

#include <set>
#include <vector>

#include "harper/bandscan.hpp"
#include "harper/builtins.hpp"
#include "harper/repdecomp.hpp"

namespace harper {

// Everything the symmetry machinery can say about one rational point.
struct PointAnalysis {
    std::vector<Rational> point;
    int stab_order = 0;      // automorphisms whose torus action fixes the point
    int cocycle_order = 0;   // order of the subgroup generated by cocycle values
    int minimal_m = 1;       // minimal central extension after rescaling
    std::vector<int> extension_orders; // element orders of the extension group
    Superselection super;    // character table, multiplicities, block levels
    std::vector<double> levels;
    std::vector<int> degeneracy; // multiplicity pattern of `levels`
};

struct ModelSymmetry {
    std::vector<GraphAutomorphism> autos;
    std::vector<TorusAction> actions;
};

inline ModelSymmetry model_symmetry(const Model& m, bool loop_reversals = false) {
    ModelSymmetry s;
    s.autos = enumerate_automorphisms(m.graph, loop_reversals);
    for (const auto& a : s.autos) s.actions.push_back(induced_action(m.graph, m.tree, m.weights, a));
    return s;
}

inline PointAnalysis analyze_point(const Model& m, const ModelSymmetry& sym,
                                   const std::vector<Rational>& point, double tol = 1e-9,
                                   unsigned seed = 12345) {
    PointAnalysis out;
    out.point = point;
    for (auto& x : out.point) x = x.mod1();
    ProjectiveRep rep = projective_rep_at(m.graph, m.tree, m.weights, sym.autos, sym.actions,
                                          out.point);
    out.stab_order = rep.group_order;
    out.cocycle_order = rep.cocycle_order;
    ExtensionResult ext = minimal_extension(rep);
    out.minimal_m = ext.m;
    for (const auto& x : ext.group) out.extension_orders.push_back(x.order());
    AMatrix H = build_hamiltonian(m.graph, m.tree, m.weights);
    CMatrix He = H.eval(TorusPoint::turns(out.point));
    EigenSystem es = hermitian_eigensystem(He);
    out.levels = es.values;
    out.degeneracy = degeneracy_profile(es.values, tol);
    out.super = superselect(He, ext.group, seed);
    return out;
}

namespace detail {
struct PointLess {
    bool operator()(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] < b[i]) return true;
            if (b[i] < a[i]) return false;
        }
        return false;
    }
};
} // namespace detail

// Candidate high-symmetry points: the discrete data of the fixed sets of
// every single action and of every pairwise common fixed set.
inline std::vector<std::vector<Rational>> special_points(const ModelSymmetry& sym, int n) {
    std::set<std::vector<Rational>, detail::PointLess> pts;
    auto add = [&](const AffineSubtorus& s) {
        for (const auto& p : s.points) pts.insert(p);
    };
    for (size_t i = 0; i < sym.actions.size(); ++i) {
        add(fixed_set(sym.actions[i]));
        for (size_t j = i + 1; j < sym.actions.size(); ++j)
            add(common_fixed_set({sym.actions[i], sym.actions[j]}, n));
    }
    return {pts.begin(), pts.end()};
}

// Census row: one point with an enlarged stabilizer.
struct StratumRow {
    std::vector<Rational> point;
    int stab_order = 0;
};

// All special points ordered by decreasing symmetry.
inline std::vector<StratumRow> strata_census(const ModelSymmetry& sym, int n) {
    std::vector<StratumRow> rows;
    for (const auto& p : special_points(sym, n)) {
        StratumRow r;
        r.point = p;
        r.stab_order = int(stabilizer_indices(sym.actions, p).size());
        rows.push_back(r);
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const StratumRow& a, const StratumRow& b) {
                         return a.stab_order > b.stab_order;
                     });
    return rows;
}

} // namespace harper

#endif
