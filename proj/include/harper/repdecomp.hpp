#ifndef HARPER_REPDECOMP_HPP
#define HARPER_REPDECOMP_HPP

#include <vector>

#include "harper/chartable.hpp"
#include "harper/symlift.hpp"

namespace harper {

// Greedy small generating set for an abstract group given as a list with a
// composition rule; returns indices into the list.
inline std::vector<int> generating_indices(const std::vector<GraphAutomorphism>& elems) {
    auto closure_size = [&](const std::vector<int>& gens) {
        std::set<GraphAutomorphism> seen;
        std::vector<GraphAutomorphism> frontier;
        GraphAutomorphism id = elems[0];
        for (int v = 0; v < int(id.vperm.size()); ++v) id.vperm[v] = v;
        for (int e = 0; e < int(id.eperm.size()); ++e) id.eperm[e] = e;
        id.flip.assign(id.eperm.size(), 0);
        seen.insert(id);
        frontier.push_back(id);
        while (!frontier.empty()) {
            std::vector<GraphAutomorphism> next;
            for (auto& x : frontier)
                for (int gi : gens) {
                    GraphAutomorphism y = compose(x, elems[gi]);
                    if (seen.insert(y).second) next.push_back(y);
                }
            frontier = std::move(next);
        }
        return seen.size();
    };
    std::vector<int> gens;
    size_t covered = 1;
    for (int i = 0; i < int(elems.size()) && covered < elems.size(); ++i) {
        if (elems[i].is_identity()) continue;
        auto trial = gens;
        trial.push_back(i);
        size_t sz = closure_size(trial);
        if (sz > covered) {
            gens = trial;
            covered = sz;
        }
    }
    return gens;
}

// A projective representation of a point stabilizer, evaluated exactly. The
// lift map need not be faithful, so all bookkeeping stays labeled by the
// abstract stabilizer element.
struct ProjectiveRep {
    std::vector<Rational> point;
    std::vector<int> stab;             // indices into the automorphism list
    std::vector<GraphAutomorphism> elems; // the stabilizer itself
    std::vector<PhasePermMatrix> lift; // lift[i] evaluates elems[i]
    std::vector<std::vector<int>> mult; // mult[i][j]: index of elems[i]*elems[j]
    std::vector<Rational> cocycle_turns; // c(h, g) for all pairs, as turns
    int group_order = 0;
    int cocycle_order = 0; // order of the subgroup generated by the c(h, g)

    int index_of(const GraphAutomorphism& a) const {
        for (int i = 0; i < int(elems.size()); ++i)
            if (elems[i] == a) return i;
        throw std::logic_error("element not in stabilizer");
    }
};

inline ProjectiveRep projective_rep_at(const Graph& g, const SpanningTree& t,
                                       const WeightFunction& wf,
                                       const std::vector<GraphAutomorphism>& autos,
                                       const std::vector<TorusAction>& actions,
                                       const std::vector<Rational>& point) {
    ProjectiveRep rep;
    rep.point = point;
    rep.stab = stabilizer_indices(actions, point);
    for (int i : rep.stab) {
        rep.elems.push_back(autos[i]);
        rep.lift.push_back(eval_exact(symmetry_matrix(g, t, wf, autos[i]), point));
    }
    rep.group_order = int(rep.stab.size());
    const int n = rep.group_order;
    rep.mult.assign(n, std::vector<int>(n));
    long long order_lcm = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // lifts compose against the automorphism order (the induced torus
            // actions satisfy psi_h . psi_g = psi_{g . h}), so the product of
            // lifts i, j covers elems[j] . elems[i]
            rep.mult[i][j] = rep.index_of(compose(rep.elems[j], rep.elems[i]));
            // c(h, g) with M_h M_g = c M_{hg}; scalar because all three are
            // lifts of the same projective representative
            PhasePermMatrix c =
                rep.lift[i] * rep.lift[j] * rep.lift[rep.mult[i][j]].inverse();
            if (!c.is_scalar()) throw std::logic_error("cocycle is not scalar");
            Rational turn = c.phases[0].mod1();
            rep.cocycle_turns.push_back(turn);
            order_lcm = std::lcm(order_lcm, root_of_unity_order(turn));
        }
    rep.cocycle_order = int(order_lcm);
    return rep;
}

// Result of the scalar-rescaling search: the minimal m such that rescaled
// lifts generate an m-fold central extension of the stabilizer, together with
// that extension group. m == 1 means the projective representation
// trivializes to a linear one.
struct ExtensionResult {
    int m = 1;
    std::vector<PhasePermMatrix> group; // the extension group (order m * |stab|)
    bool trivializable() const { return m == 1; }
};

namespace detail {

// Closure of the labeled pairs (g_i, lambda_i * lift(g_i)) inside
// G x U(k); |closure| = m * |<g_i>| where mu_m is the scalar kernel.
struct LabeledClosure {
    int m = 0;                          // scalar kernel order (0 if gens empty)
    std::vector<PhasePermMatrix> mats;  // matrices occurring in the closure
    double trace_sum = 0;               // sum of Re tr over the closure
};

inline LabeledClosure labeled_closure(const ProjectiveRep& rep, const std::vector<int>& gens,
                                      const std::vector<Rational>& lambda) {
    using Elt = std::pair<int, PhasePermMatrix>;
    auto less = [](const Elt& a, const Elt& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    };
    int id = -1;
    for (int i = 0; i < rep.group_order; ++i)
        if (rep.elems[i].is_identity()) id = i;
    std::set<Elt, decltype(less)> seen(less);
    std::vector<Elt> frontier{{id, PhasePermMatrix::identity(rep.lift[0].n())}};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<Elt> next;
        for (const auto& x : frontier)
            for (size_t i = 0; i < gens.size(); ++i) {
                Elt y{rep.mult[x.first][gens[i]],
                      x.second * rep.lift[gens[i]].scaled(lambda[i])};
                if (seen.insert(y).second) next.push_back(y);
            }
        frontier = std::move(next);
    }
    LabeledClosure out;
    out.m = 0;
    std::set<PhasePermMatrix> mats;
    for (const auto& [g, M] : seen) {
        if (g == id) ++out.m;
        mats.insert(M);
        out.trace_sum += M.trace().real();
    }
    out.mats.assign(mats.begin(), mats.end());
    return out;
}

} // namespace detail

// Scalar-rescaling search over the stabilizer generators. Candidate scalars
// run over mu_L with L = cocycle_order * exponent(stabilizer), which is
// where any trivializing (or extension-minimizing) rescaling can be chosen.
// Ties at the minimal m are broken toward the largest closure trace sum, so
// a trivializable representation comes back containing the trivial irrep.
inline ExtensionResult minimal_extension(const ProjectiveRep& rep) {
    ExtensionResult best;
    std::vector<int> gens = generating_indices(rep.elems);
    if (rep.cocycle_order == 1) {
        // already a homomorphism
        best.m = 1;
        best.group = group_closure(rep.lift);
        return best;
    }
    // a rescaling lambda with kernel mu_k satisfies lambda(g)^{ord(g)} in
    // mu_{k * cocycle_order}, so per-generator scalar pools of order
    // ord(g) * cocycle_order * k_max suffice; k_max = 2 covers the index-two
    // kernels arising from sign-valued obstructions after the first pass
    std::vector<long long> L(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        long long o = 1;
        GraphAutomorphism x = rep.elems[gens[i]];
        while (!x.is_identity()) { x = compose(x, rep.elems[gens[i]]); ++o; }
        L[i] = o * rep.cocycle_order;
    }
    best.m = 1 << 30;
    double best_tr = -1e300;
    for (int kmax : {1, 2}) {
        std::vector<long long> pick(gens.size(), 0);
        for (bool done = gens.empty(); !done;) {
            std::vector<Rational> lambda;
            for (size_t i = 0; i < gens.size(); ++i)
                lambda.push_back(Rational(pick[i], kmax * L[i]));
            auto cl = detail::labeled_closure(rep, gens, lambda);
            if (cl.m < best.m || (cl.m == best.m && cl.trace_sum > best_tr + 1e-9)) {
                best.m = cl.m;
                best_tr = cl.trace_sum;
                best.group = cl.mats; // image of a group, hence already closed
            }
            done = true;
            for (int i = int(pick.size()) - 1; i >= 0; --i) {
                if (++pick[i] < kmax * L[i]) { done = false; break; }
                pick[i] = 0;
            }
        }
        if (best.m == 1) break; // cannot improve on a linearization
    }
    return best;
}

// One isotypic block of the Hamiltonian at a symmetric point.
struct IsotypicBlock {
    int irrep = 0;          // row in the character table
    int degree = 0;         // irrep dimension
    int multiplicity = 0;   // multiplicity in the natural representation
    std::vector<double> levels; // spectrum of the compressed block (size = multiplicity)
};

struct Superselection {
    CharacterTable table;
    std::vector<int> natural_mult;
    std::vector<IsotypicBlock> blocks;
    double commutant_residual = 0; // max over group of |[U, H]|
};

// Block-diagonalize H by the isotypic projectors of the given symmetry group.
// Each irrep of degree d and multiplicity c contributes its c block levels,
// every one of them d-fold degenerate in the full spectrum.
inline Superselection superselect(const CMatrix& H, const std::vector<PhasePermMatrix>& grp,
                                  unsigned seed = 12345) {
    Superselection out;
    out.table = character_table(grp, seed);
    out.natural_mult = decompose_natural(out.table, grp);
    for (const auto& g : grp) {
        CMatrix U = g.to_cmatrix();
        out.commutant_residual = std::max(out.commutant_residual, (U * H - H * U).max_abs_diff(
                                                                      CMatrix(H.rows, H.cols)));
    }
    const int r = int(out.table.classes.size());
    for (int i = 0; i < r; ++i) {
        if (out.natural_mult[i] == 0) continue;
        IsotypicBlock blk;
        blk.irrep = i;
        blk.degree = out.table.degrees[i];
        blk.multiplicity = out.natural_mult[i];
        CMatrix P = isotypic_projector(out.table, grp, i);
        // orthonormal basis of range(P): eigenvectors of the Hermitian
        // projector with eigenvalue 1
        EigenSystem es = hermitian_eigensystem(P);
        std::vector<int> cols;
        for (int j = 0; j < int(es.values.size()); ++j)
            if (es.values[j] > 0.5) cols.push_back(j);
        CMatrix B(H.rows, int(cols.size()));
        for (int j = 0; j < int(cols.size()); ++j)
            for (int row = 0; row < H.rows; ++row) B(row, j) = es.vectors(row, cols[j]);
        CMatrix block = B.adjoint() * H * B;
        EigenSystem bs = hermitian_eigensystem(block);
        // the block carries degree copies of each level; report distinct ones
        std::vector<double> lv = bs.values;
        std::vector<double> dedup;
        for (size_t j = 0; j < lv.size(); j += blk.degree) dedup.push_back(lv[j]);
        blk.levels = dedup;
        out.blocks.push_back(blk);
    }
    return out;
}

} // namespace harper

#endif
