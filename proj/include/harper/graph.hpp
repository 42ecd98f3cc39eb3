#ifndef HARPER_GRAPH_HPP
#define HARPER_GRAPH_HPP

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "harper/monomial.hpp"

namespace harper {

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Edge {
    std::string id;
    int u = 0, v = 0; // endpoints; u == v for a loop
    bool is_loop() const { return u == v; }
};

// An edge with a chosen direction. !rev means the (u, v) order as stored.
struct OrientedEdge {
    int edge = -1;
    bool rev = false;
    OrientedEdge reversed() const { return {edge, !rev}; }
    friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

// Finite connected multigraph (loops and parallel edges allowed) whose edge
// weights will live on T^rank.
class Graph {
public:
    std::string name;
    int rank = 0;
    std::vector<std::string> vertex_names;
    std::vector<Edge> edges;

    int num_vertices() const { return int(vertex_names.size()); }
    int num_edges() const { return int(edges.size()); }
    int betti1() const { return num_edges() - num_vertices() + 1; }

    int source(const OrientedEdge& e) const { return e.rev ? edges[e.edge].v : edges[e.edge].u; }
    int target(const OrientedEdge& e) const { return e.rev ? edges[e.edge].u : edges[e.edge].v; }

    int vertex_index(const std::string& n) const {
        for (int i = 0; i < num_vertices(); ++i)
            if (vertex_names[i] == n) return i;
        throw ValidationError("unknown vertex '" + n + "'");
    }
    int edge_index(const std::string& id) const {
        for (int i = 0; i < num_edges(); ++i)
            if (edges[i].id == id) return i;
        throw ValidationError("unknown edge '" + id + "'");
    }

    // Checks connectivity, id uniqueness, endpoint validity and b1 == rank.
    void validate() const {
        const int k = num_vertices();
        if (k == 0) throw ValidationError("graph has no vertices");
        std::set<std::string> ids;
        for (auto& e : edges) {
            if (!ids.insert(e.id).second)
                throw ValidationError("duplicate edge id '" + e.id + "'");
            if (e.u < 0 || e.u >= k || e.v < 0 || e.v >= k)
                throw ValidationError("edge '" + e.id + "' has a dangling endpoint");
        }
        std::vector<char> seen(k, 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        int reached = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (auto& e : edges)
                for (int y : {e.u == x ? e.v : -1, e.v == x ? e.u : -1})
                    if (y >= 0 && !seen[y]) {
                        seen[y] = 1;
                        ++reached;
                        q.push(y);
                    }
        }
        if (reached != k) throw ValidationError("graph is disconnected");
        if (betti1() < 0) throw ValidationError("negative first Betti number");
        if (betti1() != rank)
            throw ValidationError("first Betti number b1 = " + std::to_string(betti1()) +
                                  " does not match rank " + std::to_string(rank));
    }
};

// Gauging datum: spanning tree + root + total vertex order ("tau" throughout).
struct SpanningTree {
    std::vector<int> edges; // tree edge indices, |V|-1 of them
    int root = 0;
    std::vector<int> order; // order[i] = vertex at position i; order[0] == root

    int k() const { return int(order.size()); }
    int position(int v) const {
        for (int i = 0; i < k(); ++i)
            if (order[i] == v) return i;
        throw std::logic_error("vertex not in order");
    }
    bool has_edge(int e) const {
        return std::find(edges.begin(), edges.end(), e) != edges.end();
    }
    friend bool operator==(const SpanningTree& a, const SpanningTree& b) {
        auto ea = a.edges, eb = b.edges;
        std::sort(ea.begin(), ea.end());
        std::sort(eb.begin(), eb.end());
        return ea == eb && a.root == b.root && a.order == b.order;
    }
};

inline void validate_tree(const Graph& g, const SpanningTree& t) {
    const int k = g.num_vertices();
    if (int(t.edges.size()) != k - 1)
        throw ValidationError("spanning tree must have |V|-1 edges");
    if (int(t.order.size()) != k)
        throw ValidationError("vertex order must list every vertex once");
    std::vector<int> sorted = t.order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < k; ++i)
        if (sorted[i] != i) throw ValidationError("vertex order is not a permutation");
    if (t.order[0] != t.root) throw ValidationError("root must be first in the order");
    // acyclic + spanning via union-find
    std::vector<int> parent(k);
    for (int i = 0; i < k; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int e : t.edges) {
        if (e < 0 || e >= g.num_edges()) throw ValidationError("tree references unknown edge");
        int a = find(g.edges[e].u), b = find(g.edges[e].v);
        if (a == b) throw ValidationError("tree edges contain a cycle");
        parent[a] = b;
    }
}

// Oriented path in the tree from the root to v (empty for the root itself).
inline std::vector<OrientedEdge> tree_path(const Graph& g, const SpanningTree& t, int v) {
    const int k = g.num_vertices();
    std::vector<int> par_vertex(k, -1);
    std::vector<OrientedEdge> par_edge(k);
    std::vector<char> seen(k, 0);
    seen[t.root] = 1;
    std::queue<int> q;
    q.push(t.root);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int e : t.edges) {
            const Edge& ed = g.edges[e];
            int y = -1;
            bool rev = false;
            if (ed.u == x && !seen[ed.v]) y = ed.v;
            else if (ed.v == x && !seen[ed.u]) { y = ed.u; rev = true; }
            if (y >= 0) {
                seen[y] = 1;
                par_vertex[y] = x;
                par_edge[y] = {e, rev};
                q.push(y);
            }
        }
    }
    if (!seen[v]) throw ValidationError("tree does not span the graph");
    std::vector<OrientedEdge> path;
    for (int x = v; x != t.root; x = par_vertex[x]) path.push_back(par_edge[x]);
    std::reverse(path.begin(), path.end());
    return path;
}

// One free-homotopy generator per non-tree edge: root -> source(e), e,
// target(e) -> root. Tree edges map to the trivial loop.
inline std::map<int, std::vector<OrientedEdge>> loop_basis(const Graph& g, const SpanningTree& t) {
    std::map<int, std::vector<OrientedEdge>> basis;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (t.has_edge(e)) {
            basis[e] = {};
            continue;
        }
        OrientedEdge oe{e, false};
        std::vector<OrientedEdge> loop = tree_path(g, t, g.source(oe));
        loop.push_back(oe);
        auto back = tree_path(g, t, g.target(oe));
        for (auto it = back.rbegin(); it != back.rend(); ++it) loop.push_back(it->reversed());
        basis[e] = loop;
    }
    return basis;
}

// Graph automorphism: compatible vertex and edge bijections. flip[e] records
// whether the stored orientation of the image edge is reversed relative to
// the image of e's stored orientation (always derived from the vertex map for
// non-loops; for loops only when loop reversals are explicitly requested).
struct GraphAutomorphism {
    std::vector<int> vperm;
    std::vector<int> eperm;
    std::vector<char> flip;

    int apply(int v) const { return vperm[v]; }
    OrientedEdge apply(const OrientedEdge& oe) const {
        OrientedEdge img{eperm[oe.edge], oe.rev};
        if (!flip.empty() && flip[oe.edge]) img.rev = !img.rev;
        return img;
    }
    bool is_identity() const {
        for (int i = 0; i < int(vperm.size()); ++i)
            if (vperm[i] != i) return false;
        for (int i = 0; i < int(eperm.size()); ++i)
            if (eperm[i] != i) return false;
        for (char f : flip)
            if (f) return false;
        return true;
    }
    friend bool operator==(const GraphAutomorphism&, const GraphAutomorphism&) = default;
    friend bool operator<(const GraphAutomorphism& a, const GraphAutomorphism& b) {
        if (a.vperm != b.vperm) return a.vperm < b.vperm;
        if (a.eperm != b.eperm) return a.eperm < b.eperm;
        return a.flip < b.flip;
    }
};

// b first, then a (right-to-left function composition on vertices and edges).
inline GraphAutomorphism compose(const GraphAutomorphism& a, const GraphAutomorphism& b) {
    GraphAutomorphism c;
    c.vperm.resize(a.vperm.size());
    c.eperm.resize(a.eperm.size());
    c.flip.assign(a.eperm.size(), 0);
    for (int v = 0; v < int(c.vperm.size()); ++v) c.vperm[v] = a.vperm[b.vperm[v]];
    for (int e = 0; e < int(c.eperm.size()); ++e) {
        c.eperm[e] = a.eperm[b.eperm[e]];
        char f = 0;
        if (!b.flip.empty() && b.flip[e]) f ^= 1;
        if (!a.flip.empty() && a.flip[b.eperm[e]]) f ^= 1;
        c.flip[e] = f;
    }
    return c;
}

inline GraphAutomorphism inverse(const GraphAutomorphism& a) {
    GraphAutomorphism inv;
    inv.vperm.resize(a.vperm.size());
    inv.eperm.resize(a.eperm.size());
    inv.flip.assign(a.eperm.size(), 0);
    for (int v = 0; v < int(a.vperm.size()); ++v) inv.vperm[a.vperm[v]] = v;
    for (int e = 0; e < int(a.eperm.size()); ++e) {
        inv.eperm[a.eperm[e]] = e;
        if (!a.flip.empty() && a.flip[e]) inv.flip[a.eperm[e]] = 1;
    }
    return inv;
}

namespace detail {

inline std::vector<long long> vertex_signature(const Graph& g, int v) {
    // degree, loop count, multiset of parallel-class sizes
    std::map<int, int> nbr;
    long long loops = 0, deg = 0;
    for (auto& e : g.edges) {
        if (e.is_loop()) {
            if (e.u == v) { ++loops; deg += 2; }
            continue;
        }
        if (e.u == v) { ++nbr[e.v]; ++deg; }
        else if (e.v == v) { ++nbr[e.u]; ++deg; }
    }
    std::vector<long long> sig{deg, loops};
    std::vector<long long> classes;
    for (auto& [w, c] : nbr) classes.push_back(c);
    std::sort(classes.begin(), classes.end());
    sig.insert(sig.end(), classes.begin(), classes.end());
    return sig;
}

inline void extend_edge_maps(const Graph& g, const std::vector<int>& vperm,
                             bool loop_reversals, std::vector<GraphAutomorphism>& out) {
    // Partition edges into parallel classes keyed by their endpoint pair and
    // enumerate every class-respecting bijection.
    std::map<std::pair<int, int>, std::vector<int>> classes;
    for (int e = 0; e < g.num_edges(); ++e) {
        auto key = std::minmax(g.edges[e].u, g.edges[e].v);
        classes[{key.first, key.second}].push_back(e);
    }
    // Each source class must map onto the image class of the same size.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs;
    for (auto& [key, members] : classes) {
        auto ik = std::minmax(vperm[key.first], vperm[key.second]);
        auto it = classes.find({ik.first, ik.second});
        if (it == classes.end() || it->second.size() != members.size()) return;
        pairs.push_back({members, it->second});
    }
    std::vector<int> eperm(g.num_edges(), -1);
    // Enumerate per-class permutations via odometer over factorials.
    std::vector<std::vector<int>> target_perms(pairs.size());
    for (auto& [src, dst] : pairs) (void)src, (void)dst;
    std::vector<std::vector<int>> idx(pairs.size());
    for (size_t c = 0; c < pairs.size(); ++c) {
        idx[c].resize(pairs[c].second.size());
        for (size_t i = 0; i < idx[c].size(); ++i) idx[c][i] = int(i);
    }
    auto emit = [&]() {
        GraphAutomorphism a;
        a.vperm = vperm;
        a.eperm.assign(g.num_edges(), -1);
        for (size_t c = 0; c < pairs.size(); ++c)
            for (size_t i = 0; i < pairs[c].first.size(); ++i)
                a.eperm[pairs[c].first[i]] = pairs[c].second[idx[c][i]];
        a.flip.assign(g.num_edges(), 0);
        for (int e = 0; e < g.num_edges(); ++e)
            if (!g.edges[e].is_loop())
                a.flip[e] = (g.edges[a.eperm[e]].u != vperm[g.edges[e].u]) ? 1 : 0;
        if (!loop_reversals) {
            out.push_back(a);
            return;
        }
        std::vector<int> loops;
        for (int e = 0; e < g.num_edges(); ++e)
            if (g.edges[e].is_loop()) loops.push_back(e);
        for (unsigned long long mask = 0; mask < (1ull << loops.size()); ++mask) {
            GraphAutomorphism b = a;
            for (size_t i = 0; i < loops.size(); ++i)
                if (mask & (1ull << i)) b.flip[loops[i]] = 1;
            out.push_back(b);
        }
    };
    // Odometer over std::next_permutation of each class index vector.
    size_t nclasses = pairs.size();
    std::vector<std::vector<int>> state = idx;
    auto rec = [&](auto&& self, size_t c) -> void {
        if (c == nclasses) {
            std::vector<std::vector<int>> saved = idx;
            idx = state;
            emit();
            idx = saved;
            return;
        }
        std::vector<int> perm = idx[c];
        std::sort(perm.begin(), perm.end());
        do {
            state[c] = perm;
            self(self, c + 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    rec(rec, 0);
}

} // namespace detail

// Full automorphism group, canonically ordered (lexicographic on the vertex
// image tuple, then the edge image tuple). Backtracking over vertex images
// with degree/multiplicity pruning, then all compatible edge bijections.
inline std::vector<GraphAutomorphism> enumerate_automorphisms(const Graph& g,
                                                              bool loop_reversals = false) {
    const int k = g.num_vertices();
    std::vector<std::vector<long long>> sig(k);
    for (int v = 0; v < k; ++v) sig[v] = detail::vertex_signature(g, v);
    // adjacency multiplicity between vertex pairs (off-loop)
    auto mult = [&](int a, int b) {
        int m = 0;
        for (auto& e : g.edges)
            if (!e.is_loop() && ((e.u == a && e.v == b) || (e.u == b && e.v == a))) ++m;
        return m;
    };
    std::vector<GraphAutomorphism> result;
    std::vector<int> vperm(k, -1);
    std::vector<char> used(k, 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == k) {
            detail::extend_edge_maps(g, vperm, loop_reversals, result);
            return;
        }
        for (int w = 0; w < k; ++w) {
            if (used[w] || sig[v] != sig[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (mult(u, v) != mult(vperm[u], w)) ok = false;
            if (!ok) continue;
            vperm[v] = w;
            used[w] = 1;
            self(self, v + 1);
            used[w] = 0;
            vperm[v] = -1;
        }
    };
    rec(rec, 0);
    std::sort(result.begin(), result.end());
    return result;
}

// Image gauging datum under an automorphism (tree edges, root and order all
// pushed forward).
inline SpanningTree push_forward(const Graph& g, const SpanningTree& t,
                                 const GraphAutomorphism& phi) {
    SpanningTree s;
    for (int e : t.edges) s.edges.push_back(phi.eperm[e]);
    s.root = phi.apply(t.root);
    for (int v : t.order) s.order.push_back(phi.apply(v));
    validate_tree(g, s);
    return s;
}

} // namespace harper

#endif
