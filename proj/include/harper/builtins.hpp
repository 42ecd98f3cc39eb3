#ifndef HARPER_BUILTINS_HPP
#define HARPER_BUILTINS_HPP

#include <string>

#include "harper/weights.hpp"

namespace harper {

// A graph together with its gauging datum (spanning tree, root, vertex
// order) and edge weights.
struct Model {
    Graph graph;
    SpanningTree tree;
    WeightFunction weights;
};

// Primitive cubic network: one vertex, three loops carrying the three torus
// generators.
inline Model builtin_P() {
    Model m;
    m.graph.name = "P";
    m.graph.rank = 3;
    m.graph.vertex_names = {"1"};
    m.graph.edges = {{"a", 0, 0}, {"b", 0, 0}, {"c", 0, 0}};
    m.tree.edges = {};
    m.tree.root = 0;
    m.tree.order = {0};
    m.weights.rank = 3;
    m.weights.wt = {UnitaryMonomial::generator(3, 0), UnitaryMonomial::generator(3, 1),
                    UnitaryMonomial::generator(3, 2)};
    return m;
}

// Diamond network: two vertices joined by four parallel edges with weights
// 1, A, B, C; the trivial edge is the spanning tree.
inline Model builtin_D() {
    Model m;
    m.graph.name = "D";
    m.graph.rank = 3;
    m.graph.vertex_names = {"1", "2"};
    m.graph.edges = {{"e1", 0, 1}, {"e2", 0, 1}, {"e3", 0, 1}, {"e4", 0, 1}};
    m.tree.edges = {0};
    m.tree.root = 0;
    m.tree.order = {0, 1};
    m.weights.rank = 3;
    m.weights.wt = {UnitaryMonomial::one(3), UnitaryMonomial::generator(3, 0),
                    UnitaryMonomial::generator(3, 1), UnitaryMonomial::generator(3, 2)};
    return m;
}

// Honeycomb network: two vertices joined by three parallel edges with
// weights 1, A, B over the 2-torus.
inline Model builtin_honeycomb() {
    Model m;
    m.graph.name = "honeycomb";
    m.graph.rank = 2;
    m.graph.vertex_names = {"1", "2"};
    m.graph.edges = {{"e1", 0, 1}, {"e2", 0, 1}, {"e3", 0, 1}};
    m.tree.edges = {0};
    m.tree.root = 0;
    m.tree.order = {0, 1};
    m.weights.rank = 2;
    m.weights.wt = {UnitaryMonomial::one(2), UnitaryMonomial::generator(2, 0),
                    UnitaryMonomial::generator(2, 1)};
    return m;
}

// Gyroid network: complete graph K4, star spanning tree rooted at vertex 1,
// the three off-tree edges carrying the generators A, B, C.
inline Model builtin_gyroid() {
    Model m;
    m.graph.name = "gyroid";
    m.graph.rank = 3;
    m.graph.vertex_names = {"1", "2", "3", "4"};
    m.graph.edges = {{"t2", 0, 1}, {"t3", 0, 2}, {"t4", 0, 3},
                     {"eA", 1, 2}, {"eB", 3, 1}, {"eC", 2, 3}};
    m.tree.edges = {0, 1, 2};
    m.tree.root = 0;
    m.tree.order = {0, 1, 2, 3};
    m.weights.rank = 3;
    m.weights.wt = {UnitaryMonomial::one(3),          UnitaryMonomial::one(3),
                    UnitaryMonomial::one(3),          UnitaryMonomial::generator(3, 0),
                    UnitaryMonomial::generator(3, 1), UnitaryMonomial::generator(3, 2)};
    return m;
}

inline Model builtin_model(const std::string& name) {
    if (name == "P" || name == "p") return builtin_P();
    if (name == "D" || name == "d") return builtin_D();
    if (name == "G" || name == "g" || name == "gyroid") return builtin_gyroid();
    if (name == "honeycomb" || name == "hex") return builtin_honeycomb();
    throw ValidationError("unknown builtin model '" + name + "'");
}

} // namespace harper

#endif
