#ifndef HARPER_IO_HPP
#define HARPER_IO_HPP

#include <sstream>
#include <string>

#include <json.hpp>

#include "harper/builtins.hpp"

namespace harper {

using nlohmann::json;

inline json weight_to_json(const UnitaryMonomial& w) {
    json j;
    j["phase"] = {w.phase.mod1().num(), w.phase.mod1().den()};
    j["exp"] = w.exponent;
    return j;
}

inline UnitaryMonomial weight_from_json(const json& j, int rank) {
    UnitaryMonomial w = UnitaryMonomial::one(rank);
    if (j.contains("phase")) {
        auto p = j.at("phase");
        w.phase = Rational(p.at(0).get<long long>(), p.at(1).get<long long>()).mod1();
    }
    if (j.contains("exp")) {
        w.exponent = j.at("exp").get<std::vector<long long>>();
        if (int(w.exponent.size()) != rank)
            throw ValidationError("weight exponent length does not match rank");
    }
    return w;
}

inline json model_to_json(const Model& m) {
    json j;
    j["name"] = m.graph.name;
    j["rank"] = m.graph.rank;
    j["vertices"] = m.graph.vertex_names;
    j["edges"] = json::array();
    for (int e = 0; e < m.graph.num_edges(); ++e) {
        json je;
        je["id"] = m.graph.edges[e].id;
        je["from"] = m.graph.vertex_names[m.graph.edges[e].u];
        je["to"] = m.graph.vertex_names[m.graph.edges[e].v];
        je["weight"] = weight_to_json(m.weights.wt[e]);
        j["edges"].push_back(je);
    }
    json jt;
    jt["root"] = m.graph.vertex_names[m.tree.root];
    jt["edges"] = json::array();
    for (int e : m.tree.edges) jt["edges"].push_back(m.graph.edges[e].id);
    jt["order"] = json::array();
    for (int v : m.tree.order) jt["order"].push_back(m.graph.vertex_names[v]);
    j["spanning_tree"] = jt;
    return j;
}

inline Model model_from_json(const json& j) {
    Model m;
    m.graph.name = j.value("name", "");
    m.graph.rank = j.at("rank").get<int>();
    m.graph.vertex_names = j.at("vertices").get<std::vector<std::string>>();
    m.weights.rank = m.graph.rank;
    for (const auto& je : j.at("edges")) {
        Edge e;
        e.id = je.at("id").get<std::string>();
        e.u = m.graph.vertex_index(je.at("from").get<std::string>());
        e.v = m.graph.vertex_index(je.at("to").get<std::string>());
        m.graph.edges.push_back(e);
        m.weights.wt.push_back(je.contains("weight")
                                   ? weight_from_json(je.at("weight"), m.graph.rank)
                                   : UnitaryMonomial::one(m.graph.rank));
    }
    if (j.contains("spanning_tree")) {
        const auto& jt = j.at("spanning_tree");
        m.tree.root = m.graph.vertex_index(jt.at("root").get<std::string>());
        for (const auto& id : jt.at("edges"))
            m.tree.edges.push_back(m.graph.edge_index(id.get<std::string>()));
        for (const auto& vn : jt.at("order"))
            m.tree.order.push_back(m.graph.vertex_index(vn.get<std::string>()));
    } else {
        // default datum: BFS tree from vertex 0, discovery order
        m.tree.root = 0;
        std::vector<char> seen(m.graph.num_vertices(), 0);
        seen[0] = 1;
        m.tree.order = {0};
        std::queue<int> q;
        q.push(0);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int e = 0; e < m.graph.num_edges(); ++e) {
                const Edge& ed = m.graph.edges[e];
                int y = ed.u == x ? ed.v : (ed.v == x ? ed.u : -1);
                if (y >= 0 && !seen[y]) {
                    seen[y] = 1;
                    m.tree.edges.push_back(e);
                    m.tree.order.push_back(y);
                    q.push(y);
                }
            }
        }
    }
    return m;
}

// Point syntax: comma-separated turns, each an integer, fraction "p/q" or
// decimal; a trailing "rad" switches the whole point to radians.
inline TorusPoint parse_point(std::string s, int rank) {
    bool radians = false;
    auto pos = s.find("rad");
    if (pos != std::string::npos) {
        radians = true;
        s = s.substr(0, pos);
    }
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(tok);
    if (int(parts.size()) != rank)
        throw ValidationError("point has " + std::to_string(parts.size()) +
                              " coordinates, expected " + std::to_string(rank));
    bool exact = !radians;
    std::vector<Rational> rat;
    std::vector<double> flt;
    for (auto& p : parts) {
        // trim whitespace
        size_t a = p.find_first_not_of(" \t");
        size_t b = p.find_last_not_of(" \t");
        if (a == std::string::npos) throw ValidationError("empty point coordinate");
        std::string v = p.substr(a, b - a + 1);
        auto slash = v.find('/');
        if (!radians && slash != std::string::npos) {
            rat.push_back(Rational(std::stoll(v.substr(0, slash)), std::stoll(v.substr(slash + 1))));
            flt.push_back(rat.back().to_double());
        } else if (!radians && v.find('.') == std::string::npos && v.find('e') == std::string::npos) {
            rat.push_back(Rational(std::stoll(v)));
            flt.push_back(rat.back().to_double());
        } else {
            exact = false;
            flt.push_back(std::stod(v));
        }
    }
    if (exact) return TorusPoint::turns(rat);
    if (radians) return TorusPoint::radians(flt);
    return TorusPoint::turns(flt);
}

inline std::string point_str(const std::vector<Rational>& t) {
    std::string s;
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += t[i].mod1().str();
    }
    return s;
}

} // namespace harper

#endif
