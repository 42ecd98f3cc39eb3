// Command-line front end: model validation, automorphism and fixed-point
// reports, band scans, symmetry analysis at rational points.
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "harper/harper.hpp"

using namespace harper;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

struct NumericalContractError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string graph_file;
    std::string builtin;
    std::string out;
    std::string format = "json";
    double tol = 1e-8;
    unsigned seed = 12345;
    bool loop_reversals = false;
};

Model load_model(const Options& o) {
    if (!o.builtin.empty()) return builtin_model(o.builtin);
    if (o.graph_file.empty()) throw ValidationError("provide --graph FILE or --builtin NAME");
    std::ifstream in(o.graph_file);
    if (!in) throw IoError("cannot open '" + o.graph_file + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ValidationError(std::string("graph JSON parse error: ") + e.what());
    }
    return model_from_json(j);
}

void emit(const Options& o, const json& report, const std::string& table) {
    std::string text = o.format == "table" ? table : report.dump(2) + "\n";
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw IoError("cannot write '" + o.out + "'");
    f << text;
}

std::string group_label(std::vector<int> orders) {
    std::sort(orders.begin(), orders.end());
    const int n = int(orders.size());
    std::map<int, int> h;
    for (int x : orders) ++h[x];
    auto is = [&](std::map<int, int> want) { return h == want; };
    if (n == 1) return "1";
    if (h.count(n)) return "C" + std::to_string(n);
    if (n == 4 && is({{1, 1}, {2, 3}})) return "C2xC2";
    if (n == 6 && is({{1, 1}, {2, 3}, {3, 2}})) return "S3";
    if (n == 8 && is({{1, 1}, {2, 5}, {4, 2}})) return "D4";
    if (n == 8 && is({{1, 1}, {2, 1}, {4, 6}})) return "Q8";
    if (n == 12 && is({{1, 1}, {2, 3}, {3, 8}})) return "A4";
    if (n == 12 && is({{1, 1}, {2, 7}, {3, 2}, {6, 2}})) return "D6";
    if (n == 24 && is({{1, 1}, {2, 9}, {3, 8}, {4, 6}})) return "S4";
    if (n == 24 && is({{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}})) return "2.A4";
    return "G" + std::to_string(n);
}

std::vector<int> stabilizer_element_orders(const std::vector<GraphAutomorphism>& elems) {
    std::vector<int> orders;
    for (const auto& e : elems) {
        int o = 1;
        GraphAutomorphism x = e;
        while (!x.is_identity()) {
            x = compose(x, e);
            ++o;
        }
        orders.push_back(o);
    }
    return orders;
}

json action_to_json(const TorusAction& a) {
    json j;
    j["matrix"] = a.E;
    j["offset_turns"] = json::array();
    for (const auto& r : a.offset) j["offset_turns"].push_back(r.mod1().str());
    return j;
}

json subtorus_to_json(const AffineSubtorus& s) {
    json j;
    j["empty"] = s.empty();
    j["dimension"] = s.dim();
    j["components"] = json::array();
    for (const auto& p : s.points) j["components"].push_back(point_str(p));
    j["directions"] = s.directions;
    return j;
}

json analysis_to_json(const Model& m, const ModelSymmetry& sym, const PointAnalysis& r,
                      double tol) {
    json j;
    j["point"] = point_str(r.point);
    j["stabilizer_order"] = r.stab_order;
    std::vector<GraphAutomorphism> elems;
    for (int i : stabilizer_indices(sym.actions, r.point)) elems.push_back(sym.autos[i]);
    j["stabilizer_label"] = group_label(stabilizer_element_orders(elems));
    j["cocycle_order"] = r.cocycle_order;
    j["minimal_extension"] = r.minimal_m;
    j["trivializable"] = (r.minimal_m == 1);
    j["extension_order"] = r.extension_orders.size();
    j["extension_label"] = group_label(r.extension_orders);
    json irreps = json::array();
    for (const auto& b : r.super.blocks) {
        json jb;
        jb["dimension"] = b.degree;
        jb["multiplicity"] = b.multiplicity;
        jb["levels"] = b.levels;
        irreps.push_back(jb);
    }
    j["isotypic_blocks"] = irreps;
    j["eigenvalues"] = r.levels;
    j["degeneracy_profile"] = r.degeneracy;
    j["commutant_residual"] = r.super.commutant_residual;
    j["tolerance"] = tol;
    return j;
}

std::string analysis_table(const json& j) {
    std::ostringstream os;
    os << "point            " << j["point"].get<std::string>() << "\n"
       << "stabilizer       " << j["stabilizer_label"].get<std::string>() << " (order "
       << j["stabilizer_order"] << ")\n"
       << "cocycle order    " << j["cocycle_order"] << "\n"
       << "extension        m = " << j["minimal_extension"]
       << (j["trivializable"].get<bool>() ? " (trivializable)" : " (projective)") << "\n";
    os << "blocks           ";
    for (const auto& b : j["isotypic_blocks"])
        os << "[dim " << b["dimension"] << " x" << b["multiplicity"] << "] ";
    os << "\neigenvalues     ";
    for (double v : j["eigenvalues"]) os << " " << v;
    os << "\ndegeneracies    ";
    for (int d : j["degeneracy_profile"]) os << " " << d;
    os << "\n";
    return os.str();
}

SpanningTree random_tree(const Graph& g, std::mt19937& rng) {
    std::vector<int> edges(g.num_edges());
    for (int i = 0; i < g.num_edges(); ++i) edges[i] = i;
    std::vector<int> ord(g.num_vertices());
    for (int i = 0; i < g.num_vertices(); ++i) ord[i] = i;
    while (true) {
        std::shuffle(edges.begin(), edges.end(), rng);
        std::shuffle(ord.begin(), ord.end(), rng);
        SpanningTree t;
        t.edges.assign(edges.begin(), edges.begin() + g.num_vertices() - 1);
        t.order = ord;
        t.root = ord[0];
        try {
            validate_tree(g, t);
            return t;
        } catch (const ValidationError&) {
        }
    }
}

int run(int argc, char** argv) {
    CLI::App app{"Quotient-graph Hamiltonians over the n-torus: gauge structure, "
                 "symmetry lifts and degeneracy analysis"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--graph", o.graph_file, "graph JSON file");
    app.add_option("--builtin", o.builtin, "built-in model: P, D, gyroid, honeycomb");
    app.add_option("--out", o.out, "output file (default stdout)");
    app.add_option("--format", o.format, "json | table | csv")
        ->check(CLI::IsMember({"json", "table", "csv"}));
    app.add_option("--tol", o.tol, "degeneracy tolerance (default 1e-8)");
    app.add_option("--seed", o.seed, "random seed");
    app.add_flag("--loop-reversals", o.loop_reversals,
                 "include loop-orientation reversals among automorphisms");

    auto* c_validate = app.add_subcommand("validate", "check graph, tree and weight data");
    auto* c_autos = app.add_subcommand("autos", "automorphism group and induced torus actions");
    auto* c_bands = app.add_subcommand("bands", "band scan over a grid or path (CSV)");
    std::string grid_spec, path_spec;
    int samples = 200;
    c_bands->add_option("--grid", grid_spec, "divisions per axis, e.g. 51,51,51");
    c_bands->add_option("--path", path_spec,
                        "named path ('diag') or waypoints 'p1;p2;...' in turns");
    c_bands->add_option("--samples", samples, "samples per path segment");
    auto* c_fixed = app.add_subcommand("fixed-points", "fixed sets of the lifted actions");
    auto* c_point = app.add_subcommand("analyze-point", "symmetry analysis at one point");
    std::string point_spec;
    c_point->add_option("--point", point_spec, "torus point, e.g. 1/4,1/4,1/4")->required();
    auto* c_analyze = app.add_subcommand("analyze", "census of high-symmetry points");
    auto* c_cocycle = app.add_subcommand("cocycle-check",
                                         "randomized re-gauging/cocycle identity checks");
    int trials = 100;
    c_cocycle->add_option("--trials", trials, "number of random tree triples");

    app.parse(argc, argv);

    Model m = load_model(o);
    m.graph.validate();
    validate_tree(m.graph, m.tree);
    check_weight_function(m.graph, m.weights);

    if (c_validate->parsed()) {
        json j;
        j["name"] = m.graph.name;
        j["vertices"] = m.graph.num_vertices();
        j["edges"] = m.graph.num_edges();
        j["rank"] = m.graph.rank;
        j["betti1"] = m.graph.betti1();
        j["weights_generate_torus"] = weights_generate_torus(m.graph, m.tree, m.weights);
        j["hamiltonian_self_adjoint"] =
            build_hamiltonian(m.graph, m.tree, m.weights).is_self_adjoint();
        j["valid"] = true;
        std::ostringstream tb;
        tb << "graph " << m.graph.name << ": " << m.graph.num_vertices() << " vertices, "
           << m.graph.num_edges() << " edges, rank " << m.graph.rank << " -- valid\n";
        emit(o, j, tb.str());
        return kExitOk;
    }

    if (c_bands->parsed()) {
        AMatrix H = build_hamiltonian(m.graph, m.tree, m.weights);
        std::vector<BandPoint> pts;
        if (!grid_spec.empty()) {
            std::stringstream ss(grid_spec);
            std::string tok;
            std::vector<int> divs;
            while (std::getline(ss, tok, ',')) divs.push_back(std::stoi(tok));
            for (int d : divs)
                if (d != divs[0])
                    throw ValidationError("grid must use equal divisions on every axis");
            if (int(divs.size()) != 1 && int(divs.size()) != m.graph.rank)
                throw ValidationError("grid spec must list 1 or rank entries");
            pts = scan_grid(H, divs[0]);
        } else if (!path_spec.empty()) {
            std::vector<std::vector<double>> wps;
            if (path_spec == "diag") {
                wps.push_back(std::vector<double>(m.graph.rank, 0.0));
                wps.push_back(std::vector<double>(m.graph.rank, 1.0));
            } else {
                std::stringstream ss(path_spec);
                std::string tok;
                while (std::getline(ss, tok, ';')) {
                    TorusPoint p = parse_point(tok, m.graph.rank);
                    wps.push_back(p.turns_d());
                }
            }
            pts = scan_path(H, wps, samples);
        } else {
            throw ValidationError("bands needs --grid or --path");
        }
        std::ostringstream csv;
        write_band_csv(csv, pts, m.graph.rank, m.graph.num_vertices());
        if (o.out.empty()) {
            std::cout << csv.str();
        } else {
            std::ofstream f(o.out);
            if (!f) throw IoError("cannot write '" + o.out + "'");
            f << csv.str();
        }
        return kExitOk;
    }

    ModelSymmetry sym = model_symmetry(m, o.loop_reversals);

    if (c_autos->parsed()) {
        json j;
        j["order"] = sym.autos.size();
        j["automorphisms"] = json::array();
        for (size_t i = 0; i < sym.autos.size(); ++i) {
            json ja;
            ja["vertices"] = sym.autos[i].vperm;
            ja["edges"] = sym.autos[i].eperm;
            ja["action"] = action_to_json(sym.actions[i]);
            j["automorphisms"].push_back(ja);
        }
        std::ostringstream tb;
        tb << "automorphism group order " << sym.autos.size() << "\n";
        for (size_t i = 0; i < sym.autos.size(); ++i) {
            tb << "#" << i << " vperm";
            for (int v : sym.autos[i].vperm) tb << " " << v;
            tb << "  offset";
            for (const auto& r : sym.actions[i].offset) tb << " " << r.mod1().str();
            tb << "\n";
        }
        emit(o, j, tb.str());
        return kExitOk;
    }

    if (c_fixed->parsed()) {
        json j;
        j["single"] = json::array();
        std::ostringstream tb;
        for (size_t i = 0; i < sym.actions.size(); ++i) {
            if (sym.autos[i].is_identity()) continue;
            json row;
            row["automorphism"] = int(i);
            row["fixed_set"] = subtorus_to_json(fixed_set(sym.actions[i]));
            j["single"].push_back(row);
            tb << "#" << i << " dim " << fixed_set(sym.actions[i]).dim() << " components "
               << fixed_set(sym.actions[i]).points.size() << "\n";
        }
        j["pairs"] = json::array();
        for (size_t i = 0; i < sym.actions.size(); ++i)
            for (size_t k = i + 1; k < sym.actions.size(); ++k) {
                if (sym.autos[i].is_identity() || sym.autos[k].is_identity()) continue;
                AffineSubtorus s =
                    common_fixed_set({sym.actions[i], sym.actions[k]}, m.graph.rank);
                if (s.empty()) continue;
                json row;
                row["automorphisms"] = {int(i), int(k)};
                row["fixed_set"] = subtorus_to_json(s);
                j["pairs"].push_back(row);
            }
        emit(o, j, tb.str());
        return kExitOk;
    }

    if (c_point->parsed()) {
        TorusPoint p = parse_point(point_spec, m.graph.rank);
        if (!p.exact())
            throw ValidationError("analyze-point needs a rational point (turns p/q)");
        PointAnalysis r = analyze_point(m, sym, p.turns_exact(), o.tol, o.seed);
        if (r.super.commutant_residual > 1e-9)
            throw NumericalContractError("symmetry group does not commute with H");
        json j = analysis_to_json(m, sym, r, o.tol);
        emit(o, j, analysis_table(j));
        return kExitOk;
    }

    if (c_analyze->parsed()) {
        json j;
        j["points"] = json::array();
        std::ostringstream tb;
        for (const auto& row : strata_census(sym, m.graph.rank)) {
            PointAnalysis r = analyze_point(m, sym, row.point, o.tol, o.seed);
            json ja = analysis_to_json(m, sym, r, o.tol);
            j["points"].push_back(ja);
            tb << analysis_table(ja) << "\n";
        }
        emit(o, j, tb.str());
        return kExitOk;
    }

    if (c_cocycle->parsed()) {
        std::mt19937 rng(o.seed);
        int pass = 0, fail = 0;
        for (int i = 0; i < trials; ++i) {
            SpanningTree ta = random_tree(m.graph, rng);
            SpanningTree tb = random_tree(m.graph, rng);
            SpanningTree tc = random_tree(m.graph, rng);
            bool ok = verify_cocycle_equation(m.graph, m.weights, ta, tb, tc);
            // re-gauging conjugation identity, exact in monomial arithmetic
            MonomialMatrix M = regauge_matrix(m.graph, ta, tb, m.weights);
            AMatrix Ha = build_hamiltonian(m.graph, ta, m.weights);
            AMatrix Hb = build_hamiltonian(m.graph, tb, m.weights);
            ok = ok && M.is_unitary() &&
                 (M.to_amatrix() * Ha * M.adjoint().to_amatrix()).approx_equal(Hb, 1e-12);
            (ok ? pass : fail) += 1;
        }
        json j;
        j["trials"] = trials;
        j["pass"] = pass;
        j["fail"] = fail;
        std::ostringstream tb;
        tb << "cocycle-check: " << pass << " pass, " << fail << " fail of " << trials << "\n";
        emit(o, j, tb.str());
        return fail == 0 ? kExitOk : kExitNumerical;
    }

    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        return CLI::App{}.exit(e);
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const NumericalContractError& e) {
        std::cerr << "numerical contract violation: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
