#include "msst/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "msst/constructions.hpp"
#include "msst/exact_solver.hpp"
#include "msst/json_io.hpp"
#include "msst/verifier.hpp"

namespace msst {

namespace {

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

void write_json(const json& j, const std::string& out_path) {
    write_output(j.dump(2) + "\n", out_path);
}

using AnyGraph = std::variant<ProductGraph, ExplicitGraph>;

AnyGraph load_graph_file(const std::string& path) {
    json j = read_json_file(path);
    if (j.contains("factors")) return product_graph_from_json(j);
    if (j.contains("n") && j.contains("edges")) return explicit_graph_from_json(j);
    throw std::invalid_argument(path + ": expected a factor descriptor or an edge-list graph");
}

Family parse_family(const std::string& name) {
    if (name == "hamming") return Family::Hamming;
    if (name == "grid") return Family::Grid;
    throw std::invalid_argument("family must be hamming or grid");
}

std::vector<FactorSpec> factors_from(const std::string& spec, const std::string& family,
                                     const std::vector<int>& dims) {
    if (!spec.empty()) {
        if (!family.empty() || !dims.empty())
            throw std::invalid_argument("give either --spec or --family with --dims, not both");
        return parse_product_spec(spec);
    }
    if (family.empty() || dims.empty())
        throw std::invalid_argument("need --spec or --family with --dims");
    FactorKind kind = parse_family(family) == Family::Hamming ? FactorKind::Complete
                                                              : FactorKind::Path;
    std::vector<FactorSpec> out;
    for (int n : dims) out.push_back({kind, n});
    return out;
}

std::string dims_label(const std::vector<int>& dims) {
    std::ostringstream s;
    for (size_t i = 0; i < dims.size(); ++i) {
        if (i) s << 'x';
        s << dims[i];
    }
    return s.str();
}

struct BudgetFlags {
    long long trees = SolveBudget{}.max_trees;
    double seconds = SolveBudget{}.time_cap_seconds;
    int vertices = SolveBudget{}.max_vertices;

    void attach(CLI::App* cmd) {
        cmd->add_option("--budget-trees", trees, "max spanning trees to enumerate");
        cmd->add_option("--budget-seconds", seconds, "wall-clock cap in seconds");
        cmd->add_option("--budget-vertices", vertices, "vertex cap for exact solving");
    }
    SolveBudget to_budget() const { return {vertices, trees, seconds}; }
};

// Advances dims to the next non-decreasing tuple with dims[i] <= caps[i];
// false when the sweep is over.
bool next_sorted_dims(std::vector<int>& dims, const std::vector<int>& caps) {
    int d = static_cast<int>(dims.size());
    for (int i = d - 1; i >= 0; --i) {
        if (dims[i] < caps[i]) {
            ++dims[i];
            bool ok = true;
            for (int j = i + 1; j < d; ++j) {
                dims[j] = std::max(dims[j - 1], 2);
                if (dims[j] > caps[j]) ok = false;
            }
            if (ok) return true;
            // overflowed a later cap; keep carrying
        }
    }
    return false;
}

int cmd_gen(const std::string& spec, const std::string& family, const std::vector<int>& dims,
            bool edge_list, const std::string& out) {
    ProductGraph g(factors_from(spec, family, dims));
    if (edge_list)
        write_json(to_json(materialize(g)), out);
    else
        write_json(to_json(g), out);
    return 0;
}

int cmd_construct(const std::string& family, const std::vector<int>& dims,
                  const std::string& out) {
    Family fam = parse_family(family);
    ConstructionResult r =
        fam == Family::Hamming ? hamming_optimal_tree(dims) : grid_optimal_tree(dims);
    json j = to_json(r.tree);  // root + edges, so the file doubles as a tree file
    j["family"] = family;
    j["dims"] = dims;
    j["graph"] = to_json(r.graph);
    j["center"] = r.center;
    j["predicted"] = r.predicted;
    j["dimension_order"] = r.dimension_order;
    write_json(j, out);
    return 0;
}

int cmd_eval(const std::string& graph_path, const std::string& tree_path,
             const std::string& out) {
    AnyGraph g = load_graph_file(graph_path);
    json tj = read_json_file(tree_path);
    std::visit(
        [&](const auto& graph) {
            SpanningTree t = tree_from_json(graph, tj);
            json j = {{"stretch", to_json(max_stretch(graph, t))},
                      {"congestion", to_json(max_congestion(graph, t))},
                      {"diameter", t.diameter()}};
            write_json(j, out);
        },
        g);
    return 0;
}

int cmd_exact(const std::string& graph_path, const std::string& spec,
              const BudgetFlags& budget, int jobs, std::optional<int> k,
              const std::string& out) {
    ExplicitGraph g = [&] {
        if (!spec.empty()) return materialize(ProductGraph(parse_product_spec(spec)));
        if (graph_path.empty()) throw std::invalid_argument("need --graph or --spec");
        AnyGraph any = load_graph_file(graph_path);
        return std::visit([](const auto& graph) { return materialize(graph); }, any);
    }();
    if (k) {
        KSpannerResult r = k_spanner_decision(g, *k, budget.to_budget());
        json j = {{"k", *k},
                  {"answer", r.answer == KSpannerAnswer::Yes      ? "yes"
                             : r.answer == KSpannerAnswer::No     ? "no"
                                                                  : "unknown"},
                  {"trees_enumerated", r.trees_enumerated}};
        if (r.witness) j["witness"] = to_json(*r.witness);
        write_json(j, out);
    } else {
        SolveResult r = exact_tree_stretch(g, budget.to_budget(), jobs);
        write_json(to_json(r), out);
    }
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& spec,
               const std::string& tree_path, const std::string& cert_path, int random_trees,
               unsigned long long seed, bool duality, const std::string& out) {
    ProductGraph g = [&] {
        if (!spec.empty()) return ProductGraph(parse_product_spec(spec));
        if (graph_path.empty()) throw std::invalid_argument("need --graph or --spec");
        json j = read_json_file(graph_path);
        return product_graph_from_json(j);
    }();

    if (!cert_path.empty()) {
        if (tree_path.empty())
            throw std::invalid_argument("--cert needs --tree to check against");
        SpanningTree t = tree_from_json(g, read_json_file(tree_path));
        WitnessCertificate c = certificate_from_json(read_json_file(cert_path));
        CheckResult r = check_certificate(g, t, c);
        json j = {{"ok", r.ok}};
        if (!r.ok) j["reason"] = r.reason;
        write_json(j, out);
        return 0;
    }

    if (!tree_path.empty()) {
        SpanningTree t = tree_from_json(g, read_json_file(tree_path));
        if (!g.is_hamming()) {
            if (!duality)
                throw std::invalid_argument("witness certificates need a Hamming graph "
                                            "(use --duality for other products)");
            write_json(json{{"duality", duality_check(g, t)}}, out);
            return 0;
        }
        WitnessCertificate cert = hamming_witness(g, t);
        CheckResult check = check_certificate(g, t, cert);
        if (!check.ok) throw std::logic_error("internal invariant violation: " + check.reason);
        if (duality) {
            write_json(json{{"certificate", to_json(cert)}, {"duality", duality_check(g, t)}},
                       out);
        } else {
            write_json(to_json(cert), out);
        }
        return 0;
    }

    if (random_trees <= 0)
        throw std::invalid_argument("need --tree, --cert, or --random N");
    std::mt19937_64 rng(seed);
    bool do_certs = g.is_hamming();
    if (!do_certs && !duality)
        throw std::invalid_argument("witness certificates need a Hamming graph "
                                    "(use --duality for other products)");
    int min_detour = -1;
    bool all_valid = true, all_dual = true;
    for (int i = 0; i < random_trees; ++i) {
        SpanningTree t = random_spanning_tree(g, rng);
        if (do_certs) {
            WitnessCertificate cert = hamming_witness(g, t);
            all_valid = all_valid && check_certificate(g, t, cert).ok;
            if (min_detour < 0 || cert.detour_length < min_detour)
                min_detour = cert.detour_length;
        }
        if (duality) all_dual = all_dual && duality_check(g, t);
    }
    json j = {{"trees", random_trees}, {"seed", seed}};
    if (do_certs) {
        j["bound"] = hamming_stretch_bound(g);
        j["min_detour_length"] = min_detour;
        j["all_certificates_valid"] = all_valid;
    }
    if (duality) j["all_dual"] = all_dual;
    write_json(j, out);
    return 0;
}

int cmd_table(const std::string& family, std::vector<int> dims_max, const BudgetFlags& budget,
              int jobs, const std::string& out) {
    Family fam = parse_family(family);
    if (dims_max.empty()) throw std::invalid_argument("need --dims-max");
    std::ranges::sort(dims_max);
    for (int cap : dims_max)
        if (cap < 2) throw std::invalid_argument("every dims-max entry must be at least 2");

    std::ostringstream csv;
    csv << "dims,family,predicted,constructed_measured,exact,exhausted\n";
    std::vector<int> dims(dims_max.size(), 2);
    do {
        ConstructionResult r =
            fam == Family::Hamming ? hamming_optimal_tree(dims) : grid_optimal_tree(dims);
        int measured = max_stretch(r.graph, r.tree).value;
        csv << dims_label(dims) << ',' << family << ',' << r.predicted << ',' << measured;
        if (r.graph.vertex_count() <= budget.vertices) {
            SolveResult solved = exact_tree_stretch(materialize(r.graph), budget.to_budget(), jobs);
            csv << ',' << solved.optimum << ',' << (solved.exhausted ? "true" : "false");
        } else {
            csv << ",,";
        }
        csv << '\n';
    } while (next_sorted_dims(dims, dims_max));
    write_output(csv.str(), out);
    return 0;
}

int cmd_export(const std::string& graph_path, const std::string& spec,
               const std::string& tree_path, const std::string& out) {
    AnyGraph g = !spec.empty() ? AnyGraph(ProductGraph(parse_product_spec(spec)))
                               : load_graph_file(graph_path);
    std::visit(
        [&](const auto& graph) {
            if (tree_path.empty()) {
                write_output(to_dot(graph), out);
            } else {
                SpanningTree t = tree_from_json(graph, read_json_file(tree_path));
                write_output(to_dot(graph, &t), out);
            }
        },
        g);
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"minimum-stretch spanning trees for Hamming graphs and grids"};
    app.require_subcommand(1);

    std::string spec, family, graph_path, tree_path, cert_path, out;
    std::vector<int> dims, dims_max;
    bool edge_list = false, duality = false;
    int jobs = 1, random_trees = 0;
    unsigned long long seed = 1;
    std::optional<int> k;
    BudgetFlags budget;
    int rc = 0;

    auto* gen = app.add_subcommand("gen", "write a product-graph descriptor");
    gen->add_option("--spec", spec, "factor spec, e.g. K4xK5 or P3xP4xP4");
    gen->add_option("--family", family, "hamming or grid");
    gen->add_option("--dims", dims, "factor sizes, e.g. 4,5")->delimiter(',');
    gen->add_flag("--edge-list", edge_list, "emit an explicit edge list instead");
    gen->add_option("--out", out, "output file (default stdout)");
    gen->callback([&] { rc = cmd_gen(spec, family, dims, edge_list, out); });

    auto* construct = app.add_subcommand("construct", "build the optimal spanning tree");
    construct->add_option("--family", family, "hamming or grid")->required();
    construct->add_option("--dims", dims, "factor sizes, e.g. 4,5")->required()->delimiter(',');
    construct->add_option("--out", out, "output file (default stdout)");
    construct->callback([&] { rc = cmd_construct(family, dims, out); });

    auto* eval = app.add_subcommand("eval", "stretch/congestion/diameter of a tree");
    eval->add_option("--graph", graph_path, "graph JSON file")->required();
    eval->add_option("--tree", tree_path, "tree JSON file")->required();
    eval->add_option("--out", out, "output file (default stdout)");
    eval->callback([&] { rc = cmd_eval(graph_path, tree_path, out); });

    auto* exact = app.add_subcommand("exact", "exact tree-stretch by enumeration");
    exact->add_option("--graph", graph_path, "graph JSON file (descriptor or edge list)");
    exact->add_option("--spec", spec, "factor spec, e.g. K2xK3");
    exact->add_option("--k", k, "decide tree k-spanner existence instead");
    exact->add_option("--jobs", jobs, "worker threads");
    budget.attach(exact);
    exact->add_option("--out", out, "output file (default stdout)");
    exact->callback([&] { rc = cmd_exact(graph_path, spec, budget, jobs, k, out); });

    auto* verify = app.add_subcommand("verify", "emit/check lower-bound certificates");
    verify->add_option("--graph", graph_path, "graph descriptor JSON file");
    verify->add_option("--spec", spec, "factor spec, e.g. K3xK3");
    verify->add_option("--tree", tree_path, "tree JSON file");
    verify->add_option("--cert", cert_path, "certificate JSON file to check");
    verify->add_option("--random", random_trees, "sample N random spanning trees");
    verify->add_option("--seed", seed, "random-tree sampling seed");
    verify->add_flag("--duality", duality, "also run the cycle/cut duality check");
    verify->add_option("--out", out, "output file (default stdout)");
    verify->callback([&] {
        rc = cmd_verify(graph_path, spec, tree_path, cert_path, random_trees, seed, duality, out);
    });

    auto* table = app.add_subcommand("table", "sweep a family and tabulate to CSV");
    table->add_option("--family", family, "hamming or grid")->required();
    table->add_option("--dims-max", dims_max, "per-position size caps, e.g. 3,3,3")
        ->required()
        ->delimiter(',');
    table->add_option("--jobs", jobs, "worker threads");
    budget.attach(table);
    table->add_option("--out", out, "output file (default stdout)");
    table->callback([&] { rc = cmd_table(family, dims_max, budget, jobs, out); });

    auto* exp = app.add_subcommand("export", "render the graph (and a tree) as DOT");
    exp->add_option("--graph", graph_path, "graph JSON file");
    exp->add_option("--spec", spec, "factor spec, e.g. K4xK5");
    exp->add_option("--tree", tree_path, "tree JSON file: solid tree edges, dotted cotree");
    exp->add_option("--out", out, "output file (default stdout)");
    exp->callback([&] { rc = cmd_export(graph_path, spec, tree_path, out); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

}  // namespace msst
