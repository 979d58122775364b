#include "msst/json_io.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace msst {

namespace {

json edge_to_json(Edge e) { return json::array({e.u, e.v}); }

Edge edge_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("edge must be a [u,v] pair");
    return {j.at(0), j.at(1)};
}

template <GraphLike G>
std::string render_dot(const G& g, const SpanningTree* tree,
                       const std::function<std::string(int)>& label) {
    std::ostringstream out;
    out << "graph g {\n  node [shape=circle];\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out << "  " << v << " [label=\"" << label(v) << "\"];\n";
    for_each_edge(g, [&](Edge e) {
        bool solid = tree == nullptr || tree->contains_edge(e);
        out << "  " << e.u << " -- " << e.v;
        if (!solid) out << " [style=dotted]";
        out << ";\n";
    });
    out << "}\n";
    return out.str();
}

}  // namespace

json to_json(const ProductGraph& g) {
    json factors = json::array();
    for (const auto& f : g.factors())
        factors.push_back({{"kind", f.kind == FactorKind::Complete ? "complete" : "path"},
                           {"n", f.size}});
    return {{"factors", factors}};
}

ProductGraph product_graph_from_json(const json& j) {
    std::vector<FactorSpec> factors;
    for (const auto& f : j.at("factors")) {
        std::string kind = f.at("kind");
        if (kind != "complete" && kind != "path")
            throw std::invalid_argument("factor kind must be \"complete\" or \"path\"");
        factors.push_back({kind == "complete" ? FactorKind::Complete : FactorKind::Path,
                           f.at("n").get<int>()});
    }
    return ProductGraph(std::move(factors));
}

json to_json(const ExplicitGraph& g) {
    json edges = json::array();
    for (Edge e : g.edges()) edges.push_back(edge_to_json(e));
    return {{"n", g.vertex_count()}, {"edges", edges}};
}

ExplicitGraph explicit_graph_from_json(const json& j) {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back(edge_from_json(e));
    return ExplicitGraph(j.at("n").get<int>(), edges);
}

json to_json(const SpanningTree& t) {
    json edges = json::array();
    for (Edge e : t.edges()) edges.push_back(edge_to_json(e));
    return {{"root", t.root()}, {"edges", edges}};
}

json to_json(const WitnessCertificate& c) {
    json j = {{"tree_edge", edge_to_json(c.tree_edge)},
              {"cotree_edge", edge_to_json(c.cotree_edge)},
              {"detour_length", c.detour_length},
              {"bound", c.bound}};
    if (c.degenerate) j["degenerate"] = true;
    return j;
}

WitnessCertificate certificate_from_json(const json& j) {
    WitnessCertificate c;
    c.tree_edge = edge_from_json(j.at("tree_edge"));
    c.cotree_edge = edge_from_json(j.at("cotree_edge"));
    c.detour_length = j.at("detour_length");
    c.bound = j.at("bound");
    c.degenerate = j.value("degenerate", false);
    return c;
}

json to_json(const SolveResult& r) {
    return {{"optimum", r.optimum},
            {"optimal_tree", to_json(r.optimal_tree)},
            {"trees_enumerated", r.trees_enumerated},
            {"exhausted", r.exhausted}};
}

json to_json(const StretchReport& r) {
    return {{"value", r.value},
            {"witness_edge", edge_to_json(r.witness_edge)},
            {"detour", r.detour}};
}

json to_json(const CongestionReport& r) {
    json cut = json::array();
    for (Edge e : r.cut) cut.push_back(edge_to_json(e));
    return {{"value", r.value},
            {"witness_tree_edge", edge_to_json(r.witness_tree_edge)},
            {"cut", cut}};
}

std::string to_dot(const ProductGraph& g, const SpanningTree* tree) {
    return render_dot(g, tree, [&](int v) { return format_coord(g.coord_of(v)); });
}

std::string to_dot(const ExplicitGraph& g, const SpanningTree* tree) {
    return render_dot(g, tree, [](int v) { return std::to_string(v); });
}

}  // namespace msst
