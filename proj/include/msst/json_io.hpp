#ifndef MSST_JSON_IO_HPP
#define MSST_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "msst/exact_solver.hpp"
#include "msst/graph.hpp"
#include "msst/spanning_tree.hpp"
#include "msst/verifier.hpp"

namespace msst {

using nlohmann::json;

// Graph descriptor: {"factors":[{"kind":"complete"|"path","n":int},...]}
json to_json(const ProductGraph& g);
ProductGraph product_graph_from_json(const json& j);

// Explicit edge list: {"n":int,"edges":[[u,v],...]}
json to_json(const ExplicitGraph& g);
ExplicitGraph explicit_graph_from_json(const json& j);

// Tree: {"root":int,"edges":[[u,v],...]}; extra keys are ignored on input,
// and the edge set is re-validated against the host graph.
json to_json(const SpanningTree& t);
template <GraphLike G>
SpanningTree tree_from_json(const G& g, const json& j) {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.push_back({e.at(0), e.at(1)});
    return build_tree(g, edges, j.value("root", 0));
}

// Certificate: {"tree_edge":[u,v],"cotree_edge":[a,b],"detour_length":int,
// "bound":int}; "degenerate" appears only when set.
json to_json(const WitnessCertificate& c);
WitnessCertificate certificate_from_json(const json& j);

json to_json(const SolveResult& r);

json to_json(const StretchReport& r);
json to_json(const CongestionReport& r);

/// DOT rendering with tree edges solid and the remaining graph edges
/// dotted; pass nullptr to draw the bare graph. Product-graph vertices are
/// labeled with their coordinates.
std::string to_dot(const ProductGraph& g, const SpanningTree* tree = nullptr);
std::string to_dot(const ExplicitGraph& g, const SpanningTree* tree = nullptr);

}  // namespace msst

#endif
