#include "msst/verifier.hpp"

#include <stdexcept>

namespace msst {

int hamming_stretch_bound(const ProductGraph& g) {
    if (!g.is_hamming())
        throw std::invalid_argument("stretch bound is defined on Hamming graphs only");
    int min_size = g.factors()[0].size;
    for (const auto& f : g.factors()) min_size = std::min(min_size, f.size);
    int d = g.dimension();
    return min_size == 2 ? 2 * d - 1 : 2 * d;
}

Edge mutual_successor_edge(const ProductGraph& g, const SpanningTree& t) {
    if (!g.is_hamming())
        throw std::invalid_argument("mutual successor search needs a Hamming graph");
    require_spanning(g, t);
    const int n = g.vertex_count();
    int cur = 0;
    int next = successor(g, t, cur);
    for (int step = 0; step <= n; ++step) {
        if (successor(g, t, next) == cur) return canonical_edge(cur, next);
        cur = next;
        next = successor(g, t, cur);
    }
    // Unreachable: the successor sequence cannot revisit vertices, so it must
    // hit a mutual pair within n steps.
    throw std::logic_error("internal invariant violation: no mutual-successor edge found");
}

WitnessCertificate hamming_witness(const ProductGraph& g, const SpanningTree& t) {
    Edge uv = mutual_successor_edge(g, t);
    Edge antipode = canonical_edge(g.antipodal(uv.u), g.antipodal(uv.v));
    WitnessCertificate cert;
    cert.tree_edge = uv;
    cert.cotree_edge = antipode;
    cert.detour_length = t.distance(antipode.u, antipode.v);
    cert.bound = hamming_stretch_bound(g);
    cert.degenerate = g.vertex_count() == 2;  // K_2: the antipode IS the tree edge
    return cert;
}

CheckResult check_certificate(const ProductGraph& g, const SpanningTree& t,
                              const WitnessCertificate& c) {
    if (!g.is_hamming()) return {false, "not a Hamming graph"};
    if (t.size() != g.vertex_count()) return {false, "tree does not span the graph"};
    Edge uv = canonical_edge(c.tree_edge.u, c.tree_edge.v);
    if (!t.contains_edge(uv)) return {false, "not a tree edge"};
    if (successor(g, t, uv.u) != uv.v || successor(g, t, uv.v) != uv.u)
        return {false, "endpoints are not mutual successors"};
    Edge antipode = canonical_edge(g.antipodal(uv.u), g.antipodal(uv.v));
    Edge claimed = canonical_edge(c.cotree_edge.u, c.cotree_edge.v);
    if (!g.adjacent(claimed.u, claimed.v)) return {false, "cotree endpoints not adjacent"};
    bool collapses = antipode == uv;
    if (collapses != c.degenerate)
        return {false, c.degenerate ? "flagged degenerate but a cotree witness exists"
                                    : "degenerate case not flagged"};
    if (!c.degenerate && t.contains_edge(claimed)) return {false, "not a cotree edge"};
    if (claimed != antipode)
        return {false, "cotree edge is not the antipodal image of the tree edge"};
    if (c.detour_length != t.distance(antipode.u, antipode.v))
        return {false, "detour mismatch"};
    if (c.bound != hamming_stretch_bound(g)) return {false, "bound mismatch"};
    if (c.detour_length < c.bound) return {false, "detour shorter than the bound"};
    return {};
}

}  // namespace msst
