#ifndef MSST_SPANNING_TREE_HPP
#define MSST_SPANNING_TREE_HPP

#include <algorithm>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "msst/graph.hpp"

namespace msst {

/// Rooted spanning tree stored as parent pointers plus depths. Immutable
/// after construction; all queries are read-only.
class SpanningTree {
public:
    SpanningTree(int n, int root, std::vector<Edge> edges);

    int size() const { return static_cast<int>(parent_.size()); }
    int root() const { return root_; }
    int parent(int v) const { check(v); return parent_[v]; }
    int depth(int v) const { check(v); return depth_[v]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }

    bool contains_edge(Edge e) const {
        return std::ranges::binary_search(edges_, canonical_edge(e.u, e.v));
    }

    /// Tree distance d_T(u,v) via the depth-equalizing walk to the LCA.
    int distance(int u, int v) const;

    /// The unique u-v path in the tree, endpoints included, i.e. the detour
    /// for a graph edge uv.
    std::vector<int> path(int u, int v) const;

    /// Maximum pairwise tree distance (two farthest-vertex sweeps).
    int diameter() const;

    bool operator==(const SpanningTree& o) const {
        return root_ == o.root_ && edges_ == o.edges_;
    }

private:
    void check(int v) const {
        if (v < 0 || v >= size()) throw std::invalid_argument("vertex index out of range");
    }
    int bfs_farthest(int from, std::vector<int>& dist) const;

    int root_ = 0;
    std::vector<int> parent_;
    std::vector<int> depth_;
    std::vector<Edge> edges_;  // canonical, sorted
    std::vector<std::vector<int>> adj_;
};

/// Largest detour over the graph edges, with the witnessing edge (smallest
/// canonical edge on ties) and its detour path.
struct StretchReport {
    int value = 0;
    Edge witness_edge;
    std::vector<int> detour;
};

/// Largest fundamental edge-cut over the tree edges, with the witnessing
/// tree edge (smallest canonical edge on ties) and the cut itself.
struct CongestionReport {
    int value = 0;
    Edge witness_tree_edge;
    std::vector<Edge> cut;
};

/// Validates the edge set against g (cardinality n-1, every edge in E(G),
/// no duplicates, connected) and roots the tree.
template <GraphLike G>
SpanningTree build_tree(const G& g, std::span<const Edge> edges, int root = 0) {
    const int n = g.vertex_count();
    if (static_cast<int>(edges.size()) != n - 1)
        throw std::invalid_argument("spanning tree needs exactly n-1 edges");
    std::vector<Edge> canon;
    canon.reserve(edges.size());
    for (Edge e : edges) {
        if (e.u == e.v) throw std::invalid_argument("self-loop is not a graph edge");
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (!g.adjacent(e.u, e.v))
            throw std::invalid_argument("edge is not an edge of the host graph");
        canon.push_back(canonical_edge(e.u, e.v));
    }
    std::ranges::sort(canon);
    if (std::ranges::adjacent_find(canon) != canon.end())
        throw std::invalid_argument("duplicate edge in spanning tree");
    return SpanningTree(n, root, std::move(canon));
}

/// Checks that t is a spanning tree of g (size match, every tree edge a
/// graph edge); throws if not.
template <GraphLike G>
void require_spanning(const G& g, const SpanningTree& t) {
    if (t.size() != g.vertex_count())
        throw std::invalid_argument("tree does not span the graph: size mismatch");
    for (Edge e : t.edges())
        if (!g.adjacent(e.u, e.v))
            throw std::invalid_argument("tree does not span the graph: non-graph edge");
}

template <GraphLike G>
StretchReport max_stretch(const G& g, const SpanningTree& t) {
    require_spanning(g, t);
    StretchReport report;
    report.value = -1;
    for_each_edge(g, [&](Edge e) {
        int dist = t.distance(e.u, e.v);
        if (dist > report.value) {  // first edge in canonical order wins ties
            report.value = dist;
            report.witness_edge = e;
        }
    });
    report.detour = t.path(report.witness_edge.u, report.witness_edge.v);
    return report;
}

/// The unique cycle of T + e' as a vertex list; consecutive entries are
/// tree edges and the closing (last, first) pair is e' itself.
template <GraphLike G>
std::vector<int> fundamental_cycle(const G& g, const SpanningTree& t, Edge cotree_edge) {
    if (!g.adjacent(cotree_edge.u, cotree_edge.v))
        throw std::invalid_argument("not a graph edge");
    if (t.contains_edge(cotree_edge))
        throw std::invalid_argument("fundamental cycle needs a cotree edge");
    return t.path(cotree_edge.u, cotree_edge.v);
}

/// Fundamental edge-cut of tree edge e: all graph edges with exactly one
/// endpoint in the component of T - e that does not contain the root.
template <GraphLike G>
std::vector<Edge> fundamental_cut(const G& g, const SpanningTree& t, Edge tree_edge) {
    tree_edge = canonical_edge(tree_edge.u, tree_edge.v);
    if (!t.contains_edge(tree_edge))
        throw std::invalid_argument("fundamental cut needs a tree edge");
    // The side away from the root is the subtree under the deeper endpoint.
    int child = t.parent(tree_edge.u) == tree_edge.v ? tree_edge.u : tree_edge.v;
    std::vector<char> in_side(t.size(), 0);
    std::vector<int> stack{child};
    in_side[child] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : t.adjacency()[v])
            if (w != t.parent(v) && !in_side[w]) {
                in_side[w] = 1;
                stack.push_back(w);
            }
    }
    std::vector<Edge> cut;
    for_each_edge(g, [&](Edge e) {
        if (in_side[e.u] != in_side[e.v]) cut.push_back(e);
    });
    return cut;
}

template <GraphLike G>
int edge_congestion(const G& g, const SpanningTree& t, Edge tree_edge) {
    return static_cast<int>(fundamental_cut(g, t, tree_edge).size());
}

template <GraphLike G>
CongestionReport max_congestion(const G& g, const SpanningTree& t) {
    require_spanning(g, t);
    CongestionReport report;
    report.value = -1;
    for (Edge e : t.edges()) {  // canonical order, so first max wins ties
        auto cut = fundamental_cut(g, t, e);
        if (static_cast<int>(cut.size()) > report.value) {
            report.value = static_cast<int>(cut.size());
            report.witness_tree_edge = e;
            report.cut = std::move(cut);
        }
    }
    return report;
}

/// The next vertex after v on the tree path from v to its antipodal vertex.
int successor(const ProductGraph& g, const SpanningTree& t, int v);

/// Uniform random spanning tree by loop-erased random walk (Wilson).
template <GraphLike G>
SpanningTree random_spanning_tree(const G& g, std::mt19937_64& rng) {
    const int n = g.vertex_count();
    std::vector<char> in_tree(n, 0);
    std::vector<int> next(n, -1);
    in_tree[0] = 1;
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int start = 1; start < n; ++start) {
        int u = start;
        while (!in_tree[u]) {
            auto&& nb = g.neighbors(u);
            next[u] = nb[static_cast<size_t>(rng() % nb.size())];
            u = next[u];
        }
        u = start;
        while (!in_tree[u]) {
            edges.push_back(canonical_edge(u, next[u]));
            in_tree[u] = 1;
            u = next[u];
        }
    }
    return build_tree(g, edges);
}

}  // namespace msst

#endif
