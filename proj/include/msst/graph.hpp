#ifndef MSST_GRAPH_HPP
#define MSST_GRAPH_HPP

#include <compare>
#include <concepts>
#include <span>
#include <string>
#include <vector>

namespace msst {

/// Undirected edge; canonical form keeps u < v.
struct Edge {
    int u = 0;
    int v = 0;
    auto operator<=>(const Edge&) const = default;
};

inline Edge canonical_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

enum class FactorKind { Complete, Path };

/// One factor of a Cartesian product: K_n or P_n, n >= 2.
struct FactorSpec {
    FactorKind kind = FactorKind::Complete;
    int size = 2;
    bool operator==(const FactorSpec&) const = default;
};

/// Coordinate vector of a product-graph vertex. Complete factors range
/// over {0..n-1}, Path factors over {1..n}.
using Coord = std::vector<int>;

/// Cartesian product of complete-graph and path factors. Vertices are
/// mixed-radix indices (factor 0 most significant); adjacency is computed
/// from coordinates on demand, nothing is stored per vertex.
class ProductGraph {
public:
    explicit ProductGraph(std::vector<FactorSpec> factors);

    int dimension() const { return static_cast<int>(factors_.size()); }
    int vertex_count() const { return vertex_count_; }
    const std::vector<FactorSpec>& factors() const { return factors_; }

    bool is_hamming() const;  // all factors Complete
    bool is_grid() const;     // all factors Path

    Coord coord_of(int v) const;
    int index_of(const Coord& c) const;

    std::vector<int> neighbors(int v) const;
    bool adjacent(int u, int v) const;
    int degree(int v) const;
    long long edge_count() const;

    /// Coordinate-wise +1 modulo n_i. Hamming graphs only; not an involution.
    int antipodal(int v) const;

    /// The path varying coordinate `axis` from 1 to n_axis while every other
    /// coordinate j is pinned to corner[j] in {1, n_j}. Grids only;
    /// corner[axis] is ignored.
    std::vector<int> boundary_path(int axis, const Coord& corner) const;

    bool operator==(const ProductGraph& o) const { return factors_ == o.factors_; }

private:
    void check_vertex(int v) const;

    std::vector<FactorSpec> factors_;
    std::vector<int> stride_;  // stride_[i] = product of sizes of factors i+1..d-1
    int vertex_count_ = 0;
};

inline ProductGraph make_product_graph(std::vector<FactorSpec> factors) {
    return ProductGraph(std::move(factors));
}

/// Flips a boundary-path corner to the antipodal one (1 <-> n_j on every
/// pinned coordinate); the axis coordinate is left untouched.
Coord antipodal_corner(const ProductGraph& g, int axis, const Coord& corner);

/// Plain adjacency-list graph over vertices 0..n-1; the general-oracle
/// input format of the exact solver.
class ExplicitGraph {
public:
    ExplicitGraph(int n, std::span<const Edge> edges);

    int vertex_count() const { return n_; }
    const std::vector<int>& neighbors(int v) const;
    bool adjacent(int u, int v) const;
    const std::vector<Edge>& edges() const { return edges_; }
    bool connected() const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;  // canonical, sorted
};

template <typename G>
concept GraphLike = requires(const G& g, int u, int v) {
    { g.vertex_count() } -> std::convertible_to<int>;
    { g.neighbors(v) } -> std::convertible_to<std::vector<int>>;
    { g.adjacent(u, v) } -> std::convertible_to<bool>;
};

/// Visits every edge once, in canonical lexicographic order.
template <GraphLike G, typename F>
void for_each_edge(const G& g, F&& fn) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        auto&& nb = g.neighbors(v);
        for (int w : nb)
            if (w > v) fn(Edge{v, w});
    }
}

template <GraphLike G>
std::vector<Edge> edges_of(const G& g) {
    std::vector<Edge> out;
    for_each_edge(g, [&](Edge e) { out.push_back(e); });
    return out;
}

/// Materializes any graph into explicit adjacency-list form.
template <GraphLike G>
ExplicitGraph materialize(const G& g) {
    auto es = edges_of(g);
    return ExplicitGraph(g.vertex_count(), es);
}

/// Parses factor-spec strings like "K4xK5" or "P3xP4xP4".
std::vector<FactorSpec> parse_product_spec(const std::string& spec);
std::string format_product_spec(const std::vector<FactorSpec>& factors);

/// "(0,1,2)" style coordinate label used by DOT export and reports.
std::string format_coord(const Coord& c);

}  // namespace msst

#endif
