#include "msst/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace msst {

namespace {

struct SortedDims {
    std::vector<int> dims;
    std::vector<int> order;  // dims[k] came from input position order[k]
};

SortedDims sort_dims(std::vector<int> dims) {
    if (dims.empty()) throw std::invalid_argument("dims must be non-empty");
    for (int n : dims)
        if (n < 2) throw std::invalid_argument("every dimension must be at least 2");
    SortedDims out;
    out.order.resize(dims.size());
    std::iota(out.order.begin(), out.order.end(), 0);
    std::ranges::stable_sort(out.order, [&](int a, int b) { return dims[a] < dims[b]; });
    out.dims.reserve(dims.size());
    for (int idx : out.order) out.dims.push_back(dims[idx]);
    return out;
}

std::vector<FactorSpec> to_factors(const std::vector<int>& dims, FactorKind kind) {
    std::vector<FactorSpec> fs;
    fs.reserve(dims.size());
    for (int n : dims) fs.push_back({kind, n});
    return fs;
}

}  // namespace

ConstructionResult hamming_optimal_tree(std::vector<int> dims) {
    auto sorted = sort_dims(std::move(dims));
    ProductGraph g(to_factors(sorted.dims, FactorKind::Complete));
    const int d = g.dimension();
    std::vector<Edge> edges;
    edges.reserve(g.vertex_count() - 1);
    Coord scratch(d, 0);

    // Builds the tree on the sub-product where coordinates 0..i-1 are fixed
    // in `scratch`; returns the center. Copies run along factor i; copy 0's
    // center becomes the center of the joining star.
    auto build = [&](auto&& self, int i) -> int {
        const int n = sorted.dims[i];
        if (i == d - 1) {
            scratch[i] = 0;
            int center = g.index_of(scratch);
            for (int x = 1; x < n; ++x) {
                scratch[i] = x;
                edges.push_back(canonical_edge(center, g.index_of(scratch)));
            }
            return center;
        }
        scratch[i] = 0;
        int center = self(self, i + 1);
        for (int a = 1; a < n; ++a) {
            scratch[i] = a;
            edges.push_back(canonical_edge(center, self(self, i + 1)));
        }
        return center;
    };
    int center = build(build, 0);

    int predicted = predicted_stretch(Family::Hamming, sorted.dims);
    SpanningTree tree = build_tree(g, edges);
    return {std::move(g), std::move(tree), center, predicted, std::move(sorted.order)};
}

ConstructionResult grid_optimal_tree(std::vector<int> dims) {
    auto sorted = sort_dims(std::move(dims));
    ProductGraph g(to_factors(sorted.dims, FactorKind::Path));
    const int d = g.dimension();
    std::vector<Edge> edges;
    edges.reserve(g.vertex_count() - 1);
    Coord scratch(d, 1);

    // Builds the tree on the sub-product where coordinates j+1..d-1 are
    // fixed in `scratch`; returns the center. Copies run along factor j and
    // are joined by the central path through their centers; the path center
    // is taken at the 1-based index ceil(n/2), which keeps every vertex
    // within floor(n/2) of it on both sides.
    auto build = [&](auto&& self, int j) -> int {
        const int n = sorted.dims[j];
        const int mid = (n + 1) / 2;
        if (j == 0) {
            scratch[0] = 1;
            int prev = g.index_of(scratch);
            int center = prev;
            for (int x = 2; x <= n; ++x) {
                scratch[0] = x;
                int cur = g.index_of(scratch);
                edges.push_back(canonical_edge(prev, cur));
                if (x == mid) center = cur;
                prev = cur;
            }
            return center;
        }
        std::vector<int> centers(n);
        for (int a = 1; a <= n; ++a) {
            scratch[j] = a;
            centers[a - 1] = self(self, j - 1);
        }
        for (int a = 0; a + 1 < n; ++a)
            edges.push_back(canonical_edge(centers[a], centers[a + 1]));
        return centers[mid - 1];
    };
    int center = build(build, d - 1);

    int predicted = predicted_stretch(Family::Grid, sorted.dims);
    SpanningTree tree = build_tree(g, edges);
    return {std::move(g), std::move(tree), center, predicted, std::move(sorted.order)};
}

int predicted_stretch(Family family, std::vector<int> dims) {
    auto sorted = sort_dims(std::move(dims));
    const int d = static_cast<int>(sorted.dims.size());
    if (family == Family::Hamming)
        return sorted.dims[0] == 2 ? 2 * d - 1 : 2 * d;
    int sum = 0;
    for (int i = 0; i + 1 < d; ++i) sum += sorted.dims[i] / 2;
    return 2 * sum + 1;
}

}  // namespace msst
