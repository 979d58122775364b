#ifndef MSST_CONSTRUCTIONS_HPP
#define MSST_CONSTRUCTIONS_HPP

#include <vector>

#include "msst/graph.hpp"
#include "msst/spanning_tree.hpp"

namespace msst {

enum class Family { Hamming, Grid };

/// A constructed optimal tree. The graph (and tree) are over the factor
/// sizes sorted ascending; dimension_order maps sorted positions back to the
/// caller's order: sorted_dims[k] == dims[dimension_order[k]].
struct ConstructionResult {
    ProductGraph graph;
    SpanningTree tree;
    int center = 0;
    int predicted = 0;
    std::vector<int> dimension_order;
};

/// Recursive star-of-stars tree for K_{n_1} x ... x K_{n_d}: a star inside
/// each copy along the smallest factor, their centers joined by a star.
/// Every vertex stays within tree distance d of the center.
ConstructionResult hamming_optimal_tree(std::vector<int> dims);

/// Recursive central-path tree for P_{n_1} x ... x P_{n_d}: copy trees along
/// the largest factor joined by a path through their centers. Every vertex
/// stays within sum(floor(n_i/2)) of the center.
ConstructionResult grid_optimal_tree(std::vector<int> dims);

/// Closed-form optimal stretch. Hamming: 2d-1 when the smallest factor is 2,
/// else 2d. Grid: 2*sum(floor(n_i/2)) + 1 over the d-1 smallest factors.
int predicted_stretch(Family family, std::vector<int> dims);

}  // namespace msst

#endif
