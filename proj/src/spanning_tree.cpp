#include "msst/spanning_tree.hpp"

#include <queue>
#include <stdexcept>

namespace msst {

SpanningTree::SpanningTree(int n, int root, std::vector<Edge> edges)
    : root_(root), edges_(std::move(edges)) {
    if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
    if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
    if (static_cast<int>(edges_.size()) != n - 1)
        throw std::invalid_argument("spanning tree needs exactly n-1 edges");
    adj_.resize(n);
    for (Edge e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    parent_.assign(n, -1);
    depth_.assign(n, -1);
    std::queue<int> q;
    q.push(root_);
    parent_[root_] = root_;
    depth_[root_] = 0;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj_[v])
            if (depth_[w] < 0) {
                parent_[w] = v;
                depth_[w] = depth_[v] + 1;
                ++reached;
                q.push(w);
            }
    }
    if (reached != n)
        throw std::invalid_argument("edge set does not connect all vertices");
}

int SpanningTree::distance(int u, int v) const {
    check(u);
    check(v);
    int a = u, b = v;
    while (depth_[a] > depth_[b]) a = parent_[a];
    while (depth_[b] > depth_[a]) b = parent_[b];
    while (a != b) {
        a = parent_[a];
        b = parent_[b];
    }
    return depth_[u] + depth_[v] - 2 * depth_[a];
}

std::vector<int> SpanningTree::path(int u, int v) const {
    check(u);
    check(v);
    std::vector<int> from_u, from_v;
    int a = u, b = v;
    while (depth_[a] > depth_[b]) {
        from_u.push_back(a);
        a = parent_[a];
    }
    while (depth_[b] > depth_[a]) {
        from_v.push_back(b);
        b = parent_[b];
    }
    while (a != b) {
        from_u.push_back(a);
        from_v.push_back(b);
        a = parent_[a];
        b = parent_[b];
    }
    from_u.push_back(a);  // the LCA
    from_u.insert(from_u.end(), from_v.rbegin(), from_v.rend());
    return from_u;
}

int SpanningTree::bfs_farthest(int from, std::vector<int>& dist) const {
    dist.assign(size(), -1);
    std::queue<int> q;
    q.push(from);
    dist[from] = 0;
    int far = from;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        if (dist[v] > dist[far]) far = v;
        for (int w : adj_[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return far;
}

int SpanningTree::diameter() const {
    std::vector<int> dist;
    int a = bfs_farthest(root_, dist);
    int b = bfs_farthest(a, dist);
    return dist[b];
}

int successor(const ProductGraph& g, const SpanningTree& t, int v) {
    if (!g.is_hamming())
        throw std::invalid_argument("successor is defined on Hamming graphs only");
    require_spanning(g, t);
    auto detour = t.path(v, g.antipodal(v));
    return detour[1];  // f(v) != v since every coordinate moves
}

}  // namespace msst
