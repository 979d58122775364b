#include "msst/exact_solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace msst {

namespace {

using Clock = std::chrono::steady_clock;

// Union-find without path compression so a union can be undone by restoring
// one parent pointer and one size entry.
class RewindableDsu {
public:
    explicit RewindableDsu(int n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }
    // Returns the absorbed root (so the caller can rewind); roots must differ.
    int unite_roots(int ra, int rb) {
        if (size_[ra] < size_[rb]) std::swap(ra, rb);
        parent_[rb] = ra;
        size_[ra] += size_[rb];
        return rb;
    }
    void rewind(int absorbed_root) {
        int ra = parent_[absorbed_root];
        size_[ra] -= size_[absorbed_root];
        parent_[absorbed_root] = absorbed_root;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

// Throwaway union-find with path compression, for one-shot connectivity
// questions.
class ScratchDsu {
public:
    explicit ScratchDsu(int n) : parent_(n), comps_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[a] = b;
            --comps_;
        }
    }
    int components() const { return comps_; }

private:
    std::vector<int> parent_;
    int comps_;
};

void check_budget(const SolveBudget& b) {
    if (b.max_vertices <= 0 || b.max_trees <= 0 || b.time_cap_seconds <= 0)
        throw std::invalid_argument("budget caps must be positive");
}

void check_solvable(const ExplicitGraph& g, const SolveBudget& b) {
    check_budget(b);
    if (g.vertex_count() > b.max_vertices)
        throw std::invalid_argument("graph exceeds the solver vertex cap");
    if (!g.connected())
        throw std::invalid_argument("graph must be connected");
}

// Depth-first contraction/deletion search over the canonical edge order.
// Including an edge is tried before excluding it, so complete trees arrive
// in lexicographic order of their sorted edge sets. The exclude branch is
// entered only when the remaining edges can still connect everything, so
// every recursion path ends in a spanning tree and each tree is produced
// exactly once.
class TreeSearch {
public:
    struct Shared {
        explicit Shared(const SolveBudget& budget)
            : max_trees(budget.max_trees),
              deadline(Clock::now() +
                       std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(budget.time_cap_seconds))) {}
        std::atomic<long long> trees{0};
        std::atomic<int> bound{INT_MAX};
        std::atomic<bool> stop{false};
        long long max_trees;
        Clock::time_point deadline;
    };

    TreeSearch(const ExplicitGraph& g, Shared& shared, bool track_distances)
        : edges_(g.edges()),
          n_(g.vertex_count()),
          track_(track_distances),
          shared_(shared),
          dsu_(g.vertex_count()),
          components_(g.vertex_count()) {
        if (track_) {
            forest_.assign(n_, {});
            du_.assign(n_, -1);
            dv_.assign(n_, -1);
        }
        chosen_.reserve(static_cast<size_t>(n_) - 1);
    }

    // Called once per completed spanning tree with (edges, max stretch);
    // the stretch value is only meaningful when distances are tracked.
    // Return false to stop the whole search.
    std::function<bool(std::span<const Edge>, int)> on_tree;

    bool truncated() const { return truncated_; }

    // Rebuilds the solver state for a frontier task (edges already decided
    // by the parallel partitioner), then searches the rest of its subtree.
    void run(std::span<const Edge> prefix, int edge_index) {
        for (Edge e : prefix) include(e, false);
        search(edge_index);
    }

    void run_all() { search(0); }

private:
    struct IncludeUndo {
        int absorbed_root;
        int saved_max;
    };

    bool interrupted() {
        if (shared_.stop.load(std::memory_order_relaxed)) return true;
        if (++tick_ % 4096 == 0 && Clock::now() > shared_.deadline)
            shared_.stop.store(true, std::memory_order_relaxed);
        return shared_.stop.load(std::memory_order_relaxed);
    }

    void search(int edge_index) {
        if (interrupted()) {
            truncated_ = true;  // a live subspace (it always holds a tree) was cut off
            return;
        }
        if (components_ == 1) {
            complete();
            return;
        }
        Edge e = edges_[edge_index];
        if (dsu_.find(e.u) == dsu_.find(e.v)) {  // forced exclusion: closes a cycle
            search(edge_index + 1);
            return;
        }
        if (auto undo = include(e, true)) {
            search(edge_index + 1);
            rewind(e, *undo);
        }
        if (!exclude_viable(edge_index + 1)) return;
        if (interrupted()) {
            truncated_ = true;
            return;
        }
        search(edge_index + 1);
    }

    // Joins the two forest components of e's endpoints. With distance
    // tracking on, first computes the now-forced detour of every graph edge
    // across the two components; when pruning, any detour strictly beyond
    // the shared bound abandons the branch. Equal-to-bound detours must
    // survive so that the lexicographic tie-break stays deterministic under
    // parallel runs.
    std::optional<IncludeUndo> include(Edge e, bool check_prune) {
        IncludeUndo undo{-1, running_max_};
        if (track_) {
            int bound = check_prune ? shared_.bound.load(std::memory_order_relaxed) : INT_MAX;
            if (running_max_ > bound) return std::nullopt;
            bfs_forest(e.u, du_);
            bfs_forest(e.v, dv_);
            int new_max = running_max_;
            for (Edge ge : edges_) {
                int da, db;
                if (du_[ge.u] >= 0 && dv_[ge.v] >= 0) {
                    da = du_[ge.u];
                    db = dv_[ge.v];
                } else if (dv_[ge.u] >= 0 && du_[ge.v] >= 0) {
                    da = dv_[ge.u];
                    db = du_[ge.v];
                } else {
                    continue;
                }
                int dist = da + 1 + db;
                if (dist > bound) return std::nullopt;
                new_max = std::max(new_max, dist);
            }
            running_max_ = new_max;
            forest_[e.u].push_back(e.v);
            forest_[e.v].push_back(e.u);
        }
        undo.absorbed_root = dsu_.unite_roots(dsu_.find(e.u), dsu_.find(e.v));
        chosen_.push_back(e);
        --components_;
        return undo;
    }

    void rewind(Edge e, const IncludeUndo& undo) {
        ++components_;
        chosen_.pop_back();
        dsu_.rewind(undo.absorbed_root);
        if (track_) {
            forest_[e.u].pop_back();
            forest_[e.v].pop_back();
            running_max_ = undo.saved_max;
        }
    }

    // Distances from `from` inside its forest component; -1 elsewhere.
    void bfs_forest(int from, std::vector<int>& dist) {
        dist.assign(n_, -1);
        dist[from] = 0;
        queue_.clear();
        queue_.push_back(from);
        for (size_t head = 0; head < queue_.size(); ++head) {
            int v = queue_[head];
            for (int w : forest_[v])
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue_.push_back(w);
                }
        }
    }

    // Can the chosen edges plus every edge from `edge_index` on still span?
    bool exclude_viable(int edge_index) {
        ScratchDsu dsu(n_);
        for (Edge e : chosen_) dsu.unite(e.u, e.v);
        for (size_t i = static_cast<size_t>(edge_index);
             i < edges_.size() && dsu.components() > 1; ++i)
            dsu.unite(edges_[i].u, edges_[i].v);
        return dsu.components() == 1;
    }

    void complete() {
        long long count = shared_.trees.fetch_add(1, std::memory_order_relaxed) + 1;
        if (!on_tree(chosen_, running_max_)) {
            shared_.stop.store(true, std::memory_order_relaxed);
            return;
        }
        if (count >= shared_.max_trees ||
            (count % 256 == 0 && Clock::now() > shared_.deadline))
            shared_.stop.store(true, std::memory_order_relaxed);
    }

    const std::vector<Edge>& edges_;
    int n_;
    bool track_;
    Shared& shared_;

    RewindableDsu dsu_;
    std::vector<std::vector<int>> forest_;
    std::vector<Edge> chosen_;
    int components_;
    int running_max_ = 0;
    bool truncated_ = false;
    unsigned tick_ = 0;

    std::vector<int> du_, dv_, queue_;
};

struct Incumbent {
    int value = INT_MAX;
    std::vector<Edge> edges;

    // (min value, then lexicographically smallest canonical edge set)
    void offer(int value_in, std::span<const Edge> edges_in) {
        if (value_in > value) return;
        if (value_in == value && !edges.empty() &&
            !std::ranges::lexicographical_compare(edges_in, edges))
            return;
        value = value_in;
        edges.assign(edges_in.begin(), edges_in.end());
    }
};

// A subproblem of the branching tree: edges forced in so far plus the next
// undecided position.
struct FrontierTask {
    std::vector<Edge> chosen;
    int edge_index = 0;
};

}  // namespace

EnumerateStats enumerate_spanning_trees(const ExplicitGraph& g, const SolveBudget& budget,
                                        const std::function<bool(std::span<const Edge>)>& visit) {
    check_solvable(g, budget);
    if (g.vertex_count() == 1) {  // the empty tree
        visit({});
        return {1, true};
    }
    TreeSearch::Shared shared(budget);
    TreeSearch search(g, shared, false);
    bool visitor_stopped = false;
    search.on_tree = [&](std::span<const Edge> edges, int) {
        if (!visit(edges)) {
            visitor_stopped = true;
            return false;
        }
        return true;
    };
    search.run_all();
    return {shared.trees.load(), !search.truncated() && !visitor_stopped};
}

SolveResult exact_tree_stretch(const ExplicitGraph& g, const SolveBudget& budget, int jobs) {
    check_solvable(g, budget);
    if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
    const int n = g.vertex_count();
    if (n == 1) return {0, SpanningTree(1, 0, {}), 1, true};

    TreeSearch::Shared shared(budget);
    Incumbent best;
    auto lower_shared_bound = [&shared](int value) {
        int cur = shared.bound.load(std::memory_order_relaxed);
        while (value < cur &&
               !shared.bound.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
        }
    };

    bool truncated = false;
    if (jobs == 1) {
        TreeSearch search(g, shared, true);
        search.on_tree = [&](std::span<const Edge> edges, int value) {
            best.offer(value, edges);
            lower_shared_bound(value);
            return true;
        };
        search.run_all();
        truncated = search.truncated();
    } else {
        // Partition by the first branching decisions: expand the branching
        // tree breadth-first until there are enough disjoint subproblems to
        // farm out. Trees completed during expansion fold into the incumbent
        // directly (the expansion itself is sequential and deterministic).
        const auto& edges = g.edges();
        const size_t target = static_cast<size_t>(jobs) * 8;
        std::deque<FrontierTask> frontier{{{}, 0}};
        while (!frontier.empty() && frontier.size() < target &&
               !shared.stop.load(std::memory_order_relaxed)) {
            FrontierTask task = std::move(frontier.front());
            frontier.pop_front();
            ScratchDsu dsu(n);
            for (Edge e : task.chosen) dsu.unite(e.u, e.v);
            int idx = task.edge_index;
            while (dsu.components() > 1 && idx < static_cast<int>(edges.size()) &&
                   dsu.find(edges[idx].u) == dsu.find(edges[idx].v))
                ++idx;
            if (dsu.components() == 1) {
                // Already a full tree: evaluate it via a replay.
                TreeSearch probe(g, shared, true);
                probe.on_tree = [&](std::span<const Edge> tree_edges, int value) {
                    best.offer(value, tree_edges);
                    lower_shared_bound(value);
                    return true;
                };
                probe.run(task.chosen, static_cast<int>(edges.size()));
                truncated = truncated || probe.truncated();
                continue;
            }
            FrontierTask include_child{task.chosen, idx + 1};
            include_child.chosen.push_back(edges[idx]);
            frontier.push_back(std::move(include_child));
            ScratchDsu without(n);
            for (Edge e : task.chosen) without.unite(e.u, e.v);
            for (size_t i = static_cast<size_t>(idx) + 1;
                 i < edges.size() && without.components() > 1; ++i)
                without.unite(edges[i].u, edges[i].v);
            if (without.components() == 1) frontier.push_back({std::move(task.chosen), idx + 1});
        }

        std::vector<FrontierTask> tasks(std::make_move_iterator(frontier.begin()),
                                        std::make_move_iterator(frontier.end()));
        std::atomic<size_t> next{0};
        std::vector<Incumbent> worker_best(static_cast<size_t>(jobs));
        std::vector<char> worker_truncated(static_cast<size_t>(jobs), 0);
        std::vector<std::thread> workers;
        workers.reserve(static_cast<size_t>(jobs));
        for (int w = 0; w < jobs; ++w) {
            workers.emplace_back([&, w] {
                Incumbent& local = worker_best[static_cast<size_t>(w)];
                for (;;) {
                    size_t i = next.fetch_add(1, std::memory_order_relaxed);
                    if (i >= tasks.size()) break;
                    TreeSearch search(g, shared, true);
                    search.on_tree = [&](std::span<const Edge> tree_edges, int value) {
                        local.offer(value, tree_edges);
                        lower_shared_bound(value);
                        return true;
                    };
                    search.run(tasks[i].chosen, tasks[i].edge_index);
                    if (search.truncated()) worker_truncated[static_cast<size_t>(w)] = 1;
                    if (shared.stop.load(std::memory_order_relaxed)) break;
                }
            });
        }
        for (auto& t : workers) t.join();
        for (int w = 0; w < jobs; ++w) {
            const Incumbent& local = worker_best[static_cast<size_t>(w)];
            if (local.value != INT_MAX) best.offer(local.value, local.edges);
            truncated = truncated || worker_truncated[static_cast<size_t>(w)];
        }
        // A budget stop in parallel mode always counts as cut short.
        truncated = truncated || shared.stop.load();
    }

    if (best.value == INT_MAX) {
        // The deadline fired before the first tree completed. Grab the
        // lexicographically first tree so the (non-exhaustive) result still
        // carries a valid bound.
        SolveBudget one{budget.max_vertices, 1, 86400.0};
        enumerate_spanning_trees(g, one, [&](std::span<const Edge> edges) {
            SpanningTree t = build_tree(g, edges);
            best.offer(max_stretch(g, t).value, edges);
            return false;
        });
        truncated = true;
    }
    return {best.value, build_tree(g, best.edges), shared.trees.load(), !truncated};
}

KSpannerResult k_spanner_decision(const ExplicitGraph& g, int k, const SolveBudget& budget) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    check_solvable(g, budget);
    if (g.vertex_count() == 1) return {KSpannerAnswer::Yes, SpanningTree(1, 0, {}), 1};

    TreeSearch::Shared shared(budget);
    shared.bound.store(k);  // fixed prune bound: detours beyond k are useless here
    TreeSearch search(g, shared, true);
    std::optional<std::vector<Edge>> witness;
    search.on_tree = [&](std::span<const Edge> edges, int value) {
        // Pruning keeps every forced detour within k, so any completed tree
        // is a witness; the guard is belt and braces.
        if (value <= k) {
            witness.emplace(edges.begin(), edges.end());
            return false;
        }
        return true;
    };
    search.run_all();
    KSpannerResult result;
    result.trees_enumerated = shared.trees.load();
    if (witness) {
        result.answer = KSpannerAnswer::Yes;
        result.witness = build_tree(g, *witness);
    } else {
        result.answer = search.truncated() ? KSpannerAnswer::Unknown : KSpannerAnswer::No;
    }
    return result;
}

}  // namespace msst
