#include "msst/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace msst {

ProductGraph::ProductGraph(std::vector<FactorSpec> factors)
    : factors_(std::move(factors)) {
    if (factors_.empty())
        throw std::invalid_argument("product graph needs at least one factor");
    for (const auto& f : factors_)
        if (f.size < 2)
            throw std::invalid_argument("factor size must be at least 2");
    const int d = dimension();
    stride_.assign(d, 1);
    long long count = 1;
    for (int i = d - 1; i >= 0; --i) {
        stride_[i] = static_cast<int>(count);
        count *= factors_[i].size;
        if (count > 1'000'000'000LL)
            throw std::invalid_argument("product graph too large");
    }
    vertex_count_ = static_cast<int>(count);
}

bool ProductGraph::is_hamming() const {
    return std::ranges::all_of(factors_, [](const FactorSpec& f) {
        return f.kind == FactorKind::Complete;
    });
}

bool ProductGraph::is_grid() const {
    return std::ranges::all_of(factors_, [](const FactorSpec& f) {
        return f.kind == FactorKind::Path;
    });
}

void ProductGraph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count_)
        throw std::invalid_argument("vertex index out of range");
}

Coord ProductGraph::coord_of(int v) const {
    check_vertex(v);
    const int d = dimension();
    Coord c(d);
    for (int i = 0; i < d; ++i) {
        int digit = (v / stride_[i]) % factors_[i].size;
        c[i] = factors_[i].kind == FactorKind::Path ? digit + 1 : digit;
    }
    return c;
}

int ProductGraph::index_of(const Coord& c) const {
    const int d = dimension();
    if (static_cast<int>(c.size()) != d)
        throw std::invalid_argument("coordinate has wrong dimension");
    long long idx = 0;
    for (int i = 0; i < d; ++i) {
        const auto& f = factors_[i];
        int digit = f.kind == FactorKind::Path ? c[i] - 1 : c[i];
        if (digit < 0 || digit >= f.size)
            throw std::invalid_argument("coordinate entry out of range");
        idx += static_cast<long long>(digit) * stride_[i];
    }
    return static_cast<int>(idx);
}

std::vector<int> ProductGraph::neighbors(int v) const {
    check_vertex(v);
    const int d = dimension();
    std::vector<int> out;
    for (int i = 0; i < d; ++i) {
        const auto& f = factors_[i];
        int digit = (v / stride_[i]) % f.size;
        int base = v - digit * stride_[i];
        if (f.kind == FactorKind::Complete) {
            for (int x = 0; x < f.size; ++x)
                if (x != digit) out.push_back(base + x * stride_[i]);
        } else {
            if (digit > 0) out.push_back(base + (digit - 1) * stride_[i]);
            if (digit + 1 < f.size) out.push_back(base + (digit + 1) * stride_[i]);
        }
    }
    std::ranges::sort(out);
    return out;
}

bool ProductGraph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    int differing = -1;
    for (int i = 0; i < dimension(); ++i) {
        int du = (u / stride_[i]) % factors_[i].size;
        int dv = (v / stride_[i]) % factors_[i].size;
        if (du == dv) continue;
        if (differing >= 0) return false;  // differ in two coordinates
        differing = i;
        if (factors_[i].kind == FactorKind::Path && std::abs(du - dv) != 1)
            return false;
    }
    return differing >= 0;
}

int ProductGraph::degree(int v) const {
    check_vertex(v);
    int deg = 0;
    for (int i = 0; i < dimension(); ++i) {
        const auto& f = factors_[i];
        if (f.kind == FactorKind::Complete) {
            deg += f.size - 1;
        } else {
            int digit = (v / stride_[i]) % f.size;
            deg += (digit > 0) + (digit + 1 < f.size);
        }
    }
    return deg;
}

long long ProductGraph::edge_count() const {
    long long total = 0;
    for (int i = 0; i < dimension(); ++i) {
        const auto& f = factors_[i];
        long long copies = static_cast<long long>(vertex_count_) / f.size;
        long long per_factor = f.kind == FactorKind::Complete
                                   ? static_cast<long long>(f.size) * (f.size - 1) / 2
                                   : f.size - 1;
        total += copies * per_factor;
    }
    return total;
}

int ProductGraph::antipodal(int v) const {
    if (!is_hamming())
        throw std::invalid_argument("antipodal is defined on Hamming graphs only");
    check_vertex(v);
    int out = 0;
    for (int i = 0; i < dimension(); ++i) {
        int digit = (v / stride_[i]) % factors_[i].size;
        out += ((digit + 1) % factors_[i].size) * stride_[i];
    }
    return out;
}

std::vector<int> ProductGraph::boundary_path(int axis, const Coord& corner) const {
    if (!is_grid())
        throw std::invalid_argument("boundary paths are defined on grids only");
    const int d = dimension();
    if (axis < 0 || axis >= d)
        throw std::invalid_argument("boundary path axis out of range");
    if (static_cast<int>(corner.size()) != d)
        throw std::invalid_argument("corner assignment has wrong dimension");
    Coord c(d);
    for (int j = 0; j < d; ++j) {
        if (j == axis) continue;
        if (corner[j] != 1 && corner[j] != factors_[j].size)
            throw std::invalid_argument("corner must pin every other coordinate to 1 or n_j");
        c[j] = corner[j];
    }
    std::vector<int> path(factors_[axis].size);
    for (int x = 1; x <= factors_[axis].size; ++x) {
        c[axis] = x;
        path[x - 1] = index_of(c);
    }
    return path;
}

Coord antipodal_corner(const ProductGraph& g, int axis, const Coord& corner) {
    if (axis < 0 || axis >= g.dimension())
        throw std::invalid_argument("boundary path axis out of range");
    Coord flipped = corner;
    for (int j = 0; j < g.dimension(); ++j) {
        if (j == axis) continue;
        int n = g.factors()[j].size;
        flipped[j] = corner[j] == 1 ? n : 1;
    }
    return flipped;
}

ExplicitGraph::ExplicitGraph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    adj_.resize(n);
    edges_.reserve(edges.size());
    for (Edge e : edges) {
        if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        edges_.push_back(canonical_edge(e.u, e.v));
    }
    std::ranges::sort(edges_);
    if (std::ranges::adjacent_find(edges_) != edges_.end())
        throw std::invalid_argument("duplicate edge");
    for (Edge e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) std::ranges::sort(nb);
}

const std::vector<int>& ExplicitGraph::neighbors(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
    return adj_[v];
}

bool ExplicitGraph::adjacent(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("vertex index out of range");
    return std::ranges::binary_search(adj_[u], v);
}

bool ExplicitGraph::connected() const {
    std::vector<char> seen(n_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == n_;
}

std::vector<FactorSpec> parse_product_spec(const std::string& spec) {
    std::vector<FactorSpec> factors;
    size_t pos = 0;
    while (pos < spec.size()) {
        char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(spec[pos])));
        if (kind != 'K' && kind != 'P')
            throw std::invalid_argument("bad factor spec '" + spec + "': expected K<int> or P<int>");
        ++pos;
        size_t start = pos;
        while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
        if (start == pos)
            throw std::invalid_argument("bad factor spec '" + spec + "': missing factor size");
        int n = std::stoi(spec.substr(start, pos - start));
        factors.push_back({kind == 'K' ? FactorKind::Complete : FactorKind::Path, n});
        if (pos < spec.size()) {
            if (spec[pos] != 'x' && spec[pos] != 'X')
                throw std::invalid_argument("bad factor spec '" + spec + "': factors separated by 'x'");
            ++pos;
            if (pos == spec.size())
                throw std::invalid_argument("bad factor spec '" + spec + "': trailing 'x'");
        }
    }
    if (factors.empty())
        throw std::invalid_argument("empty factor spec");
    return factors;
}

std::string format_product_spec(const std::vector<FactorSpec>& factors) {
    std::ostringstream out;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) out << 'x';
        out << (factors[i].kind == FactorKind::Complete ? 'K' : 'P') << factors[i].size;
    }
    return out.str();
}

std::string format_coord(const Coord& c) {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) out << ',';
        out << c[i];
    }
    out << ')';
    return out.str();
}

}  // namespace msst
