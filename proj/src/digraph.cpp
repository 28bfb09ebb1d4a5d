#include "majority/digraph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace majority {

Digraph::Digraph(std::size_t n, std::vector<Arc> arcs) {
    if (n > std::numeric_limits<Vertex>::max())
        throw GraphError("too many vertices");
    for (const Arc& a : arcs) {
        if (a.tail >= n || a.head >= n)
            throw GraphError("arc " + std::to_string(a.tail) + " " + std::to_string(a.head) +
                             " out of range for " + std::to_string(n) + " vertices");
        if (a.tail == a.head)
            throw GraphError("self-loop at vertex " + std::to_string(a.tail));
    }
    std::sort(arcs.begin(), arcs.end());
    auto dup = std::adjacent_find(arcs.begin(), arcs.end());
    if (dup != arcs.end())
        throw GraphError("duplicate arc " + std::to_string(dup->tail) + " " + std::to_string(dup->head));

    out_offsets_.assign(n + 1, 0);
    in_offsets_.assign(n + 1, 0);
    for (const Arc& a : arcs) {
        ++out_offsets_[a.tail + 1];
        ++in_offsets_[a.head + 1];
    }
    std::partial_sum(out_offsets_.begin(), out_offsets_.end(), out_offsets_.begin());
    std::partial_sum(in_offsets_.begin(), in_offsets_.end(), in_offsets_.begin());

    out_targets_.resize(arcs.size());
    in_sources_.resize(arcs.size());
    // arcs are sorted by (tail, head): out lists come out sorted, and in
    // lists are filled in increasing tail order so they are sorted too.
    std::vector<std::size_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        out_targets_[i] = arcs[i].head;
        in_sources_[in_fill[arcs[i].head]++] = arcs[i].tail;
    }

    if (n > 0) {
        min_out_ = std::numeric_limits<std::size_t>::max();
        for (Vertex v = 0; v < n; ++v) {
            min_out_ = std::min(min_out_, out_degree(v));
            max_in_ = std::max(max_in_, in_degree(v));
        }
    }
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
    auto nbrs = out(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> result;
    result.reserve(m());
    for (Vertex u = 0; u < n(); ++u)
        for (Vertex v : out(u))
            result.push_back({u, v});
    return result;
}

bool Digraph::is_eulerian() const {
    for (Vertex v = 0; v < n(); ++v)
        if (in_degree(v) != out_degree(v))
            return false;
    return true;
}

UndirectedGraph::UndirectedGraph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : adj_(n) {
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw GraphError("edge out of range");
        if (u == v)
            throw GraphError("self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        edges_ += list.size();
    }
    edges_ /= 2;
}

VertexOrdering::VertexOrdering(std::vector<Vertex> order)
    : order_(std::move(order)), position_(order_.size(), std::numeric_limits<std::size_t>::max()) {
    for (std::size_t i = 0; i < order_.size(); ++i) {
        const Vertex v = order_[i];
        if (v >= order_.size() || position_[v] != std::numeric_limits<std::size_t>::max())
            throw std::invalid_argument("vertex ordering is not a permutation");
        position_[v] = i;
    }
}

VertexOrdering VertexOrdering::identity(std::size_t n) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    return VertexOrdering(std::move(order));
}

}  // namespace majority
