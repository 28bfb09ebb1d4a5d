#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace majority {

using Vertex = std::uint32_t;

struct Arc {
    Vertex tail;
    Vertex head;

    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Rejected digraph construction: self-loop, duplicate arc, bad index.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Simple directed graph on vertices 0..n-1, immutable after construction.
///
/// Out- and in-adjacency are stored in CSR form with each list sorted, so
/// has_arc is a binary search. Self-loops and parallel arcs are rejected;
/// digons (u->v and v->u) are allowed.
class Digraph {
public:
    Digraph() = default;

    /// Builds from an arc list in any order. Throws GraphError on
    /// self-loops, duplicates or out-of-range endpoints.
    Digraph(std::size_t n, std::vector<Arc> arcs);

    std::size_t n() const { return out_offsets_.empty() ? 0 : out_offsets_.size() - 1; }
    std::size_t m() const { return out_targets_.size(); }

    std::span<const Vertex> out(Vertex v) const {
        return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
    }
    std::span<const Vertex> in(Vertex v) const {
        return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
    }

    std::size_t out_degree(Vertex v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
    std::size_t in_degree(Vertex v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

    /// delta: minimum out-degree (0 for the empty digraph).
    std::size_t min_out_degree() const { return min_out_; }
    /// Delta^-: maximum in-degree.
    std::size_t max_in_degree() const { return max_in_; }

    bool has_arc(Vertex u, Vertex v) const;

    /// Arcs sorted by (tail, head).
    std::vector<Arc> arcs() const;

    /// True iff in-degree equals out-degree at every vertex.
    bool is_eulerian() const;

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.out_offsets_ == b.out_offsets_ && a.out_targets_ == b.out_targets_;
    }

private:
    std::vector<std::size_t> out_offsets_;
    std::vector<Vertex> out_targets_;
    std::vector<std::size_t> in_offsets_;
    std::vector<Vertex> in_sources_;
    std::size_t min_out_ = 0;
    std::size_t max_in_ = 0;
};

/// Simple undirected graph with sorted symmetric adjacency lists.
class UndirectedGraph {
public:
    UndirectedGraph() = default;

    /// Edges are unordered pairs; duplicates and both orientations collapse
    /// to one edge. Self-loops throw GraphError.
    UndirectedGraph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    std::size_t n() const { return adj_.size(); }
    std::size_t edge_count() const { return edges_; }
    const std::vector<Vertex>& neighbours(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edges_ = 0;
};

/// A permutation of 0..n-1. position(v) is the index of v in the order.
class VertexOrdering {
public:
    /// Throws std::invalid_argument unless order is a bijection on 0..n-1.
    explicit VertexOrdering(std::vector<Vertex> order);

    static VertexOrdering identity(std::size_t n);

    std::size_t size() const { return order_.size(); }
    Vertex operator[](std::size_t i) const { return order_[i]; }
    std::size_t position(Vertex v) const { return position_[v]; }
    const std::vector<Vertex>& order() const { return order_; }

private:
    std::vector<Vertex> order_;
    std::vector<std::size_t> position_;
};

}  // namespace majority
