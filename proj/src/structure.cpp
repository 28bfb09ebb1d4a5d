#include "majority/structure.hpp"

#include <algorithm>
#include <limits>

namespace majority {

AcyclicBipartition acyclic_bipartition(const Digraph& g, const VertexOrdering& order) {
    if (order.size() != g.n())
        throw std::invalid_argument("ordering size does not match digraph");
    AcyclicBipartition parts;
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v : g.out(u)) {
            if (order.position(u) < order.position(v))
                parts.forward.push_back({u, v});
            else
                parts.backward.push_back({u, v});
        }
    return parts;
}

std::vector<std::vector<Vertex>> strong_components(const Digraph& g) {
    // Iterative Tarjan. A component is emitted when its root finishes, which
    // happens only after every component reachable from it was emitted.
    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    const std::size_t n = g.n();
    std::vector<std::size_t> index(n, unvisited), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<Vertex> stack;
    std::vector<std::pair<Vertex, std::size_t>> call;  // (vertex, next out-arc)
    std::vector<std::vector<Vertex>> components;
    std::size_t counter = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != unvisited)
            continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& [v, next] = call.back();
            auto nbrs = g.out(v);
            if (next < nbrs.size()) {
                const Vertex w = nbrs[next++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const Vertex done = v;
            call.pop_back();
            if (!call.empty())
                low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == index[done]) {
                std::vector<Vertex> component;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    component.push_back(w);
                } while (w != done);
                std::sort(component.begin(), component.end());
                components.push_back(std::move(component));
            }
        }
    }
    return components;
}

UndirectedGraph underlying_undirected(const Digraph& g) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(g.m());
    for (Vertex u = 0; u < g.n(); ++u)
        for (Vertex v : g.out(u))
            edges.emplace_back(u, v);
    return UndirectedGraph(g.n(), edges);
}

bool is_acyclic(std::size_t n, const std::vector<Arc>& arcs) {
    // Kahn's algorithm: acyclic iff every vertex gets peeled.
    std::vector<std::size_t> indegree(n, 0);
    std::vector<std::vector<Vertex>> out(n);
    for (const Arc& a : arcs) {
        out[a.tail].push_back(a.head);
        ++indegree[a.head];
    }
    std::vector<Vertex> ready;
    for (Vertex v = 0; v < n; ++v)
        if (indegree[v] == 0)
            ready.push_back(v);
    std::size_t peeled = 0;
    while (!ready.empty()) {
        const Vertex v = ready.back();
        ready.pop_back();
        ++peeled;
        for (Vertex w : out[v])
            if (--indegree[w] == 0)
                ready.push_back(w);
    }
    return peeled == n;
}

}  // namespace majority
