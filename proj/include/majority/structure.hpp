#pragma once

#include <vector>

#include "majority/digraph.hpp"

namespace majority {

/// Arcs split by a vertex ordering: forward arcs go from an earlier to a
/// later vertex, backward arcs the other way. Each part is acyclic.
struct AcyclicBipartition {
    std::vector<Arc> forward;
    std::vector<Arc> backward;
};

AcyclicBipartition acyclic_bipartition(const Digraph& g, const VertexOrdering& order);

/// Strongly connected components, emitted in reverse topological order of
/// the condensation (sink components first). Each class is sorted.
std::vector<std::vector<Vertex>> strong_components(const Digraph& g);

/// u ~ v iff u->v or v->u; digons collapse to a single edge.
UndirectedGraph underlying_undirected(const Digraph& g);

/// True iff the arc set on n vertices contains no directed cycle.
bool is_acyclic(std::size_t n, const std::vector<Arc>& arcs);

}  // namespace majority
