#pragma once

#include <utility>
#include <vector>

#include "pinet/basis.hpp"
#include "pinet/parallel.hpp"
#include "pinet/scc.hpp"

namespace pinet {

// Minimum spanning tree over the cross edges from component i to component j.
// Node k is cross[k]; joining nodes a < b costs the hop length of the shortest
// tail(a)->tail(b) path inside component i plus head(a)->head(b) inside j.
struct CrossEdgeTree {
  std::vector<Edge> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;
  std::vector<std::size_t> weights;  // aligned with tree_edges
};

CrossEdgeTree cross_edge_tree(const DirectedGraph& g, const SccDecomposition& scc,
                              ComponentId i, ComponentId j, std::span<const Edge> cross);

// One pair per tree edge (a, b):  tail(a)->tail(b) ~ b   versus   a ~ head(a)->head(b).
// Throws NotCrossEdges if `cross` is empty or some edge does not run i -> j.
Basis cross_edge_pairs(const DirectedGraph& g, const SccDecomposition& scc, ComponentId i,
                       ComponentId j, std::span<const Edge> cross);

// Basis for an arbitrary directed graph: the contracted DAG's basis lifted
// onto g, each strongly connected component's own basis, and the cross-edge
// tree pairs. Per-component work may run concurrently; the output order is
// fixed (lifted, then components by index, then (i, j) ascending).
Basis path_invariance_basis(const DirectedGraph& g, Execution exec = Execution::parallel);

}  // namespace pinet
