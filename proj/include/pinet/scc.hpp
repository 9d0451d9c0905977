#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pinet/graph.hpp"

namespace pinet {

using ComponentId = std::uint32_t;

// Components are indexed in a topological order of the contraction; among
// components that are simultaneously ready, the one with the smaller
// representative comes first.
struct SccDecomposition {
  std::vector<ComponentId> component_of;
  std::vector<std::vector<VertexId>> components;  // each sorted ascending
  std::vector<VertexId> representative;           // smallest id in the component

  std::size_t size() const { return components.size(); }
};

SccDecomposition tarjan_scc(const DirectedGraph& g);

struct ContractedDag {
  DirectedGraph dag;  // vertex i = component i
  std::map<std::pair<ComponentId, ComponentId>, std::vector<Edge>> cross_edges;

  std::span<const Edge> cross(ComponentId i, ComponentId j) const;
};

ContractedDag contract_graph(const DirectedGraph& g, const SccDecomposition& scc);

// Subgraph induced by `vertices`; local id k is vertices[k], labels carried over.
DirectedGraph induced_subgraph(const DirectedGraph& g, std::span<const VertexId> vertices);

bool is_strongly_connected(const DirectedGraph& g);

}  // namespace pinet
