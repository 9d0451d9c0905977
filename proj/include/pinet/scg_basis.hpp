#pragma once

#include <optional>
#include <vector>

#include "pinet/basis.hpp"
#include "pinet/graph.hpp"

namespace pinet {

enum class EdgeClass { tree, back, forward, cross };

std::string_view to_string(EdgeClass c);

// DFS from one root over out-neighbours in ascending id order. Timestamps
// share one clock that ticks on every discovery and every finish.
struct DfsForest {
  VertexId root = 0;
  std::vector<std::optional<VertexId>> parent;
  std::vector<std::size_t> discovery;
  std::vector<std::size_t> finish;
  std::vector<EdgeClass> edge_class;  // indexed like g.edges()
  std::vector<std::size_t> visit_order;  // edge indices in traversal order

  // Tree path ancestor -> descendant.
  Path tree_path(VertexId ancestor, VertexId descendant) const;
};

// Throws NotStronglyConnected when some vertex is not reached from root.
DfsForest dfs_classify(const DirectedGraph& g, VertexId root);

struct ScgBasis {
  Basis basis;              // back-edge cycle pairs, then the acyclic part's pairs
  DirectedGraph acyclic;    // tree + forward + cross edges, same vertex set
  DfsForest forest;
};

// Throws NotStronglyConnected unless g is strongly connected.
ScgBasis scg_basis(const DirectedGraph& g, VertexId root = 0);

}  // namespace pinet
