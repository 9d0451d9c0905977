#include "pinet/scg_basis.hpp"

#include "pinet/dag_basis.hpp"
#include "pinet/scc.hpp"

namespace pinet {

std::string_view to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::tree: return "tree";
    case EdgeClass::back: return "back";
    case EdgeClass::forward: return "forward";
    case EdgeClass::cross: return "cross";
  }
  return "tree";
}

Path DfsForest::tree_path(VertexId ancestor, VertexId descendant) const {
  std::vector<VertexId> seq{descendant};
  VertexId cur = descendant;
  while (cur != ancestor) {
    if (!parent[cur]) throw Error(ErrorKind::InvalidArgument, "vertex is not a tree descendant");
    cur = *parent[cur];
    seq.push_back(cur);
  }
  std::reverse(seq.begin(), seq.end());
  return Path(std::move(seq));
}

DfsForest dfs_classify(const DirectedGraph& g, VertexId root) {
  const std::size_t n = g.vertex_count();
  if (root >= n) throw Error(ErrorKind::InvalidArgument, "root out of range");

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  DfsForest forest;
  forest.root = root;
  forest.parent.assign(n, std::nullopt);
  forest.discovery.assign(n, kNone);
  forest.finish.assign(n, kNone);
  forest.edge_class.assign(g.edge_count(), EdgeClass::tree);

  std::size_t clock = 0;
  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> stack{{root, 0}};
  forest.discovery[root] = clock++;
  while (!stack.empty()) {
    Frame& frame = stack.back();
    const VertexId u = frame.v;
    const auto nb = g.out(u);
    if (frame.next == nb.size()) {
      forest.finish[u] = clock++;
      stack.pop_back();
      continue;
    }
    const std::size_t k = frame.next++;
    const VertexId v = nb[k];
    const std::size_t e = g.out_edge_ids(u)[k];
    forest.visit_order.push_back(e);
    if (forest.discovery[v] == kNone) {
      forest.edge_class[e] = EdgeClass::tree;
      forest.parent[v] = u;
      forest.discovery[v] = clock++;
      stack.push_back({v, 0});
    } else if (forest.finish[v] == kNone) {
      forest.edge_class[e] = EdgeClass::back;  // v is on the stack: an ancestor
    } else if (forest.discovery[u] < forest.discovery[v]) {
      forest.edge_class[e] = EdgeClass::forward;
    } else {
      forest.edge_class[e] = EdgeClass::cross;
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (forest.discovery[v] == kNone) {
      throw Error(ErrorKind::NotStronglyConnected,
                  "vertex '" + g.label(v) + "' is unreachable from the DFS root");
    }
  }
  return forest;
}

ScgBasis scg_basis(const DirectedGraph& g, VertexId root) {
  if (!is_strongly_connected(g)) {
    throw Error(ErrorKind::NotStronglyConnected, "graph is not strongly connected");
  }
  ScgBasis out{Basis{}, DirectedGraph{}, dfs_classify(g, root)};
  const DfsForest& forest = out.forest;

  std::vector<Edge> acyclic_edges;
  for (std::size_t e : forest.visit_order) {
    const Edge& edge = g.edge(e);
    if (forest.edge_class[e] == EdgeClass::back) {
      Path cycle = concat(forest.tree_path(edge.head, edge.tail), Path({edge.tail, edge.head}));
      out.basis.add({std::move(cycle), Path::empty(edge.head)}, Provenance::scg_cycle);
    } else {
      acyclic_edges.push_back(edge);
    }
  }
  std::vector<std::string> labels(g.labels().begin(), g.labels().end());
  out.acyclic = DirectedGraph(std::move(labels), acyclic_edges);
  out.basis.append(dag_basis(out.acyclic));
  return out;
}

}  // namespace pinet
