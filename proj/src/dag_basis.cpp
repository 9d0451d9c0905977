#include "pinet/dag_basis.hpp"

#include <functional>
#include <queue>

namespace pinet {

TopologicalOrder::TopologicalOrder(std::vector<VertexId> order)
    : order_(std::move(order)), position_(order_.size()) {
  std::vector<bool> seen(order_.size(), false);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (order_[i] >= order_.size() || seen[order_[i]]) {
      throw Error(ErrorKind::InvalidArgument, "topological order is not a permutation");
    }
    seen[order_[i]] = true;
    position_[order_[i]] = i;
  }
}

bool TopologicalOrder::is_valid_for(const DirectedGraph& g) const {
  if (size() != g.vertex_count()) return false;
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return position(e.tail) < position(e.head); });
}

TopologicalOrder topological_order(const DirectedGraph& dag) {
  const std::size_t n = dag.vertex_count();
  std::vector<std::size_t> indegree(n);
  for (VertexId v = 0; v < n; ++v) indegree[v] = dag.in(v).size();
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<VertexId> order;
  order.reserve(n);
  while (!ready.empty()) {
    const VertexId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (VertexId w : dag.out(v)) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (order.size() != n) throw Error(ErrorKind::CycleDetected, "graph contains a directed cycle");
  return TopologicalOrder(std::move(order));
}

bool is_acyclic(const DirectedGraph& g) {
  try {
    topological_order(g);
    return true;
  } catch (const Error&) {
    return false;
  }
}

Basis dag_basis(const DirectedGraph& dag, const TopologicalOrder& order) {
  if (!order.is_valid_for(dag)) {
    if (!is_acyclic(dag)) throw Error(ErrorKind::CycleDetected, "graph contains a directed cycle");
    throw Error(ErrorKind::InvalidArgument, "order is not a topological order of the graph");
  }
  std::vector<Edge> schedule(dag.edges().begin(), dag.edges().end());
  std::sort(schedule.begin(), schedule.end(), [&](const Edge& a, const Edge& b) {
    return std::pair(order.position(a.head), order.position(a.tail)) <
           std::pair(order.position(b.head), order.position(b.tail));
  });

  Basis basis;
  GrowingGraph current(dag.vertex_count());
  for (const Edge& e : schedule) {
    for (VertexId w : candidate_frontier(current, e.tail, e.head)) {
      auto to_head = shortest_path(current, w, e.head);
      auto to_tail = shortest_path(current, w, e.tail);
      basis.add({std::move(*to_head), concat(*to_tail, Path({e.tail, e.head}))}, Provenance::dag);
    }
    current.add_edge(e.tail, e.head);
  }
  return basis;
}

Basis dag_basis(const DirectedGraph& dag) { return dag_basis(dag, topological_order(dag)); }

}  // namespace pinet
