#pragma once

#include <vector>

#include "pinet/basis.hpp"
#include "pinet/graph.hpp"

namespace pinet {

class TopologicalOrder {
 public:
  explicit TopologicalOrder(std::vector<VertexId> order);

  std::size_t size() const { return order_.size(); }
  VertexId vertex_at(std::size_t position) const { return order_[position]; }
  std::size_t position(VertexId v) const { return position_[v]; }
  std::span<const VertexId> order() const { return order_; }

  bool is_valid_for(const DirectedGraph& g) const;

 private:
  std::vector<VertexId> order_;
  std::vector<std::size_t> position_;
};

// Kahn's algorithm, smallest ready id first. Throws CycleDetected.
TopologicalOrder topological_order(const DirectedGraph& dag);

bool is_acyclic(const DirectedGraph& g);

// Reverse-BFS reachability: marks every w with a (possibly empty) w->target path.
template <Adjacency G>
std::vector<bool> reaches(const G& g, VertexId target) {
  const auto dist = bfs_distances(g, target, /*forward=*/false);
  std::vector<bool> out(dist.size());
  for (std::size_t i = 0; i < dist.size(); ++i) out[i] = dist[i] != kUnreachable;
  return out;
}

// Vertices reaching both u and v in g_cur, keeping only those that reach no
// other candidate. Ascending id order.
template <Adjacency G>
std::vector<VertexId> candidate_frontier(const G& g_cur, VertexId u, VertexId v) {
  const auto to_u = reaches(g_cur, u);
  const auto to_v = reaches(g_cur, v);
  std::vector<VertexId> candidates;
  std::vector<bool> is_candidate(g_cur.vertex_count(), false);
  for (VertexId w = 0; w < g_cur.vertex_count(); ++w) {
    if (to_u[w] && to_v[w]) {
      candidates.push_back(w);
      is_candidate[w] = true;
    }
  }
  std::vector<VertexId> frontier;
  std::vector<bool> seen(g_cur.vertex_count());
  std::vector<VertexId> queue;
  for (VertexId w : candidates) {
    std::fill(seen.begin(), seen.end(), false);
    queue.assign({w});
    seen[w] = true;
    bool redundant = false;
    for (std::size_t head = 0; head < queue.size() && !redundant; ++head) {
      for (VertexId x : g_cur.out(queue[head])) {
        if (seen[x]) continue;
        if (is_candidate[x]) {
          redundant = true;
          break;
        }
        seen[x] = true;
        queue.push_back(x);
      }
    }
    if (!redundant) frontier.push_back(w);
  }
  return frontier;
}

// Edge-insertion basis for a DAG. Edges are inserted by (position(head),
// position(tail)); each insertion of (u,v) contributes one pair
// (w->v, w->u ~ uv) per frontier vertex w, both legs shortest in the
// graph built so far.
Basis dag_basis(const DirectedGraph& dag, const TopologicalOrder& order);
Basis dag_basis(const DirectedGraph& dag);

}  // namespace pinet
