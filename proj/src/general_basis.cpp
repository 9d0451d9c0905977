#include "pinet/general_basis.hpp"

#include <numeric>
#include <tuple>

#include "pinet/dag_basis.hpp"
#include "pinet/scg_basis.hpp"

namespace pinet {

namespace {

// Induced subgraph of every component with local ids = rank inside the
// (ascending) component vertex list, so shortest-path tie-breaking inside a
// component agrees with the global ids.
class ComponentGraphs {
 public:
  ComponentGraphs(const DirectedGraph& g, const SccDecomposition& scc) : scc_(scc) {
    local_.resize(g.vertex_count());
    for (const auto& comp : scc.components) {
      for (std::uint32_t k = 0; k < comp.size(); ++k) local_[comp[k]] = k;
    }
    std::vector<std::vector<Edge>> edges(scc.size());
    for (const Edge& e : g.edges()) {
      const ComponentId c = scc.component_of[e.tail];
      if (c == scc.component_of[e.head]) edges[c].push_back({local_[e.tail], local_[e.head]});
    }
    graphs_.reserve(scc.size());
    for (ComponentId c = 0; c < scc.size(); ++c) {
      std::vector<std::string> labels;
      for (VertexId v : scc.components[c]) labels.push_back(g.label(v));
      graphs_.emplace_back(std::move(labels), edges[c]);
    }
  }

  const DirectedGraph& graph(ComponentId c) const { return graphs_[c]; }
  VertexId local(VertexId v) const { return local_[v]; }
  std::span<const VertexId> globals(ComponentId c) const { return scc_.components[c]; }

  Path shortest_within(VertexId from, VertexId to) const {
    const ComponentId c = scc_.component_of[from];
    auto local_path = shortest_path(graphs_[c], local_[from], local_[to]);
    std::vector<VertexId> seq;
    for (VertexId v : local_path->vertices()) seq.push_back(scc_.components[c][v]);
    return Path(std::move(seq));
  }

  std::vector<std::size_t> hops_from(VertexId from) const {
    const ComponentId c = scc_.component_of[from];
    return bfs_distances(graphs_[c], local_[from], /*forward=*/true);
  }

 private:
  const SccDecomposition& scc_;
  std::vector<VertexId> local_;
  std::vector<DirectedGraph> graphs_;
};

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

void check_cross_edges(const SccDecomposition& scc, ComponentId i, ComponentId j,
                       std::span<const Edge> cross) {
  if (cross.empty()) throw Error(ErrorKind::NotCrossEdges, "cross-edge set is empty");
  if (i == j) throw Error(ErrorKind::NotCrossEdges, "cross edges need two distinct components");
  for (const Edge& e : cross) {
    if (e.tail >= scc.component_of.size() || e.head >= scc.component_of.size() ||
        scc.component_of[e.tail] != i || scc.component_of[e.head] != j) {
      throw Error(ErrorKind::NotCrossEdges, "edge does not run between the given components");
    }
  }
}

CrossEdgeTree build_tree(const ComponentGraphs& comps, std::span<const Edge> cross) {
  CrossEdgeTree tree;
  tree.nodes.assign(cross.begin(), cross.end());
  const std::size_t r = cross.size();
  std::vector<std::vector<std::size_t>> tail_hops(r), head_hops(r);
  for (std::size_t a = 0; a < r; ++a) {
    tail_hops[a] = comps.hops_from(cross[a].tail);
    head_hops[a] = comps.hops_from(cross[a].head);
  }
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> candidates;
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a + 1; b < r; ++b) {
      const std::size_t w = tail_hops[a][comps.local(cross[b].tail)] +
                            head_hops[a][comps.local(cross[b].head)];
      candidates.emplace_back(w, a, b);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  DisjointSets sets(r);
  for (const auto& [w, a, b] : candidates) {
    if (sets.unite(a, b)) {
      tree.tree_edges.emplace_back(a, b);
      tree.weights.push_back(w);
    }
  }
  return tree;
}

Basis tree_pairs(const ComponentGraphs& comps, const CrossEdgeTree& tree) {
  Basis basis;
  for (const auto& [a, b] : tree.tree_edges) {
    const Edge& ea = tree.nodes[a];
    const Edge& eb = tree.nodes[b];
    Path via_tail = concat(comps.shortest_within(ea.tail, eb.tail), Path({eb.tail, eb.head}));
    Path via_head = concat(Path({ea.tail, ea.head}), comps.shortest_within(ea.head, eb.head));
    basis.add({std::move(via_tail), std::move(via_head)}, Provenance::cross_edge);
  }
  return basis;
}

}  // namespace

CrossEdgeTree cross_edge_tree(const DirectedGraph& g, const SccDecomposition& scc,
                              ComponentId i, ComponentId j, std::span<const Edge> cross) {
  check_cross_edges(scc, i, j, cross);
  return build_tree(ComponentGraphs(g, scc), cross);
}

Basis cross_edge_pairs(const DirectedGraph& g, const SccDecomposition& scc, ComponentId i,
                       ComponentId j, std::span<const Edge> cross) {
  check_cross_edges(scc, i, j, cross);
  const ComponentGraphs comps(g, scc);
  return tree_pairs(comps, build_tree(comps, cross));
}

Basis path_invariance_basis(const DirectedGraph& g, Execution exec) {
  Basis result;
  if (g.vertex_count() == 0) return result;

  const SccDecomposition scc = tarjan_scc(g);
  const ContractedDag contracted = contract_graph(g, scc);
  const ComponentGraphs comps(g, scc);
  const std::size_t k = scc.size();

  // Contracted DAG, relabelled so that component ids compare like their
  // representatives; shortest-path ties then break exactly as they would on g.
  std::vector<ComponentId> by_rep(k);
  std::iota(by_rep.begin(), by_rep.end(), 0);
  std::sort(by_rep.begin(), by_rep.end(), [&](ComponentId a, ComponentId b) {
    return scc.representative[a] < scc.representative[b];
  });
  std::vector<ComponentId> rank(k);
  for (ComponentId r = 0; r < k; ++r) rank[by_rep[r]] = r;
  std::vector<Edge> ranked_edges;
  for (const Edge& e : contracted.dag.edges()) ranked_edges.push_back({rank[e.tail], rank[e.head]});
  const Basis dag_pairs = dag_basis(DirectedGraph(k, ranked_edges)).relabeled(by_rep);

  // Each contracted edge (a, b) becomes rep(a) -> u -> v -> rep(b) through the
  // lexicographically smallest cross edge (u, v).
  std::map<std::pair<ComponentId, ComponentId>, Path> connector;
  for (const auto& [ij, cross] : contracted.cross_edges) {
    const Edge chosen = *std::min_element(cross.begin(), cross.end());
    Path seg = concat(comps.shortest_within(scc.representative[ij.first], chosen.tail),
                      Path({chosen.tail, chosen.head}));
    connector.emplace(ij, concat(seg, comps.shortest_within(chosen.head,
                                                            scc.representative[ij.second])));
  }
  auto lift = [&](const Path& p) {
    Path out(scc.representative[p.start()]);
    for (std::size_t t = 0; t < p.length(); ++t) out = concat(out, connector.at({p[t], p[t + 1]}));
    return out;
  };
  for (const auto& entry : dag_pairs) {
    result.add({lift(entry.pair.p), lift(entry.pair.q)}, Provenance::lifted);
  }

  std::vector<Basis> per_component(k);
  for_each_index(exec, k, [&](std::size_t c) {
    if (comps.graph(static_cast<ComponentId>(c)).edge_count() == 0) return;
    per_component[c] = scg_basis(comps.graph(static_cast<ComponentId>(c)), 0)
                           .basis.relabeled(comps.globals(static_cast<ComponentId>(c)));
  });
  for (const auto& b : per_component) result.append(b);

  std::vector<std::pair<ComponentId, ComponentId>> keys;
  for (const auto& [ij, cross] : contracted.cross_edges) keys.push_back(ij);
  std::vector<Basis> per_pair(keys.size());
  for_each_index(exec, keys.size(), [&](std::size_t t) {
    const auto& cross = contracted.cross_edges.at(keys[t]);
    if (cross.size() > 1) per_pair[t] = tree_pairs(comps, build_tree(comps, cross));
  });
  for (const auto& b : per_pair) result.append(b);
  return result;
}

}  // namespace pinet
