#include "pinet/scc.hpp"

#include <functional>
#include <queue>
#include <set>

namespace pinet {

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

// Iterative Tarjan; components come out in reverse topological order.
std::vector<std::vector<VertexId>> tarjan_components(const DirectedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  std::vector<std::vector<VertexId>> found;
  std::uint32_t counter = 0;

  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> call;

  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& frame = call.back();
      const auto nb = g.out(frame.v);
      if (frame.next < nb.size()) {
        const VertexId w = nb[frame.next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[frame.v] = std::min(low[frame.v], index[w]);
        }
        continue;
      }
      const VertexId v = frame.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<VertexId> comp;
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        found.push_back(std::move(comp));
      }
    }
  }
  return found;
}

}  // namespace

SccDecomposition tarjan_scc(const DirectedGraph& g) {
  auto raw = tarjan_components(g);
  const std::size_t k = raw.size();

  std::vector<ComponentId> raw_of(g.vertex_count());
  for (ComponentId c = 0; c < k; ++c) {
    for (VertexId v : raw[c]) raw_of[v] = c;
  }

  // Kahn over the condensation, smallest representative first.
  std::vector<std::vector<ComponentId>> succ(k);
  std::vector<std::size_t> indegree(k, 0);
  {
    std::set<std::pair<ComponentId, ComponentId>> seen;
    for (const Edge& e : g.edges()) {
      const ComponentId a = raw_of[e.tail], b = raw_of[e.head];
      if (a != b && seen.emplace(a, b).second) {
        succ[a].push_back(b);
        ++indegree[b];
      }
    }
  }
  using Item = std::pair<VertexId, ComponentId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
  for (ComponentId c = 0; c < k; ++c) {
    if (indegree[c] == 0) ready.emplace(raw[c].front(), c);
  }

  SccDecomposition out;
  out.component_of.resize(g.vertex_count());
  while (!ready.empty()) {
    const ComponentId c = ready.top().second;
    ready.pop();
    const auto idx = static_cast<ComponentId>(out.components.size());
    for (VertexId v : raw[c]) out.component_of[v] = idx;
    out.representative.push_back(raw[c].front());
    out.components.push_back(std::move(raw[c]));
    for (ComponentId d : succ[c]) {
      if (--indegree[d] == 0) ready.emplace(raw[d].front(), d);
    }
  }
  return out;
}

std::span<const Edge> ContractedDag::cross(ComponentId i, ComponentId j) const {
  const auto it = cross_edges.find({i, j});
  if (it == cross_edges.end()) return {};
  return it->second;
}

ContractedDag contract_graph(const DirectedGraph& g, const SccDecomposition& scc) {
  ContractedDag out;
  std::vector<Edge> dag_edges;
  for (const Edge& e : g.edges()) {
    const ComponentId a = scc.component_of[e.tail], b = scc.component_of[e.head];
    if (a == b) continue;
    auto& bucket = out.cross_edges[{a, b}];
    if (bucket.empty()) dag_edges.push_back({a, b});
    bucket.push_back(e);
  }
  std::vector<std::string> labels;
  labels.reserve(scc.size());
  for (VertexId rep : scc.representative) labels.push_back(g.label(rep));
  out.dag = DirectedGraph(std::move(labels), dag_edges);
  return out;
}

DirectedGraph induced_subgraph(const DirectedGraph& g, std::span<const VertexId> vertices) {
  std::vector<std::uint32_t> local(g.vertex_count(), kUnvisited);
  std::vector<std::string> labels;
  for (std::uint32_t k = 0; k < vertices.size(); ++k) {
    local[vertices[k]] = k;
    labels.push_back(g.label(vertices[k]));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (local[e.tail] != kUnvisited && local[e.head] != kUnvisited) {
      edges.push_back({local[e.tail], local[e.head]});
    }
  }
  return DirectedGraph(std::move(labels), edges);
}

bool is_strongly_connected(const DirectedGraph& g) {
  if (g.vertex_count() == 0) return false;
  const auto fwd = bfs_distances(g, 0, true);
  const auto bwd = bfs_distances(g, 0, false);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (fwd[v] == kUnreachable || bwd[v] == kUnreachable) return false;
  }
  return true;
}

}  // namespace pinet
