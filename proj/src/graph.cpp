#include "pinet/graph.hpp"

#include <set>

namespace pinet {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SelfLoopInput: return "SelfLoopInput";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::EndpointMismatch: return "EndpointMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorKind::NotCrossEdges: return "NotCrossEdges";
    case ErrorKind::MissingEdgeMatrix: return "MissingEdgeMatrix";
    case ErrorKind::Divergence: return "Divergence";
    case ErrorKind::GraphSamplingFailed: return "GraphSamplingFailed";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

}  // namespace

DirectedGraph::DirectedGraph(std::size_t vertex_count, std::span<const Edge> edges)
    : DirectedGraph(numeric_labels(vertex_count), edges) {}

DirectedGraph::DirectedGraph(std::vector<std::string> labels, std::span<const Edge> edges)
    : labels_(std::move(labels)) {
  for (VertexId i = 0; i < labels_.size(); ++i) {
    if (!label_index_.emplace(labels_[i], i).second) {
      throw Error(ErrorKind::InvalidArgument, "duplicate vertex label '" + labels_[i] + "'");
    }
  }
  std::set<Edge> seen;
  for (const Edge& e : edges) {
    if (e.tail >= labels_.size() || e.head >= labels_.size()) {
      throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
    }
    if (e.tail == e.head) {
      throw Error(ErrorKind::SelfLoopInput, "explicit self-loop at '" + labels_[e.tail] + "'");
    }
    if (seen.insert(e).second) edges_.push_back(e);
  }
  index();
}

void DirectedGraph::index() {
  const std::size_t n = labels_.size();
  std::vector<std::vector<std::pair<VertexId, std::uint32_t>>> out(n);
  std::vector<std::vector<VertexId>> in(n);
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    out[edges_[i].tail].emplace_back(edges_[i].head, i);
    in[edges_[i].head].push_back(edges_[i].tail);
  }
  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(out[v].begin(), out[v].end());
    std::sort(in[v].begin(), in[v].end());
    out_offsets_[v + 1] = out_offsets_[v] + out[v].size();
    in_offsets_[v + 1] = in_offsets_[v] + in[v].size();
    for (const auto& [head, id] : out[v]) {
      out_targets_.push_back(head);
      out_edge_ids_.push_back(id);
    }
    in_sources_.insert(in_sources_.end(), in[v].begin(), in[v].end());
  }
}

std::optional<std::size_t> DirectedGraph::edge_index(VertexId u, VertexId v) const {
  if (u >= vertex_count() || v >= vertex_count()) return std::nullopt;
  const auto nb = out(u);
  const auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return out_edge_ids(u)[static_cast<std::size_t>(it - nb.begin())];
}

std::optional<VertexId> DirectedGraph::find_vertex(std::string_view label) const {
  const auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

DirectedGraph build_graph(std::span<const std::pair<std::string, std::string>> edge_list) {
  if (edge_list.empty()) throw Error(ErrorKind::EmptyInput, "edge list is empty");
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> ids;
  auto intern = [&](const std::string& label) {
    if (label.empty()) throw Error(ErrorKind::ParseError, "empty vertex label");
    const auto [it, inserted] = ids.emplace(label, static_cast<VertexId>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };
  std::vector<Edge> edges;
  edges.reserve(edge_list.size());
  for (const auto& [tail, head] : edge_list) {
    const VertexId t = intern(tail);
    const VertexId h = intern(head);
    edges.push_back({t, h});
  }
  return DirectedGraph(std::move(labels), edges);
}

Path::Path(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) {
    throw Error(ErrorKind::InvalidArgument, "a path needs at least its anchor vertex");
  }
}

Path Path::slice(std::size_t first, std::size_t last) const {
  return Path(std::vector<VertexId>(vertices_.begin() + static_cast<std::ptrdiff_t>(first),
                                    vertices_.begin() + static_cast<std::ptrdiff_t>(last) + 1));
}

Path concat(const Path& p, const Path& q) {
  if (p.end() != q.start()) {
    throw Error(ErrorKind::EndpointMismatch, "cannot concatenate: first path ends at " +
                                                 std::to_string(p.end()) + ", second starts at " +
                                                 std::to_string(q.start()));
  }
  std::vector<VertexId> seq(p.vertices().begin(), p.vertices().end());
  seq.insert(seq.end(), q.vertices().begin() + 1, q.vertices().end());
  return Path(std::move(seq));
}

namespace {

struct WalkEnumerator {
  const DirectedGraph& g;
  VertexId target;
  const std::vector<std::size_t>& to_target;
  std::size_t budget;
  std::vector<Path>& out;
  std::vector<VertexId> stack;

  void run(VertexId at, std::size_t remaining) {
    if (remaining == 0) {
      if (at == target) {
        if (out.size() >= budget) {
          throw Error(ErrorKind::BudgetExceeded,
                      "path enumeration exceeded budget of " + std::to_string(budget));
        }
        out.emplace_back(stack);
      }
      return;
    }
    for (VertexId next : g.out(at)) {
      if (to_target[next] == kUnreachable || to_target[next] > remaining - 1) continue;
      stack.push_back(next);
      run(next, remaining - 1);
      stack.pop_back();
    }
  }
};

}  // namespace

std::vector<Path> enumerate_paths(const DirectedGraph& g, VertexId u, VertexId v,
                                  std::size_t max_len, std::size_t budget) {
  std::vector<Path> paths;
  const auto to_v = bfs_distances(g, v, /*forward=*/false);
  if (to_v[u] == kUnreachable) return paths;
  WalkEnumerator walker{g, v, to_v, budget, paths, {u}};
  for (std::size_t len = to_v[u]; len <= max_len; ++len) walker.run(u, len);
  return paths;
}

}  // namespace pinet
