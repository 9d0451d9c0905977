#pragma once

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pinet/error.hpp"

namespace pinet {

using VertexId = std::uint32_t;

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

struct Edge {
  VertexId tail = 0;
  VertexId head = 0;

  auto operator<=>(const Edge&) const = default;
};

// Immutable directed graph. Vertices are dense ids 0..n-1, edges are kept in
// first-insertion order and both adjacency lists are sorted by id, so every
// traversal below is a deterministic function of the construction input.
class DirectedGraph {
 public:
  DirectedGraph() = default;

  // Vertices labelled "0".."n-1".
  DirectedGraph(std::size_t vertex_count, std::span<const Edge> edges);
  DirectedGraph(std::vector<std::string> labels, std::span<const Edge> edges);

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_[index]; }

  std::span<const VertexId> out(VertexId v) const {
    return {out_targets_.data() + out_offsets_[v], out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const VertexId> in(VertexId v) const {
    return {in_sources_.data() + in_offsets_[v], in_sources_.data() + in_offsets_[v + 1]};
  }
  // Edge indices aligned with out(v).
  std::span<const std::uint32_t> out_edge_ids(VertexId v) const {
    return {out_edge_ids_.data() + out_offsets_[v], out_edge_ids_.data() + out_offsets_[v + 1]};
  }

  bool has_edge(VertexId u, VertexId v) const { return edge_index(u, v).has_value(); }
  std::optional<std::size_t> edge_index(VertexId u, VertexId v) const;

  const std::string& label(VertexId v) const { return labels_[v]; }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<VertexId> find_vertex(std::string_view label) const;

 private:
  void index();

  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> out_offsets_;
  std::vector<VertexId> out_targets_;
  std::vector<std::uint32_t> out_edge_ids_;
  std::vector<std::size_t> in_offsets_;
  std::vector<VertexId> in_sources_;
  std::unordered_map<std::string, VertexId> label_index_;
};

// Interns labels in first-appearance order and drops duplicate edges.
DirectedGraph build_graph(std::span<const std::pair<std::string, std::string>> edge_list);

// Anything with sorted out/in adjacency spans; lets the basis builders run the
// same traversals on a graph that is still being grown.
template <class G>
concept Adjacency = requires(const G& g, VertexId v) {
  { g.vertex_count() } -> std::convertible_to<std::size_t>;
  { g.out(v) } -> std::convertible_to<std::span<const VertexId>>;
  { g.in(v) } -> std::convertible_to<std::span<const VertexId>>;
};

// Mutable adjacency used while edges are inserted one at a time.
class GrowingGraph {
 public:
  explicit GrowingGraph(std::size_t vertex_count) : out_(vertex_count), in_(vertex_count) {}

  std::size_t vertex_count() const { return out_.size(); }
  std::span<const VertexId> out(VertexId v) const { return out_[v]; }
  std::span<const VertexId> in(VertexId v) const { return in_[v]; }

  void add_edge(VertexId u, VertexId v) {
    out_[u].insert(std::lower_bound(out_[u].begin(), out_[u].end(), v), v);
    in_[v].insert(std::lower_bound(in_[v].begin(), in_[v].end(), u), u);
  }

 private:
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
};

// A walk (v_0..v_k). k = 0 is the empty path anchored at v_0.
class Path {
 public:
  explicit Path(VertexId anchor) : vertices_{anchor} {}
  explicit Path(std::vector<VertexId> vertices);

  static Path empty(VertexId anchor) { return Path(anchor); }

  VertexId start() const { return vertices_.front(); }
  VertexId end() const { return vertices_.back(); }
  std::size_t length() const { return vertices_.size() - 1; }
  bool is_empty() const { return vertices_.size() == 1; }
  bool is_closed() const { return start() == end(); }
  std::span<const VertexId> vertices() const { return vertices_; }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }

  // Sub-walk covering vertices [first, last].
  Path slice(std::size_t first, std::size_t last) const;

  auto operator<=>(const Path&) const = default;

 private:
  std::vector<VertexId> vertices_;
};

// p followed by q; requires p.end() == q.start().
Path concat(const Path& p, const Path& q);

template <Adjacency G>
bool is_valid_in(const Path& p, const G& g) {
  const auto vs = p.vertices();
  for (VertexId v : vs) {
    if (v >= g.vertex_count()) return false;
  }
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    const auto nb = g.out(vs[i]);
    if (!std::binary_search(nb.begin(), nb.end(), vs[i + 1])) return false;
  }
  return true;
}

struct PathPair {
  Path p;
  Path q;

  bool endpoints_match() const { return p.start() == q.start() && p.end() == q.end(); }
  bool is_cycle_pair() const {
    return endpoints_match() && p.is_closed() && (p.is_empty() || q.is_empty());
  }
  PathPair swapped() const { return {q, p}; }

  auto operator<=>(const PathPair&) const = default;
};

template <Adjacency G>
bool is_valid_in(const PathPair& pair, const G& g) {
  return pair.endpoints_match() && is_valid_in(pair.p, g) && is_valid_in(pair.q, g);
}

// BFS hop counts from `source` along out-edges (forward) or in-edges.
template <Adjacency G>
std::vector<std::size_t> bfs_distances(const G& g, VertexId source, bool forward) {
  std::vector<std::size_t> dist(g.vertex_count(), kUnreachable);
  std::deque<VertexId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : forward ? g.out(x) : g.in(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

// Shortest u->v path; ties go to the lexicographically smallest vertex
// sequence. Walks greedily from u over the reverse-BFS distance field of v,
// always taking the smallest id that stays on a shortest route.
template <Adjacency G>
std::optional<Path> shortest_path(const G& g, VertexId u, VertexId v) {
  const auto to_v = bfs_distances(g, v, /*forward=*/false);
  if (to_v[u] == kUnreachable) return std::nullopt;
  std::vector<VertexId> seq{u};
  VertexId cur = u;
  while (cur != v) {
    for (VertexId next : g.out(cur)) {
      if (to_v[next] != kUnreachable && to_v[next] + 1 == to_v[cur]) {
        cur = next;
        break;
      }
    }
    seq.push_back(cur);
  }
  return Path(std::move(seq));
}

inline constexpr std::size_t kDefaultPathBudget = 1'000'000;

// All walks u->v with length <= max_len, ordered by (length, vertex sequence).
std::vector<Path> enumerate_paths(const DirectedGraph& g, VertexId u, VertexId v,
                                  std::size_t max_len,
                                  std::size_t budget = kDefaultPathBudget);

}  // namespace pinet
