#include "pinet/oracle.hpp"

#include <map>

namespace pinet {

std::optional<PathPair> apply_stitch(const PathPair& a, const PathPair& b) {
  if (!a.endpoints_match() || !b.endpoints_match() || a.p.end() != b.p.start()) {
    return std::nullopt;
  }
  return PathPair{concat(a.p, b.p), concat(a.q, b.q)};
}

namespace {

void substitute_all(const PathPair& a, const Path& host, const Path& other,
                    std::vector<PathPair>& out) {
  const auto pattern = a.p.vertices();
  const auto text = host.vertices();
  if (pattern.size() > text.size()) return;
  for (std::size_t i = 0; i + pattern.size() <= text.size(); ++i) {
    if (!std::equal(pattern.begin(), pattern.end(), text.begin() + static_cast<std::ptrdiff_t>(i))) {
      continue;
    }
    const Path before = host.slice(0, i);
    const Path after = host.slice(i + a.p.length(), host.length());
    out.push_back({concat(concat(before, a.q), after), other});
  }
}

}  // namespace

std::vector<PathPair> apply_merge(const PathPair& a, const PathPair& b) {
  std::vector<PathPair> out;
  if (!a.endpoints_match() || !b.endpoints_match()) return out;
  substitute_all(a, b.p, b.q, out);
  substitute_all(a, b.q, b.p, out);
  return out;
}

namespace {

// The nonempty cycle of a cycle pair, or nothing.
std::optional<Path> cycle_of(const PathPair& pair) {
  if (!pair.endpoints_match() || !pair.p.is_closed()) return std::nullopt;
  if (pair.q.is_empty() && !pair.p.is_empty()) return pair.p;
  if (pair.p.is_empty() && !pair.q.is_empty()) return pair.q;
  return std::nullopt;
}

}  // namespace

std::optional<PathPair> apply_cut(const PathPair& a, const PathPair& b) {
  const auto c1 = cycle_of(a);
  const auto c2 = cycle_of(b);
  if (!c1 || !c2 || c1->start() != c2->start()) return std::nullopt;
  const auto x = c1->vertices();
  const auto y = c2->vertices();
  std::size_t common = 0;  // shared trailing vertices
  while (common < x.size() && common < y.size() &&
         x[x.size() - 1 - common] == y[y.size() - 1 - common]) {
    ++common;
  }
  if (common < 2) return std::nullopt;  // suffix must contain an edge
  return PathPair{c1->slice(0, x.size() - common), c2->slice(0, y.size() - common)};
}

namespace {
constexpr PathClosure::Node kNoNode = ~PathClosure::Node{0};
}

PathClosure::PathClosure(const DirectedGraph& g, std::size_t max_len, std::size_t budget)
    : g_(g), max_len_(max_len) {
  const std::size_t n = g.vertex_count();
  auto check_budget = [&](std::size_t count) {
    if (count > budget) {
      throw Error(ErrorKind::BudgetExceeded, "closure needs more than " + std::to_string(budget) +
                                                 " walks of length <= " +
                                                 std::to_string(max_len));
    }
  };
  check_budget(n);
  for (VertexId v = 0; v < n; ++v) {
    start_.push_back(v);
    end_.push_back(v);
    length_.push_back(0);
    prefix_.push_back(v);
    suffix_.push_back(v);
    first_edge_.push_back(0);
    last_edge_.push_back(0);
    first_child_.push_back(kNoNode);
  }
  level_end_.push_back(n);
  edge_rank_.resize(g.edge_count());
  for (VertexId v = 0; v < n; ++v) {
    const auto ids = g.out_edge_ids(v);
    for (std::size_t k = 0; k < ids.size(); ++k) edge_rank_[ids[k]] = static_cast<std::uint32_t>(k);
  }
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t lo = len == 1 ? 0 : level_end_[len - 2];
    const std::size_t hi = level_end_[len - 1];
    std::size_t count = start_.size();
    for (std::size_t x = lo; x < hi; ++x) count += g.out(end_[x]).size();
    check_budget(count);
    for (std::size_t x = lo; x < hi; ++x) {
      first_child_[x] = static_cast<Node>(start_.size());
      const auto heads = g.out(end_[x]);
      const auto ids = g.out_edge_ids(end_[x]);
      for (std::size_t k = 0; k < heads.size(); ++k) {
        start_.push_back(start_[x]);
        end_.push_back(heads[k]);
        length_.push_back(static_cast<std::uint32_t>(len));
        prefix_.push_back(static_cast<Node>(x));
        suffix_.push_back(len == 1 ? heads[k] : first_child_[suffix_[x]] + static_cast<Node>(k));
        first_edge_.push_back(len == 1 ? ids[k] : first_edge_[x]);
        last_edge_.push_back(ids[k]);
        first_child_.push_back(kNoNode);
      }
    }
    level_end_.push_back(start_.size());
  }
  parent_.resize(start_.size());
  for (Node i = 0; i < parent_.size(); ++i) parent_[i] = i;
}

std::optional<PathClosure::Node> PathClosure::find_node(const Path& p) const {
  if (p.length() > max_len_ || p.start() >= g_.vertex_count()) return std::nullopt;
  Node node = p.start();
  for (std::size_t t = 0; t < p.length(); ++t) {
    const auto nb = g_.out(p[t]);
    const auto it = std::lower_bound(nb.begin(), nb.end(), p[t + 1]);
    if (it == nb.end() || *it != p[t + 1]) return std::nullopt;
    node = first_child_[node] + static_cast<Node>(it - nb.begin());
  }
  return node;
}

Path PathClosure::path_of(Node node) const {
  std::vector<VertexId> seq;
  while (length_[node] > 0) {
    seq.push_back(end_[node]);
    node = prefix_[node];
  }
  seq.push_back(end_[node]);
  std::reverse(seq.begin(), seq.end());
  return Path(std::move(seq));
}

PathClosure::Node PathClosure::root(Node x) const {
  while (parent_[x] != x) x = parent_[x];
  return x;
}

bool PathClosure::unite(Node a, Node b) {
  a = root(a);
  b = root(b);
  if (a == b) return false;
  if (a > b) std::swap(a, b);
  parent_[b] = a;
  return true;
}

void PathClosure::flatten() {
  roots_.resize(parent_.size());
  for (Node x = 0; x < parent_.size(); ++x) {
    roots_[x] = parent_[x] == x ? x : roots_[parent_[x]];
    parent_[x] = roots_[x];
  }
}

bool PathClosure::add_pair(const PathPair& pair) {
  const auto a = find_node(pair.p);
  const auto b = find_node(pair.q);
  if (!a || !b) return false;
  unite(*a, *b);
  return true;
}

void PathClosure::signatures(Execution exec, std::vector<std::uint64_t>& right,
                             std::vector<std::uint64_t>& left) const {
  const std::size_t n = start_.size();
  right.resize(n);
  left.resize(n);
  auto body = [&](std::size_t x) {
    if (length_[x] == 0) {
      right[x] = left[x] = kNoSignature;
      return;
    }
    right[x] = (std::uint64_t{roots_[prefix_[x]]} << 32) | last_edge_[x];
    left[x] = (std::uint64_t{first_edge_[x]} << 32) | roots_[suffix_[x]];
  };
  if (exec == Execution::serial) {
    for (std::size_t x = 0; x < n; ++x) body(x);
  } else {
    const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
    for (long long x = 0; x < count; ++x) body(static_cast<std::size_t>(x));
  }
}

bool PathClosure::congruence_pass(Execution exec) {
  flatten();
  std::vector<std::uint64_t> right, left;
  signatures(exec, right, left);
  bool changed = false;
  std::vector<Node> order(start_.size());
  for (const auto* keys : {&right, &left}) {
    for (Node i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](Node a, Node b) {
      return std::pair((*keys)[a], a) < std::pair((*keys)[b], b);
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
      const auto key = (*keys)[order[i]];
      if (key != kNoSignature && key == (*keys)[order[i - 1]]) {
        changed |= unite(order[i - 1], order[i]);
      }
    }
  }
  return changed;
}

bool PathClosure::cut_pass() {
  flatten();
  bool changed = false;
  std::vector<Node> witness(start_.size(), kNoNode);
  std::vector<Node> prefixes;
  for (Node c = static_cast<Node>(g_.vertex_count()); c < start_.size(); ++c) {
    if (start_[c] != end_[c] || roots_[c] != roots_[start_[c]]) continue;
    // prefixes[k] has length k; the matching suffix drops the first k edges.
    prefixes.assign(length_[c] + 1, kNoNode);
    for (Node x = c; ; x = prefix_[x]) {
      prefixes[length_[x]] = x;
      if (length_[x] == 0) break;
    }
    Node s = c;
    for (std::uint32_t k = 0; k < length_[c]; ++k) {
      if (witness[s] == kNoNode) {
        witness[s] = prefixes[k];
      } else {
        changed |= unite(witness[s], prefixes[k]);
      }
      s = suffix_[s];
    }
  }
  return changed;
}

bool PathClosure::rotation_pass() {
  flatten();
  bool changed = false;
  for (Node c = static_cast<Node>(g_.vertex_count()); c < start_.size(); ++c) {
    if (start_[c] != end_[c] || roots_[c] != roots_[start_[c]]) continue;
    // (u, x, ..., u) -> (x, ..., u, x); repeated passes reach every rotation
    const Node rotated = first_child_[suffix_[c]] + edge_rank_[first_edge_[c]];
    changed |= unite(rotated, start_[rotated]);
  }
  return changed;
}

std::size_t PathClosure::saturate(Execution exec) {
  std::size_t passes = 0;
  for (;;) {
    ++passes;
    bool changed = congruence_pass(exec);
    changed |= cut_pass();
    if (rotate_cycles_) changed |= rotation_pass();
    if (!changed) break;
  }
  flatten();
  return passes;
}

bool PathClosure::equivalent(const Path& a, const Path& b) const {
  const auto x = find_node(a);
  const auto y = find_node(b);
  if (!x || !y) {
    throw Error(ErrorKind::InvalidArgument, "path is not a walk of the closure graph");
  }
  return root(*x) == root(*y);
}

std::uint64_t PathClosure::closure_size() const {
  std::vector<std::uint64_t> size(start_.size(), 0);
  for (Node x = 0; x < start_.size(); ++x) ++size[root(x)];
  std::uint64_t pairs = 0;
  for (auto s : size) {
    if (s > 1) pairs += s * (s - 1) / 2;
  }
  return pairs;
}

std::vector<PathPair> PathClosure::missing_pairs(std::size_t check_len) const {
  const std::size_t limit = level_end_[std::min(check_len, max_len_)];
  std::map<std::pair<VertexId, VertexId>, std::vector<Node>> groups;
  for (Node x = 0; x < limit; ++x) groups[{start_[x], end_[x]}].push_back(x);
  std::vector<PathPair> missing;
  for (const auto& [ends, nodes] : groups) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t j = i + 1; j < nodes.size(); ++j) {
        if (root(nodes[i]) != root(nodes[j])) {
          missing.push_back({path_of(nodes[i]), path_of(nodes[j])});
        }
      }
    }
  }
  return missing;
}

namespace {

VerificationReport run_closure(const DirectedGraph& g, const Basis& basis, std::size_t check_len,
                               std::size_t slack, const VerifyOptions& options) {
  PathClosure closure(g, check_len + slack, options.budget);
  closure.set_cycle_rotation(options.rotate_cycles);
  for (const auto& entry : basis) closure.add_pair(entry.pair);
  VerificationReport report;
  report.iterations = closure.saturate(options.exec);
  report.missing = closure.missing_pairs(check_len);
  report.verified = report.missing.empty();
  report.closure_size = closure.closure_size();
  report.slack_used = slack;
  return report;
}

}  // namespace

VerificationReport verify_basis(const DirectedGraph& g, const Basis& basis, std::size_t check_len,
                                std::size_t slack, const VerifyOptions& options) {
  if (check_len < 1) throw Error(ErrorKind::InvalidArgument, "check length must be at least 1");
  for (const auto& entry : basis) {
    if (!is_valid_in(entry.pair, g)) {
      throw Error(ErrorKind::InvalidArgument, "basis pair is not a valid path pair of the graph");
    }
  }
  VerificationReport report = run_closure(g, basis, check_len, slack, options);
  if (report.verified || !options.retry_with_doubled_slack || slack == 0) return report;
  try {
    return run_closure(g, basis, check_len, 2 * slack, options);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
    return report;
  }
}

}  // namespace pinet
