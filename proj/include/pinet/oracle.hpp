#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pinet/basis.hpp"
#include "pinet/graph.hpp"
#include "pinet/parallel.hpp"

namespace pinet {

// (p, q) and (p', q') joined end to start: (p ~ p', q ~ q').
std::optional<PathPair> apply_stitch(const PathPair& a, const PathPair& b);

// Every occurrence of a.p inside b.p (then inside b.q), left to right,
// replaced by a.q: (r ~ a.q ~ r', other side of b).
std::vector<PathPair> apply_merge(const PathPair& a, const PathPair& b);

// Two cycle pairs (C1, ∅_u), (C2, ∅_u) whose cycles share a nonempty
// maximal common suffix s: C1 = p ~ s, C2 = p' ~ s gives (p, p').
std::optional<PathPair> apply_cut(const PathPair& a, const PathPair& b);

inline constexpr std::size_t kDefaultClosureBudget = 1'000'000;

// Bounded closure over all walks of length <= max_len.
//
// Every walk is a trie node (prefix = walk minus last edge, suffix = walk minus
// first edge). Equivalence classes live in a union-find whose parent pointers
// never point to a larger node id. Two nodes with equivalent prefixes and the
// same last edge are joined (and symmetrically for suffixes), which is exactly
// closure under stitch and merge with the implicit reflexive pairs. Cut joins
// p and p' whenever p ~ s and p' ~ s both sit in the class of the empty path.
//
// Rotation: a closed walk equivalent to the empty path at its start is also
// equivalent to the empty path when read from any of its other vertices. None
// of the three rules yields this (from ab ~ () alone, ba ~ () is not
// derivable), but the cycle-pair argument for strongly connected graphs picks
// each cycle's base point freely, so verification needs it. It is sound for
// invertible maps, which is what a cycle pair asserts.
class PathClosure {
 public:
  using Node = std::uint32_t;

  PathClosure(const DirectedGraph& g, std::size_t max_len,
              std::size_t budget = kDefaultClosureBudget);

  std::size_t max_len() const { return max_len_; }
  std::size_t node_count() const { return start_.size(); }

  std::optional<Node> find_node(const Path& p) const;
  Path path_of(Node node) const;

  // False (and nothing recorded) when either side is longer than max_len.
  bool add_pair(const PathPair& pair);

  void set_cycle_rotation(bool on) { rotate_cycles_ = on; }

  // Runs passes until one makes no union; returns the number of passes.
  std::size_t saturate(Execution exec = Execution::parallel);

  bool equivalent(const Path& a, const Path& b) const;

  // Number of unordered non-reflexive pairs inside the classes.
  std::uint64_t closure_size() const;

  // Pairs of walks with both lengths <= check_len that are not equivalent.
  std::vector<PathPair> missing_pairs(std::size_t check_len) const;

  // Congruence signatures per node: (class of prefix, last edge) and
  // (first edge, class of suffix); empty walks get kNoSignature. Public so the
  // serial and OpenMP bodies can be compared and benchmarked.
  static constexpr std::uint64_t kNoSignature = ~std::uint64_t{0};
  void signatures(Execution exec, std::vector<std::uint64_t>& right,
                  std::vector<std::uint64_t>& left) const;

 private:
  Node root(Node x) const;
  bool unite(Node a, Node b);
  void flatten();
  bool congruence_pass(Execution exec);
  bool cut_pass();
  bool rotation_pass();

  const DirectedGraph& g_;
  std::size_t max_len_;
  bool rotate_cycles_ = true;
  std::vector<std::uint32_t> edge_rank_;  // position of each edge in its tail's out list
  std::vector<VertexId> start_, end_;
  std::vector<std::uint32_t> length_;
  std::vector<Node> prefix_, suffix_, first_child_;
  std::vector<std::uint32_t> first_edge_, last_edge_;
  std::vector<std::size_t> level_end_;  // nodes of length <= k are [0, level_end_[k])
  std::vector<Node> parent_;
  std::vector<Node> roots_;  // snapshot filled by flatten()
};

struct VerificationReport {
  bool verified = false;
  std::vector<PathPair> missing;
  std::uint64_t closure_size = 0;
  std::size_t iterations = 0;
  std::size_t slack_used = 0;
};

struct VerifyOptions {
  std::size_t budget = kDefaultClosureBudget;  // cap on materialised walks
  bool retry_with_doubled_slack = true;
  bool rotate_cycles = true;
  Execution exec = Execution::parallel;
};

// Closure of the basis at length check_len + slack, then every pair of walks
// up to check_len is checked. On failure the closure is recomputed once with
// doubled slack; slack_used reports which bound produced the answer.
VerificationReport verify_basis(const DirectedGraph& g, const Basis& basis,
                                std::size_t check_len, std::size_t slack,
                                const VerifyOptions& options = {});

}  // namespace pinet
