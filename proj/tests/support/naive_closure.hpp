#pragma once

#include <set>

#include "pinet/basis.hpp"
#include "pinet/oracle.hpp"

namespace pinet::testing {

inline std::vector<Path> all_walks(const DirectedGraph& g, std::size_t max_len) {
  std::vector<Path> out;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      auto walks = enumerate_paths(g, u, v, max_len);
      out.insert(out.end(), walks.begin(), walks.end());
    }
  }
  return out;
}

// Brute-force fixed point over an explicit pair set, applying the three
// rewrite rules to every ordered pair of known pairs, plus one-step rotation
// of identity cycles. Only for tiny graphs.
class NaiveClosure {
 public:
  NaiveClosure(const DirectedGraph& g, const Basis& basis, std::size_t max_len)
      : max_len_(max_len) {
    for (const Path& p : all_walks(g, max_len)) pairs_.insert({p, p});
    for (const auto& entry : basis) insert(entry.pair);
    for (bool grew = true; grew;) {
      grew = false;
      const std::vector<PathPair> snapshot(pairs_.begin(), pairs_.end());
      for (const auto& a : snapshot) {
        for (const auto& b : snapshot) {
          if (auto s = apply_stitch(a, b)) grew |= insert(*s);
          for (const auto& m : apply_merge(a, b)) grew |= insert(m);
          if (auto c = apply_cut(a, b)) grew |= insert(*c);
        }
        if (a.q.is_empty() && a.p.is_closed() && !a.p.is_empty()) {
          const auto v = a.p.vertices();
          std::vector<VertexId> rotated(v.begin() + 1, v.end());
          rotated.push_back(v[1]);
          grew |= insert({Path(rotated), Path::empty(v[1])});
        }
      }
    }
  }

  bool contains(const PathPair& pair) const { return pairs_.count(pair) > 0; }
  std::size_t size() const { return pairs_.size(); }

 private:
  bool insert(const PathPair& pair) {
    if (pair.p.length() > max_len_ || pair.q.length() > max_len_) return false;
    const bool fresh = pairs_.insert(pair).second;
    pairs_.insert(pair.swapped());
    return fresh;
  }

  std::size_t max_len_;
  std::set<PathPair> pairs_;
};

}  // namespace pinet::testing
