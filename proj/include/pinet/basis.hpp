#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "pinet/graph.hpp"

namespace pinet {

// Which construction produced a pair.
enum class Provenance { dag, scg_cycle, cross_edge, lifted };

std::string_view to_string(Provenance tag);
std::optional<Provenance> provenance_from_string(std::string_view name);

struct BasisEntry {
  PathPair pair;
  Provenance tag = Provenance::dag;

  auto operator<=>(const BasisEntry&) const = default;
};

class Basis {
 public:
  Basis() = default;

  void add(PathPair pair, Provenance tag) { entries_.push_back({std::move(pair), tag}); }
  void append(const Basis& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const BasisEntry& operator[](std::size_t i) const { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  std::span<const BasisEntry> entries() const { return entries_; }

  // Rewrites every vertex id through `map`.
  Basis relabeled(std::span<const VertexId> map) const;

  bool operator==(const Basis&) const = default;

 private:
  std::vector<BasisEntry> entries_;
};

// Pair sets with tags dropped, for order-insensitive comparison.
std::vector<PathPair> sorted_pairs(const Basis& basis);

}  // namespace pinet
