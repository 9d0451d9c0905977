#include "pinet/basis.hpp"

namespace pinet {

std::string_view to_string(Provenance tag) {
  switch (tag) {
    case Provenance::dag: return "dag";
    case Provenance::scg_cycle: return "scg-cycle";
    case Provenance::cross_edge: return "cross-edge";
    case Provenance::lifted: return "lifted";
  }
  return "dag";
}

std::optional<Provenance> provenance_from_string(std::string_view name) {
  for (Provenance tag : {Provenance::dag, Provenance::scg_cycle, Provenance::cross_edge,
                         Provenance::lifted}) {
    if (to_string(tag) == name) return tag;
  }
  return std::nullopt;
}

namespace {

Path relabel(const Path& p, std::span<const VertexId> map) {
  std::vector<VertexId> seq;
  seq.reserve(p.vertices().size());
  for (VertexId v : p.vertices()) seq.push_back(map[v]);
  return Path(std::move(seq));
}

}  // namespace

Basis Basis::relabeled(std::span<const VertexId> map) const {
  Basis out;
  for (const auto& e : entries_) {
    out.add({relabel(e.pair.p, map), relabel(e.pair.q, map)}, e.tag);
  }
  return out;
}

std::vector<PathPair> sorted_pairs(const Basis& basis) {
  std::vector<PathPair> pairs;
  pairs.reserve(basis.size());
  for (const auto& e : basis) pairs.push_back(e.pair);
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace pinet
