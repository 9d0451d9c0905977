#pragma once

#include <vector>

#include "pinet/map_network.hpp"

namespace pinet::detail {

// Basis pair resolved to edge indices.
struct CompiledPair {
  std::vector<std::uint32_t> p_edges;
  std::vector<std::uint32_t> q_edges;
};

std::vector<std::uint32_t> path_edges(const DirectedGraph& g, const Path& p);
std::vector<CompiledPair> compile_basis(const DirectedGraph& g, const Basis& basis);

// Fills `out`, reusing its gradient storage.
void evaluate_objective(const MapNetwork& net, std::span<const CompiledPair> pairs,
                        double lambda, Execution exec, ObjectiveEvaluation& out);

}  // namespace pinet::detail
