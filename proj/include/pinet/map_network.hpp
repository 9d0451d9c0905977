#pragma once

#include <Eigen/Dense>
#include <vector>

#include "pinet/basis.hpp"
#include "pinet/graph.hpp"
#include "pinet/parallel.hpp"

namespace pinet {

using Matrix = Eigen::MatrixXd;

// Supervision on a vertex pair that has no edge of its own: the composite
// map along the shortest path is compared against `target`.
struct PathObservation {
  Path path;
  Matrix target;
};

// One m x m matrix per edge (the parameters), plus optional observed maps.
class MapNetwork {
 public:
  MapNetwork(DirectedGraph graph, std::size_t dim);

  const DirectedGraph& graph() const { return graph_; }
  std::size_t dim() const { return dim_; }

  const Matrix& map(std::size_t edge) const { return maps_[edge]; }
  const Matrix& map(VertexId u, VertexId v) const;
  void set_map(std::size_t edge, Matrix m);
  std::span<const Matrix> maps() const { return maps_; }
  std::span<Matrix> maps() { return maps_; }

  bool has_input() const { return !inputs_.empty(); }
  const Matrix& input(std::size_t edge) const { return inputs_[edge]; }
  std::span<const Matrix> inputs() const { return inputs_; }
  void set_inputs(std::vector<Matrix> inputs);

  // Attaches an observation to the shortest from->to path.
  void add_observation(VertexId from, VertexId to, Matrix target);
  std::span<const PathObservation> observations() const { return observations_; }

 private:
  void check_shape(const Matrix& m) const;

  DirectedGraph graph_;
  std::size_t dim_;
  std::vector<Matrix> maps_;
  std::vector<Matrix> inputs_;
  std::vector<PathObservation> observations_;
};

// X_{k-1,k} * ... * X_{0,1}; identity for the empty path.
Matrix path_map(const MapNetwork& net, const Path& p);

struct Residual {
  double total = 0.0;          // sum of ||X_p - X_q||_F^2
  double max_deviation = 0.0;  // max ||X_p - X_q||_F
};

Residual basis_residual(const MapNetwork& net, const Basis& basis);

// Deviation over every pair of walks with equal endpoints and both lengths <=
// max_len. Each source vertex is an independent task.
struct PathDeviation {
  double max_deviation = 0.0;
  double sum_squared = 0.0;
  std::size_t pair_count = 0;
};

PathDeviation all_pairs_deviation(const MapNetwork& net, std::size_t max_len,
                                  Execution exec = Execution::parallel);

// sum ||X_e - X_e^in||_1 (+ observation terms) + lambda * sum ||X_p - X_q||_F^2.
struct ObjectiveEvaluation {
  double value = 0.0;
  double data = 0.0;
  double consistency = 0.0;
  std::vector<Matrix> gradient;  // one per edge
};

// Pair contributions are computed independently and reduced in basis order,
// so serial and parallel runs are bit-identical.
ObjectiveEvaluation evaluate_objective(const MapNetwork& net, const Basis& basis, double lambda,
                                       Execution exec = Execution::parallel);

}  // namespace pinet
