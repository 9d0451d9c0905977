#pragma once

#include <cstdint>
#include <vector>

#include "pinet/map_network.hpp"

namespace pinet {

// How the |X - X_in|_1 term enters the update. subgradient feeds sign(X - X_in)
// (0 at 0) into ADAM like any other gradient; proximal keeps it out of the
// moment estimates and applies it as a soft threshold toward X_in.
enum class DataTermStep { proximal, subgradient };

// lambda stays at lambda_init for epochs_initial epochs, then doubles every
// doubling_period epochs; training stops once lambda >= lambda_stop. One
// epoch is one full-gradient ADAM step.
struct OptimizerSchedule {
  double lambda_init = 1e-2;
  std::size_t epochs_initial = 40;
  std::size_t doubling_period = 10;
  double lambda_stop = 1e3;
  double step_size = 1e-3;
  double step_decay = 1.0;  // step size multiplier applied at every doubling
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  DataTermStep data_step = DataTermStep::proximal;
  std::uint64_t seed = 0;

  void validate() const;

  struct Phase {
    double lambda;
    double step_size;
    std::size_t epochs;
  };
  std::vector<Phase> phases() const;
  std::size_t total_epochs() const;
};

struct OptimizationResult {
  MapNetwork network;
  std::vector<double> loss_trace;    // objective before each epoch's step
  std::vector<double> lambda_trace;  // lambda in effect for that epoch
  double final_objective = 0.0;
  std::size_t epochs = 0;
};

// Starts from X = X_in and minimises the data + lambda * consistency
// objective with ADAM. With the proximal data step X_in stays an exact fixed
// point when nothing pulls on it; plain subgradient ADAM jitters around it.
// Throws Divergence when the objective stops being finite.
OptimizationResult optimize_network(const MapNetwork& net, const Basis& basis,
                                    const OptimizerSchedule& schedule,
                                    Execution exec = Execution::parallel);

}  // namespace pinet
