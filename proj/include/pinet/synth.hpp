#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "pinet/optimize.hpp"

namespace pinet {

struct SynthConfig {
  std::size_t vertices = 12;
  double edge_prob = 0.35;
  std::size_t dim = 10;
  double noise_sigma = 0.05;
  double outlier_frac = 0.2;
  std::uint64_t seed = 0;
  // 1e-3 cannot move an outlier entry far enough in 200 epochs
  OptimizerSchedule schedule{.step_size = 3e-2};
  std::size_t max_resamples = 1000;
  std::size_t residual_path_len = 5;
};

struct ExperimentReport {
  std::size_t basis_size = 0;
  double error_before = 0.0;  // mean ||X_in - X*||_F over edges
  double error_after = 0.0;   // mean ||X - X*||_F over edges
  double basis_residual_final = 0.0;      // sum of squared basis-pair deviations
  double all_pairs_residual_final = 0.0;  // same, over all walk pairs <= residual_path_len
  std::size_t epochs = 0;
  std::uint64_t seed = 0;
};

// Everything the CLI's --dump writes out.
struct ExperimentData {
  MapNetwork ground_truth;
  MapNetwork optimized;  // also carries the input maps
};

// Haar-distributed orthogonal matrix (QR of a Gaussian, signs fixed by R).
Matrix random_orthogonal(std::size_t dim, std::mt19937_64& rng);

// Directed Erdos-Renyi graph on "v0".."v{n-1}", resampled until weakly
// connected. Throws GraphSamplingFailed after `max_resamples` attempts.
DirectedGraph sample_weakly_connected(std::size_t vertices, double edge_prob,
                                      std::size_t max_resamples, std::mt19937_64& rng);

ExperimentReport synth_experiment(const SynthConfig& config,
                                  std::optional<ExperimentData>* data = nullptr);

}  // namespace pinet
