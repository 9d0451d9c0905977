#include "pinet/optimize.hpp"

#include <algorithm>
#include <cmath>

#include "objective_internal.hpp"

namespace pinet {

void OptimizerSchedule::validate() const {
  if (!(lambda_init > 0.0)) throw Error(ErrorKind::InvalidArgument, "lambda_init must be positive");
  if (!(lambda_stop > lambda_init)) {
    throw Error(ErrorKind::InvalidArgument, "lambda_stop must exceed lambda_init");
  }
  if (doubling_period == 0) throw Error(ErrorKind::InvalidArgument, "doubling_period must be positive");
  if (!(step_size > 0.0) || !(step_decay > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "step size and decay must be positive");
  }
  if (!(beta1 >= 0.0 && beta1 < 1.0) || !(beta2 >= 0.0 && beta2 < 1.0) || !(epsilon > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "invalid moment parameters");
  }
}

std::vector<OptimizerSchedule::Phase> OptimizerSchedule::phases() const {
  validate();
  std::vector<Phase> out;
  if (epochs_initial > 0) out.push_back({lambda_init, step_size, epochs_initial});
  double lambda = lambda_init * 2.0;
  double step = step_size * step_decay;
  while (lambda < lambda_stop) {
    out.push_back({lambda, step, doubling_period});
    lambda *= 2.0;
    step *= step_decay;
  }
  return out;
}

std::size_t OptimizerSchedule::total_epochs() const {
  std::size_t total = 0;
  for (const auto& phase : phases()) total += phase.epochs;
  return total;
}

OptimizationResult optimize_network(const MapNetwork& net, const Basis& basis,
                                    const OptimizerSchedule& schedule, Execution exec) {
  if (!net.has_input()) {
    throw Error(ErrorKind::MissingEdgeMatrix, "optimisation needs an input map on every edge");
  }
  const auto phases = schedule.phases();
  const auto pairs = detail::compile_basis(net.graph(), basis);

  OptimizationResult result{net, {}, {}, 0.0, 0};
  MapNetwork& work = result.network;
  for (std::size_t e = 0; e < work.graph().edge_count(); ++e) work.set_map(e, work.input(e));

  const std::size_t edges = work.graph().edge_count();
  const auto m = static_cast<Eigen::Index>(work.dim());
  std::vector<Matrix> first(edges, Matrix::Zero(m, m));
  std::vector<Matrix> second(edges, Matrix::Zero(m, m));
  double beta1_power = 1.0;
  double beta2_power = 1.0;

  ObjectiveEvaluation eval;
  for (const auto& phase : phases) {
    for (std::size_t epoch = 0; epoch < phase.epochs; ++epoch) {
      detail::evaluate_objective(work, pairs, phase.lambda, exec, eval);
      if (!std::isfinite(eval.value)) {
        throw Error(ErrorKind::Divergence,
                    "objective became non-finite at epoch " + std::to_string(result.epochs));
      }
      result.loss_trace.push_back(eval.value);
      result.lambda_trace.push_back(phase.lambda);
      ++result.epochs;

      beta1_power *= schedule.beta1;
      beta2_power *= schedule.beta2;
      for (std::size_t e = 0; e < edges; ++e) {
        Matrix& x = work.maps()[e];
        const Matrix& observed = work.input(e);
        const bool prox = schedule.data_step == DataTermStep::proximal;
        Matrix g = eval.gradient[e];
        // the prox step below handles |X - X_in|_1, so take it back out
        for (Eigen::Index idx = 0; prox && idx < x.size(); ++idx) {
          const double d = x(idx) - observed(idx);
          g(idx) -= d > 0.0 ? 1.0 : (d < 0.0 ? -1.0 : 0.0);
        }
        first[e] = schedule.beta1 * first[e] + (1.0 - schedule.beta1) * g;
        second[e] = schedule.beta2 * second[e] + (1.0 - schedule.beta2) * g.cwiseProduct(g);
        for (Eigen::Index idx = 0; idx < x.size(); ++idx) {
          const double m_hat = first[e](idx) / (1.0 - beta1_power);
          const double v_hat = second[e](idx) / (1.0 - beta2_power);
          const double eta = phase.step_size / (std::sqrt(v_hat) + schedule.epsilon);
          if (!prox) {
            x(idx) -= eta * m_hat;
            continue;
          }
          // soft threshold toward the observation in the same diagonal metric
          const double d = x(idx) - eta * m_hat - observed(idx);
          const double shrunk = std::max(std::abs(d) - eta, 0.0);
          x(idx) = observed(idx) + std::copysign(shrunk, d);
        }
      }
    }
  }
  const double last_lambda = phases.empty() ? schedule.lambda_init : phases.back().lambda;
  detail::evaluate_objective(work, pairs, last_lambda, exec, eval);
  if (!std::isfinite(eval.value)) throw Error(ErrorKind::Divergence, "objective became non-finite");
  result.final_objective = eval.value;
  return result;
}

}  // namespace pinet
