#include "pinet/synth.hpp"

#include <numeric>

#include "pinet/general_basis.hpp"

namespace pinet {

Matrix random_orthogonal(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto m = static_cast<Eigen::Index>(dim);
  Matrix a(m, m);
  for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = normal(rng);
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < m; ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  return q;
}

namespace {

bool weakly_connected(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t groups = n;
  for (const Edge& e : edges) {
    const auto a = find(e.tail), b = find(e.head);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      --groups;
    }
  }
  return groups == 1;
}

}  // namespace

DirectedGraph sample_weakly_connected(std::size_t vertices, double edge_prob,
                                      std::size_t max_resamples, std::mt19937_64& rng) {
  if (vertices < 2) throw Error(ErrorKind::InvalidArgument, "need at least two vertices");
  if (!(edge_prob > 0.0 && edge_prob <= 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "edge probability must lie in (0, 1]");
  }
  std::bernoulli_distribution coin(edge_prob);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < vertices; ++i) labels.push_back("v" + std::to_string(i));
  for (std::size_t attempt = 0; attempt < max_resamples; ++attempt) {
    std::vector<Edge> edges;
    for (VertexId u = 0; u < vertices; ++u) {
      for (VertexId v = 0; v < vertices; ++v) {
        if (u != v && coin(rng)) edges.push_back({u, v});
      }
    }
    if (weakly_connected(vertices, edges)) return DirectedGraph(labels, edges);
  }
  throw Error(ErrorKind::GraphSamplingFailed,
              "no weakly connected sample in " + std::to_string(max_resamples) + " attempts");
}

namespace {

double mean_error(const MapNetwork& net, std::span<const Matrix> truth, bool use_input) {
  if (truth.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t e = 0; e < truth.size(); ++e) {
    sum += ((use_input ? net.input(e) : net.map(e)) - truth[e]).norm();
  }
  return sum / static_cast<double>(truth.size());
}

}  // namespace

ExperimentReport synth_experiment(const SynthConfig& config, std::optional<ExperimentData>* data) {
  if (!(config.outlier_frac >= 0.0 && config.outlier_frac < 1.0)) {
    throw Error(ErrorKind::InvalidArgument, "outlier fraction must lie in [0, 1)");
  }
  if (config.noise_sigma < 0.0) throw Error(ErrorKind::InvalidArgument, "noise must be >= 0");
  config.schedule.validate();

  std::mt19937_64 rng(config.seed);
  DirectedGraph graph =
      sample_weakly_connected(config.vertices, config.edge_prob, config.max_resamples, rng);

  std::vector<Matrix> potentials;
  for (std::size_t v = 0; v < config.vertices; ++v) {
    potentials.push_back(random_orthogonal(config.dim, rng));
  }
  MapNetwork truth(graph, config.dim);
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const Edge& edge = graph.edge(e);
    truth.set_map(e, potentials[edge.head] * potentials[edge.tail].transpose());
  }

  std::normal_distribution<double> noise(0.0, 1.0);
  std::vector<Matrix> observed(truth.maps().begin(), truth.maps().end());
  if (config.noise_sigma > 0.0) {
    for (auto& x : observed) {
      for (Eigen::Index i = 0; i < x.size(); ++i) x(i) += config.noise_sigma * noise(rng);
    }
  }
  std::vector<std::size_t> order(graph.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const auto outliers = static_cast<std::size_t>(
      std::lround(config.outlier_frac * static_cast<double>(graph.edge_count())));
  for (std::size_t k = 0; k < outliers; ++k) observed[order[k]] = random_orthogonal(config.dim, rng);

  MapNetwork input(graph, config.dim);
  input.set_inputs(observed);

  const Basis basis = path_invariance_basis(graph);
  OptimizationResult opt = optimize_network(input, basis, config.schedule);

  ExperimentReport report;
  report.basis_size = basis.size();
  report.error_before = mean_error(opt.network, truth.maps(), /*use_input=*/true);
  report.error_after = mean_error(opt.network, truth.maps(), /*use_input=*/false);
  report.basis_residual_final = basis_residual(opt.network, basis).total;
  report.all_pairs_residual_final =
      all_pairs_deviation(opt.network, config.residual_path_len).sum_squared;
  report.epochs = opt.epochs;
  report.seed = config.seed;
  if (data) data->emplace(ExperimentData{std::move(truth), std::move(opt.network)});
  return report;
}

}  // namespace pinet
