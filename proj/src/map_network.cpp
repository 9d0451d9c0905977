#include <cmath>

#include "objective_internal.hpp"

namespace pinet {

MapNetwork::MapNetwork(DirectedGraph graph, std::size_t dim)
    : graph_(std::move(graph)), dim_(dim) {
  if (dim == 0) throw Error(ErrorKind::InvalidArgument, "map dimension must be positive");
  maps_.assign(graph_.edge_count(), Matrix::Identity(static_cast<Eigen::Index>(dim),
                                                     static_cast<Eigen::Index>(dim)));
}

const Matrix& MapNetwork::map(VertexId u, VertexId v) const {
  const auto e = graph_.edge_index(u, v);
  if (!e) {
    throw Error(ErrorKind::MissingEdgeMatrix,
                "no map on (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  }
  return maps_[*e];
}

void MapNetwork::check_shape(const Matrix& m) const {
  if (m.rows() != static_cast<Eigen::Index>(dim_) || m.cols() != static_cast<Eigen::Index>(dim_)) {
    throw Error(ErrorKind::InvalidArgument, "map matrix must be " + std::to_string(dim_) + "x" +
                                                std::to_string(dim_));
  }
}

void MapNetwork::set_map(std::size_t edge, Matrix m) {
  if (edge >= maps_.size()) throw Error(ErrorKind::MissingEdgeMatrix, "edge index out of range");
  check_shape(m);
  maps_[edge] = std::move(m);
}

void MapNetwork::set_inputs(std::vector<Matrix> inputs) {
  if (inputs.size() != maps_.size()) {
    throw Error(ErrorKind::MissingEdgeMatrix, "need exactly one input map per edge");
  }
  for (const auto& m : inputs) check_shape(m);
  inputs_ = std::move(inputs);
}

void MapNetwork::add_observation(VertexId from, VertexId to, Matrix target) {
  check_shape(target);
  auto p = shortest_path(graph_, from, to);
  if (!p) throw Error(ErrorKind::InvalidArgument, "observation endpoints are not connected");
  observations_.push_back({std::move(*p), std::move(target)});
}

namespace detail {

std::vector<std::uint32_t> path_edges(const DirectedGraph& g, const Path& p) {
  std::vector<std::uint32_t> edges;
  edges.reserve(p.length());
  for (std::size_t t = 0; t < p.length(); ++t) {
    const auto e = g.edge_index(p[t], p[t + 1]);
    if (!e) {
      throw Error(ErrorKind::MissingEdgeMatrix, "path uses (" + std::to_string(p[t]) + ", " +
                                                    std::to_string(p[t + 1]) +
                                                    ") which carries no map");
    }
    edges.push_back(static_cast<std::uint32_t>(*e));
  }
  return edges;
}

std::vector<CompiledPair> compile_basis(const DirectedGraph& g, const Basis& basis) {
  std::vector<CompiledPair> out;
  out.reserve(basis.size());
  for (const auto& entry : basis) {
    out.push_back({path_edges(g, entry.pair.p), path_edges(g, entry.pair.q)});
  }
  return out;
}

}  // namespace detail

namespace {

Matrix identity(std::size_t m) {
  return Matrix::Identity(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
}

Matrix product(const MapNetwork& net, std::span<const std::uint32_t> edges) {
  Matrix out = identity(net.dim());
  for (auto e : edges) out = net.map(e) * out;
  return out;
}

// One gradient contribution: `scale * S^T * D * P^T` for every occurrence of
// an edge, where P is the product before it and S the product after it.
struct Term {
  std::uint32_t edge;
  Matrix value;
};

void backprop_path(const MapNetwork& net, std::span<const std::uint32_t> edges, const Matrix& seed,
                   double scale, std::vector<Term>& terms) {
  const std::size_t k = edges.size();
  std::vector<Matrix> before(k + 1);
  before[0] = identity(net.dim());
  for (std::size_t t = 0; t < k; ++t) before[t + 1] = net.map(edges[t]) * before[t];
  Matrix after = identity(net.dim());
  std::vector<Term> reversed;
  for (std::size_t t = k; t-- > 0;) {
    reversed.push_back({edges[t], scale * (after.transpose() * seed * before[t].transpose())});
    after = after * net.map(edges[t]);
  }
  terms.insert(terms.end(), std::make_move_iterator(reversed.rbegin()),
               std::make_move_iterator(reversed.rend()));
}

struct PairContribution {
  double squared = 0.0;
  std::vector<Term> terms;
};

void pair_contribution(const MapNetwork& net, const detail::CompiledPair& pair, double lambda,
                       PairContribution& out) {
  out.terms.clear();
  const Matrix diff = product(net, pair.p_edges) - product(net, pair.q_edges);
  out.squared = diff.squaredNorm();
  backprop_path(net, pair.p_edges, diff, 2.0 * lambda, out.terms);
  backprop_path(net, pair.q_edges, diff, -2.0 * lambda, out.terms);
}

double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

}  // namespace

namespace detail {

void evaluate_objective(const MapNetwork& net, std::span<const CompiledPair> pairs, double lambda,
                        Execution exec, ObjectiveEvaluation& out) {
  const std::size_t m = net.dim();
  out.gradient.resize(net.graph().edge_count());
  for (auto& g : out.gradient) g = Matrix::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  out.data = 0.0;
  out.consistency = 0.0;

  if (net.has_input()) {
    for (std::size_t e = 0; e < out.gradient.size(); ++e) {
      const Matrix d = net.map(e) - net.input(e);
      out.data += d.cwiseAbs().sum();
      out.gradient[e] += d.unaryExpr(&sign);
    }
  }
  std::vector<Term> terms;
  for (const auto& obs : net.observations()) {
    const auto edges = path_edges(net.graph(), obs.path);
    const Matrix d = product(net, edges) - obs.target;
    out.data += d.cwiseAbs().sum();
    terms.clear();
    backprop_path(net, edges, d.unaryExpr(&sign), 1.0, terms);
    for (const auto& t : terms) out.gradient[t.edge] += t.value;
  }

  if (exec == Execution::serial) {
    PairContribution c;
    for (const auto& pair : pairs) {
      pair_contribution(net, pair, lambda, c);
      out.consistency += c.squared;
      for (const auto& t : c.terms) out.gradient[t.edge] += t.value;
    }
  } else {
    std::vector<PairContribution> contributions(pairs.size());
    for_each_index(Execution::parallel, pairs.size(),
                   [&](std::size_t i) { pair_contribution(net, pairs[i], lambda, contributions[i]); });
    for (const auto& c : contributions) {
      out.consistency += c.squared;
      for (const auto& t : c.terms) out.gradient[t.edge] += t.value;
    }
  }
  out.value = out.data + lambda * out.consistency;
}

}  // namespace detail

ObjectiveEvaluation evaluate_objective(const MapNetwork& net, const Basis& basis, double lambda,
                                       Execution exec) {
  const auto pairs = detail::compile_basis(net.graph(), basis);
  ObjectiveEvaluation out;
  detail::evaluate_objective(net, pairs, lambda, exec, out);
  return out;
}

Matrix path_map(const MapNetwork& net, const Path& p) {
  return product(net, detail::path_edges(net.graph(), p));
}

Residual basis_residual(const MapNetwork& net, const Basis& basis) {
  Residual r;
  for (const auto& entry : basis) {
    const double dev = (path_map(net, entry.pair.p) - path_map(net, entry.pair.q)).norm();
    r.total += dev * dev;
    r.max_deviation = std::max(r.max_deviation, dev);
  }
  return r;
}

namespace {

void collect_walks(const MapNetwork& net, VertexId at, const Matrix& so_far, std::size_t remaining,
                   std::vector<std::vector<Matrix>>& by_end) {
  by_end[at].push_back(so_far);
  if (remaining == 0) return;
  const auto heads = net.graph().out(at);
  const auto ids = net.graph().out_edge_ids(at);
  for (std::size_t k = 0; k < heads.size(); ++k) {
    collect_walks(net, heads[k], net.map(ids[k]) * so_far, remaining - 1, by_end);
  }
}

PathDeviation deviation_from(const MapNetwork& net, VertexId source, std::size_t max_len) {
  std::vector<std::vector<Matrix>> by_end(net.graph().vertex_count());
  collect_walks(net, source, identity(net.dim()), max_len, by_end);
  PathDeviation d;
  for (const auto& maps : by_end) {
    for (std::size_t i = 0; i < maps.size(); ++i) {
      for (std::size_t j = i + 1; j < maps.size(); ++j) {
        const double sq = (maps[i] - maps[j]).squaredNorm();
        d.sum_squared += sq;
        d.max_deviation = std::max(d.max_deviation, std::sqrt(sq));
        ++d.pair_count;
      }
    }
  }
  return d;
}

}  // namespace

PathDeviation all_pairs_deviation(const MapNetwork& net, std::size_t max_len, Execution exec) {
  const std::size_t n = net.graph().vertex_count();
  std::vector<PathDeviation> per_source(n);
  for_each_index(exec, n, [&](std::size_t u) {
    per_source[u] = deviation_from(net, static_cast<VertexId>(u), max_len);
  });
  PathDeviation total;
  for (const auto& d : per_source) {
    total.sum_squared += d.sum_squared;
    total.max_deviation = std::max(total.max_deviation, d.max_deviation);
    total.pair_count += d.pair_count;
  }
  return total;
}

}  // namespace pinet
