#include <doctest.h>

#include "pinet/general_basis.hpp"
#include "pinet/map_network.hpp"
#include "pinet/synth.hpp"
#include "support/naive_closure.hpp"
#include "support/random_graphs.hpp"

using namespace pinet;
using pinet::testing::graph_of;
using pinet::testing::Labels;

namespace {

Matrix random_matrix(std::size_t m, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  Matrix x(m, m);
  for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = n(rng);
  return x;
}

void randomize(MapNetwork& net, std::mt19937_64& rng) {
  for (std::size_t e = 0; e < net.graph().edge_count(); ++e) net.set_map(e, random_matrix(net.dim(), rng));
}

MapNetwork potential_network(const DirectedGraph& g, std::size_t m, std::mt19937_64& rng) {
  std::vector<Matrix> y;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) y.push_back(random_orthogonal(m, rng));
  MapNetwork net(g, m);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    net.set_map(e, y[g.edge(e).head] * y[g.edge(e).tail].transpose());
  }
  return net;
}

}  // namespace

TEST_CASE("maps start as identities and are shape checked") {
  auto g = graph_of({{"a", "b"}, {"b", "c"}});
  MapNetwork net(g, 3);
  CHECK(net.map(0) == Matrix::Identity(3, 3));
  CHECK_THROWS_AS(net.set_map(0, Matrix::Zero(2, 2)), Error);
  CHECK_FALSE(net.has_input());
  CHECK_THROWS_AS(net.set_inputs({Matrix::Zero(3, 3)}), Error);
  try {
    net.map(2, 0);
    FAIL("expected MissingEdgeMatrix");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingEdgeMatrix);
  }
}

TEST_CASE("path_map examples") {
  auto g = graph_of({{"a", "b"}, {"b", "c"}});
  Labels L{g};
  std::mt19937_64 rng(71);
  MapNetwork net(g, 3);
  const Matrix a = random_matrix(3, rng), b = random_matrix(3, rng);
  net.set_map(0, a);
  net.set_map(1, b);
  CHECK(path_map(net, Path::empty(L("a"))) == Matrix::Identity(3, 3));
  CHECK(path_map(net, L.path({"a", "b"})) == a);
  CHECK((path_map(net, L.path({"a", "b", "c"})) - b * a).norm() < 1e-14);
  CHECK_THROWS_AS(path_map(net, L.path({"c", "b"})), Error);
}

TEST_CASE("path_map is a homomorphism") {
  std::mt19937_64 rng(72);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = pinet::testing::random_strongly_connected(5, 4, rng);
    MapNetwork net(g, 3);
    randomize(net, rng);
    auto walk = [&](VertexId from, int steps) {
      std::vector<VertexId> seq{from};
      for (int s = 0; s < steps; ++s) {
        auto nb = g.out(seq.back());
        seq.push_back(nb[rng() % nb.size()]);
      }
      return Path(seq);
    };
    const Path p = walk(static_cast<VertexId>(trial % 5), 1 + trial % 3);
    const Path q = walk(p.end(), trial % 4);
    const Matrix lhs = path_map(net, concat(p, q));
    const Matrix rhs = path_map(net, q) * path_map(net, p);
    CHECK((lhs - rhs).norm() <= 1e-12 * std::max(1.0, rhs.norm()));
  }
}

TEST_CASE("basis_residual examples") {
  std::mt19937_64 rng(73);
  auto g = pinet::testing::random_digraph(6, 12, rng);
  auto net = potential_network(g, 4, rng);
  CHECK(basis_residual(net, path_invariance_basis(g)).total <= 1e-10);

  auto two = graph_of({{"a", "b"}, {"b", "a"}});
  Labels T{two};
  Basis cyc;
  cyc.add({T.path({"a", "b", "a"}), Path::empty(T("a"))}, Provenance::scg_cycle);
  CHECK(basis_residual(MapNetwork(two, 3), cyc).total == 0.0);

  auto diamond = graph_of({{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
  Labels D{diamond};
  auto dn = potential_network(diamond, 3, rng);
  const Matrix delta = 0.1 * random_matrix(3, rng);
  const auto cd = *diamond.edge_index(D("c"), D("d"));
  const auto ac = *diamond.edge_index(D("a"), D("c"));
  dn.set_map(cd, dn.map(cd) + delta);
  Basis single;
  single.add({D.path({"a", "b", "d"}), D.path({"a", "c", "d"})}, Provenance::dag);
  const auto r = basis_residual(dn, single);
  const double expected = (delta * dn.map(ac)).squaredNorm();
  CHECK(r.total == doctest::Approx(expected).epsilon(1e-10));
  CHECK(r.max_deviation == doctest::Approx(std::sqrt(expected)).epsilon(1e-10));
}

TEST_CASE("all_pairs_deviation matches enumeration and is execution independent") {
  std::mt19937_64 rng(74);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = pinet::testing::random_digraph(5, 8, rng);
    MapNetwork net(g, 2);
    randomize(net, rng);
    const std::size_t len = 4;
    double sum = 0.0, worst = 0.0;
    std::size_t count = 0;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto walks = enumerate_paths(g, u, v, len);
        for (std::size_t i = 0; i < walks.size(); ++i) {
          for (std::size_t j = i + 1; j < walks.size(); ++j) {
            const double d = (path_map(net, walks[i]) - path_map(net, walks[j])).norm();
            sum += d * d;
            worst = std::max(worst, d);
            ++count;
          }
        }
      }
    }
    const auto serial = all_pairs_deviation(net, len, Execution::serial);
    const auto parallel = all_pairs_deviation(net, len, Execution::parallel);
    CHECK(serial.pair_count == count);
    CHECK(serial.sum_squared == doctest::Approx(sum).epsilon(1e-9));
    CHECK(serial.max_deviation == doctest::Approx(worst).epsilon(1e-9));
    CHECK(parallel.sum_squared == serial.sum_squared);
    CHECK(parallel.max_deviation == serial.max_deviation);
  }
}

TEST_CASE("objective value decomposes into data and consistency terms") {
  std::mt19937_64 rng(75);
  auto g = pinet::testing::random_digraph(4, 8, rng);
  MapNetwork net(g, 3);
  randomize(net, rng);
  std::vector<Matrix> inputs;
  for (std::size_t e = 0; e < g.edge_count(); ++e) inputs.push_back(random_matrix(3, rng));
  net.set_inputs(inputs);
  const auto basis = path_invariance_basis(g);
  const auto eval = evaluate_objective(net, basis, 0.7);
  double data = 0.0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) data += (net.map(e) - inputs[e]).cwiseAbs().sum();
  CHECK(eval.data == doctest::Approx(data));
  CHECK(eval.consistency == doctest::Approx(basis_residual(net, basis).total));
  CHECK(eval.value == doctest::Approx(data + 0.7 * eval.consistency));
}

TEST_CASE("observations along shortest paths enter the data term") {
  auto chain = graph_of({{"a", "b"}, {"b", "c"}});
  Labels L{chain};
  MapNetwork net(chain, 2);
  Matrix target(2, 2);
  target << 1, 2, 3, 4;
  net.add_observation(L("a"), L("c"), target);
  REQUIRE(net.observations().size() == 1);
  CHECK(net.observations()[0].path == L.path({"a", "b", "c"}));
  const auto eval = evaluate_objective(net, Basis{}, 1.0);
  CHECK(eval.data == doctest::Approx((Matrix::Identity(2, 2) - target).cwiseAbs().sum()));
  CHECK_THROWS_AS(net.add_observation(L("c"), L("a"), target), Error);
}

TEST_CASE("serial and parallel objectives are bit identical") {
  std::mt19937_64 rng(76);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = pinet::testing::random_digraph(7, 16, rng);
    MapNetwork net(g, 4);
    randomize(net, rng);
    std::vector<Matrix> inputs;
    for (std::size_t e = 0; e < g.edge_count(); ++e) inputs.push_back(random_matrix(4, rng));
    net.set_inputs(inputs);
    const auto basis = path_invariance_basis(g);
    const auto s = evaluate_objective(net, basis, 3.0, Execution::serial);
    const auto p = evaluate_objective(net, basis, 3.0, Execution::parallel);
    CHECK(s.value == p.value);
    for (std::size_t e = 0; e < g.edge_count(); ++e) CHECK(s.gradient[e] == p.gradient[e]);
  }
}

TEST_CASE("consistency gradient matches central differences on 3-vertex instances") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = pinet::testing::random_strongly_connected(3, 2, rng);
    MapNetwork net(g, 3);
    randomize(net, rng);
    const auto basis = path_invariance_basis(g);
    const double lambda = 0.5;
    const auto eval = evaluate_objective(net, basis, lambda);
    double num = 0.0, den = 0.0;
    const double h = 1e-6;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      for (Eigen::Index i = 0; i < 9; ++i) {
        MapNetwork plus = net, minus = net;
        plus.maps()[e](i) += h;
        minus.maps()[e](i) -= h;
        const double fd = (evaluate_objective(plus, basis, lambda).value -
                           evaluate_objective(minus, basis, lambda).value) /
                          (2 * h);
        num += (fd - eval.gradient[e](i)) * (fd - eval.gradient[e](i));
        den += fd * fd;
      }
    }
    CHECK(std::sqrt(num / std::max(den, 1e-300)) < 1e-5);
  }
}
