#include <doctest.h>

#include "pinet/dag_basis.hpp"
#include "pinet/general_basis.hpp"
#include "pinet/oracle.hpp"
#include "pinet/scg_basis.hpp"
#include "support/random_graphs.hpp"

using namespace pinet;
using pinet::testing::graph_of;
using pinet::testing::Labels;

namespace {

DirectedGraph two_two_cycles() {
  return graph_of({{"a", "b"}, {"b", "a"}, {"c", "d"}, {"d", "c"}, {"a", "c"}, {"b", "d"}});
}

}  // namespace

TEST_CASE("cross_edge_pairs on two 2-cycles") {
  auto g = two_two_cycles();
  Labels L{g};
  auto scc = tarjan_scc(g);
  auto c = contract_graph(g, scc);
  auto b = cross_edge_pairs(g, scc, 0, 1, c.cross(0, 1));
  REQUIRE(b.size() == 1);
  CHECK(b[0].pair.p == L.path({"a", "b", "d"}));
  CHECK(b[0].pair.q == L.path({"a", "c", "d"}));
  CHECK(b[0].tag == Provenance::cross_edge);

  std::vector<Edge> single{{L("a"), L("c")}};
  CHECK(cross_edge_pairs(g, scc, 0, 1, single).empty());

  std::vector<Edge> wrong{{L("a"), L("b")}};
  try {
    cross_edge_pairs(g, scc, 0, 1, wrong);
    FAIL("expected NotCrossEdges");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotCrossEdges);
  }
}

TEST_CASE("three parallel cross edges between two 3-cycles") {
  auto g = graph_of({{"a", "b"}, {"b", "c"}, {"c", "a"}, {"x", "y"}, {"y", "z"}, {"z", "x"},
                     {"a", "x"}, {"b", "y"}, {"c", "z"}});
  auto scc = tarjan_scc(g);
  auto c = contract_graph(g, scc);
  auto tree = cross_edge_tree(g, scc, 0, 1, c.cross(0, 1));
  CHECK(tree.nodes.size() == 3);
  CHECK(tree.tree_edges.size() == 2);
  // a->b plus x->y = 2, a->c plus x->z = 4, b->c plus y->z = 2
  CHECK(tree.weights == std::vector<std::size_t>{2, 2});
  CHECK(cross_edge_pairs(g, scc, 0, 1, c.cross(0, 1)).size() == 2);
}

TEST_CASE("cross-edge trees span their node sets") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = pinet::testing::random_digraph(8, 20, rng);
    auto scc = tarjan_scc(g);
    auto c = contract_graph(g, scc);
    for (const auto& [ij, edges] : c.cross_edges) {
      auto tree = cross_edge_tree(g, scc, ij.first, ij.second, edges);
      CHECK(tree.tree_edges.size() == edges.size() - 1);
      std::vector<std::size_t> parent(edges.size());
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x];
        return x;
      };
      for (auto [a, b] : tree.tree_edges) {
        CHECK(a < b);
        const auto ra = find(a), rb = find(b);
        CHECK(ra != rb);
        parent[ra] = rb;
      }
    }
  }
}

TEST_CASE("path_invariance_basis examples") {
  auto g = two_two_cycles();
  Labels L{g};
  auto b = path_invariance_basis(g);
  REQUIRE(b.size() == 3);
  std::vector<PathPair> expected{{L.path({"a", "b", "a"}), Path::empty(L("a"))},
                                 {L.path({"c", "d", "c"}), Path::empty(L("c"))},
                                 {L.path({"a", "b", "d"}), L.path({"a", "c", "d"})}};
  for (std::size_t k = 0; k < 3; ++k) CHECK(b[k].pair == expected[k]);

  CHECK(path_invariance_basis(DirectedGraph(0, std::vector<Edge>{})).empty());
}

TEST_CASE("lifting crosses through representatives") {
  // three SCCs in a diamond: {a,b} -> {c} , {a,b} -> {d}, {c} -> {e}, {d} -> {e}
  auto g = graph_of({{"a", "b"}, {"b", "a"}, {"b", "c"}, {"a", "d"}, {"c", "e"}, {"d", "e"}});
  Labels L{g};
  auto b = path_invariance_basis(g);
  std::size_t lifted = 0;
  for (const auto& entry : b) {
    CHECK(is_valid_in(entry.pair, g));
    if (entry.tag != Provenance::lifted) continue;
    ++lifted;
    CHECK(entry.pair.p == L.path({"a", "b", "c", "e"}));
    CHECK(entry.pair.q == L.path({"a", "d", "e"}));
  }
  CHECK(lifted == 1);
}

TEST_CASE("degeneracy to the DAG and SCG cases") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    auto dag = pinet::testing::random_dag(8, 14, rng);
    CHECK(sorted_pairs(path_invariance_basis(dag)) == sorted_pairs(dag_basis(dag)));
    auto scg = pinet::testing::random_strongly_connected(7, 6, rng);
    CHECK(sorted_pairs(path_invariance_basis(scg)) == sorted_pairs(scg_basis(scg).basis));
  }
}

TEST_CASE("bound, validity, order and serial/parallel agreement") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = pinet::testing::random_digraph(10, 25, rng);
    auto b = path_invariance_basis(g, Execution::parallel);
    CHECK(b.size() <= g.vertex_count() * g.edge_count());
    for (const auto& entry : b) CHECK(is_valid_in(entry.pair, g));
    CHECK(path_invariance_basis(g, Execution::serial) == b);
    // lifted, then per-component, then per-(i,j)
    int stage = 0;
    for (const auto& entry : b) {
      const int s = entry.tag == Provenance::lifted ? 0 : entry.tag == Provenance::cross_edge ? 2 : 1;
      CHECK(s >= stage);
      stage = s;
    }
  }
}

TEST_CASE("disconnected inputs equal the union of their pieces") {
  auto left = graph_of({{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
  auto both = graph_of({{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}, {"x", "y"}, {"y", "x"}});
  Labels L{both};
  auto b = path_invariance_basis(both);
  auto pairs = sorted_pairs(b);
  std::vector<PathPair> expected{{L.path({"a", "b", "d"}), L.path({"a", "c", "d"})},
                                 {L.path({"x", "y", "x"}), Path::empty(L("x"))}};
  std::sort(expected.begin(), expected.end());
  CHECK(pairs == expected);
  CHECK(verify_basis(both, b, 4, 4).verified);
}

TEST_CASE("closure validity on random general graphs") {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = pinet::testing::random_digraph(2 + trial % 5, 9, rng);
    const std::size_t n = g.vertex_count();
    auto report = verify_basis(g, path_invariance_basis(g), n, n);
    CHECK_MESSAGE(report.verified, "trial " << trial << " missing " << report.missing.size());
  }
}
