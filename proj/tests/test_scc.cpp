#include <doctest.h>

#include "pinet/dag_basis.hpp"
#include "pinet/scc.hpp"
#include "support/random_graphs.hpp"

using namespace pinet;
using pinet::testing::graph_of;
using pinet::testing::Labels;

namespace {

bool mutually_reachable(const DirectedGraph& g, VertexId a, VertexId b) {
  return bfs_distances(g, a, true)[b] != kUnreachable &&
         bfs_distances(g, b, true)[a] != kUnreachable;
}

}  // namespace

TEST_CASE("tarjan examples") {
  auto g = graph_of({{"a", "b"}, {"b", "a"}, {"b", "c"}});
  auto scc = tarjan_scc(g);
  REQUIRE(scc.size() == 2);
  CHECK(scc.components[0] == std::vector<VertexId>{0, 1});
  CHECK(scc.components[1] == std::vector<VertexId>{2});
  CHECK(scc.representative[0] == 0);

  auto chain = graph_of({{"a", "b"}, {"b", "c"}});
  CHECK(tarjan_scc(chain).size() == 3);

  auto tri = graph_of({{"a", "b"}, {"b", "c"}, {"c", "a"}});
  CHECK(tarjan_scc(tri).size() == 1);
}

TEST_CASE("tarjan agrees with brute-force mutual reachability") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = pinet::testing::random_digraph(8, 14, rng);
    auto scc = tarjan_scc(g);
    std::vector<int> seen(g.vertex_count(), 0);
    for (std::size_t c = 0; c < scc.size(); ++c) {
      CHECK(std::is_sorted(scc.components[c].begin(), scc.components[c].end()));
      CHECK(scc.representative[c] == scc.components[c].front());
      for (VertexId v : scc.components[c]) {
        ++seen[v];
        CHECK(scc.component_of[v] == c);
      }
    }
    for (int s : seen) CHECK(s == 1);
    for (VertexId a = 0; a < g.vertex_count(); ++a) {
      for (VertexId b = 0; b < g.vertex_count(); ++b) {
        CHECK((scc.component_of[a] == scc.component_of[b]) == mutually_reachable(g, a, b));
      }
    }
  }
}

TEST_CASE("contract_graph examples") {
  auto g = graph_of({{"a", "b"}, {"b", "a"}, {"c", "d"}, {"d", "c"}, {"a", "c"}, {"b", "d"}});
  Labels L{g};
  auto scc = tarjan_scc(g);
  auto c = contract_graph(g, scc);
  CHECK(c.dag.vertex_count() == 2);
  REQUIRE(c.dag.edge_count() == 1);
  const auto cross = c.cross(0, 1);
  REQUIRE(cross.size() == 2);
  CHECK(cross[0] == Edge{L("a"), L("c")});
  CHECK(cross[1] == Edge{L("b"), L("d")});

  auto dag = graph_of({{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
  auto cd = contract_graph(dag, tarjan_scc(dag));
  CHECK(cd.dag.edge_count() == 4);
  for (const auto& [ij, edges] : cd.cross_edges) CHECK(edges.size() == 1);

  auto one = graph_of({{"a", "b"}, {"b", "c"}, {"c", "a"}});
  auto c1 = contract_graph(one, tarjan_scc(one));
  CHECK(c1.dag.vertex_count() == 1);
  CHECK(c1.dag.edge_count() == 0);
}

TEST_CASE("contracted graph is acyclic, topologically indexed, and accounts for every edge") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = pinet::testing::random_digraph(9, 20, rng);
    auto scc = tarjan_scc(g);
    auto c = contract_graph(g, scc);
    CHECK(is_acyclic(c.dag));
    for (const Edge& e : c.dag.edges()) {
      CHECK(e.tail < e.head);
      CHECK_FALSE(c.cross(e.tail, e.head).empty());
    }
    std::size_t internal = 0, crossing = 0;
    for (const Edge& e : g.edges()) internal += scc.component_of[e.tail] == scc.component_of[e.head];
    for (const auto& [ij, edges] : c.cross_edges) {
      CHECK(c.dag.has_edge(ij.first, ij.second));
      crossing += edges.size();
      for (const Edge& e : edges) {
        CHECK(scc.component_of[e.tail] == ij.first);
        CHECK(scc.component_of[e.head] == ij.second);
      }
    }
    CHECK(internal + crossing == g.edge_count());
  }
}

TEST_CASE("induced_subgraph and strong connectivity") {
  auto g = graph_of({{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "b"}, {"c", "d"}});
  CHECK_FALSE(is_strongly_connected(g));
  std::vector<VertexId> keep{0, 1, 2};
  auto sub = induced_subgraph(g, keep);
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.edge_count() == 4);
  CHECK(is_strongly_connected(sub));
}
