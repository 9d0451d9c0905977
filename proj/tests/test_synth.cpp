#include <doctest.h>

#include "pinet/synth.hpp"

using namespace pinet;

TEST_CASE("random_orthogonal is orthogonal and seeded") {
  std::mt19937_64 a(1), b(1);
  const Matrix q = random_orthogonal(6, a);
  CHECK((q.transpose() * q - Matrix::Identity(6, 6)).norm() < 1e-12);
  CHECK(q == random_orthogonal(6, b));
}

TEST_CASE("sampled graphs are weakly connected and labelled") {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 20; ++k) {
    auto g = sample_weakly_connected(8, 0.3, 1000, rng);
    CHECK(g.vertex_count() == 8);
    CHECK(g.label(3) == "v3");
    std::vector<bool> seen(8, false);
    std::vector<VertexId> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (auto nb : {g.out(x), g.in(x)}) {
        for (VertexId y : nb) {
          if (!seen[y]) {
            seen[y] = true;
            stack.push_back(y);
          }
        }
      }
    }
    CHECK(std::count(seen.begin(), seen.end(), true) == 8);
  }
  try {
    sample_weakly_connected(30, 0.001, 3, rng);
    FAIL("expected GraphSamplingFailed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::GraphSamplingFailed);
  }
  CHECK_THROWS_AS(sample_weakly_connected(1, 0.5, 3, rng), Error);
}

TEST_CASE("noise-free experiment stays at ground truth") {
  SynthConfig c;
  c.noise_sigma = 0.0;
  c.outlier_frac = 0.0;
  c.vertices = 6;
  c.dim = 4;
  const auto r = synth_experiment(c);
  CHECK(r.error_before == 0.0);
  CHECK(r.error_after == 0.0);
  CHECK(r.epochs == 200);
}

TEST_CASE("two-vertex experiments") {
  SynthConfig c;
  c.vertices = 2;
  c.edge_prob = 1.0;
  c.noise_sigma = 0.0;
  const auto r = synth_experiment(c);
  CHECK(r.error_before == 0.0);
  CHECK(r.error_after == 0.0);

  // a single edge has nothing to synchronise against
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SynthConfig one;
    one.vertices = 2;
    one.edge_prob = 0.5;
    one.seed = seed;
    std::optional<ExperimentData> data;
    const auto s = synth_experiment(one, &data);
    if (data->ground_truth.graph().edge_count() != 1) continue;
    CHECK(s.basis_size == 0);
    CHECK(s.error_after == s.error_before);
  }
}

TEST_CASE("experiment improves the default noisy instance and is reproducible") {
  SynthConfig c;
  c.seed = 4;
  std::optional<ExperimentData> data;
  const auto r = synth_experiment(c, &data);
  CHECK(r.error_after < r.error_before);
  CHECK(r.seed == 4);
  CHECK(r.basis_size > 0);
  const auto again = synth_experiment(c);
  CHECK(again.error_after == r.error_after);
  CHECK(again.all_pairs_residual_final == r.all_pairs_residual_final);
  REQUIRE(data);
  CHECK(data->ground_truth.dim() == 10);
  CHECK(data->optimized.has_input());
}

TEST_CASE("invalid configurations") {
  SynthConfig c;
  c.outlier_frac = 1.0;
  CHECK_THROWS_AS(synth_experiment(c), Error);
  c = SynthConfig{};
  c.noise_sigma = -1.0;
  CHECK_THROWS_AS(synth_experiment(c), Error);
}
