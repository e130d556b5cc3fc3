#include <doctest.h>

#include <algorithm>

#include "flowmotif/significance.hpp"
#include "testutil.hpp"

using namespace flowmotif;

TEST_CASE("a single-interaction graph is unchanged by permutation") {
  std::vector<InteractionRecord> records = {{"a", "b", 1, 3, 0}};
  auto g = TimeSeriesGraph::ingest(records);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    CHECK(permute_flows(g, seed) == g);
  }
}

TEST_CASE("permutation conserves the flow multiset and the timestamps") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    auto g = fmtest::random_graph(seed);
    auto permuted = permute_flows(g, seed * 31 + 7);

    auto flows_a = g.flow_values();
    auto flows_b = permuted.flow_values();
    std::sort(flows_a.begin(), flows_a.end());
    std::sort(flows_b.begin(), flows_b.end());
    CHECK(flows_a == flows_b);

    REQUIRE(g.pair_count() == permuted.pair_count());
    for (PairIdx p = 0; p < g.pair_count(); ++p) {
      CHECK(g.pair(p).u == permuted.pair(p).u);
      CHECK(g.pair(p).v == permuted.pair(p).v);
      REQUIRE(g.pair(p).size() == permuted.pair(p).size());
      for (std::size_t i = 0; i < g.pair(p).size(); ++i) {
        CHECK(g.pair(p).events[i].t == permuted.pair(p).events[i].t);
      }
    }
  }
}

TEST_CASE("structural matches are untouched by flow permutation") {
  auto g = load_graph(fmtest::fixture_path("fig2.graph"));
  Motif m33 = builtin(BuiltinKind::Cycle, 3);
  auto before = find_structural_matches(g, m33);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CHECK(find_structural_matches(permute_flows(g, seed), m33) == before);
  }
}

TEST_CASE("with phi = 0 the permuted instance sets match the real one") {
  for (std::uint64_t seed = 40; seed <= 55; ++seed) {
    auto g = fmtest::random_graph(seed);
    Motif motif = builtin(BuiltinKind::Chain, 3);
    motif.set_delta(8);
    motif.set_phi(0);
    const std::size_t real = enumerate_instances(g, motif).instances.size();
    for (std::uint64_t s = 1; s <= 4; ++s) {
      CHECK(enumerate_instances(permute_flows(g, s), motif).instances.size() == real);
    }
  }
}

TEST_CASE("z-score formula and the sigma = 0 flag") {
  CHECK(z_score(10, 4, 2) == 3);
  CHECK(!z_score(10, 4, 0).has_value());
}

TEST_CASE("significance run with phi = 0 degenerates as expected") {
  auto g = fmtest::random_graph(3);
  Motif motif = builtin(BuiltinKind::Chain, 3);
  motif.set_delta(8);
  motif.set_phi(0);
  auto report = significance_run(g, motif, 5, 17);
  for (std::size_t c : report.sample_counts) CHECK(c == report.real_count);
  CHECK(report.stddev == 0);
  CHECK(!report.z.has_value());
  CHECK(report.p_value == 0);
}

TEST_CASE("a single lower sample gives p = 0") {
  // Planted high-flow chain: permutations that split the two 100s lower the count.
  std::vector<InteractionRecord> records = {
      {"a", "b", 1, 100, 0}, {"b", "c", 2, 100, 0},
      {"a", "x", 5, 1, 0},   {"x", "y", 6, 1, 0},  {"y", "z", 7, 1, 0},
  };
  auto g = TimeSeriesGraph::ingest(records);
  Motif motif = builtin(BuiltinKind::Chain, 3);
  motif.set_delta(10);
  motif.set_phi(100);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto report = significance_run(g, motif, 1, seed);
    if (report.sample_counts[0] < report.real_count) {
      CHECK(report.p_value == 0);
    }
  }
}

TEST_CASE("reports are bit-identical for identical inputs") {
  auto g = fmtest::random_graph(9);
  Motif motif = builtin(BuiltinKind::Chain, 3);
  motif.set_delta(6);
  motif.set_phi(4);
  auto a = significance_run(g, motif, 8, 123);
  auto b = significance_run(g, motif, 8, 123);
  CHECK(a.real_count == b.real_count);
  CHECK(a.sample_counts == b.sample_counts);
  CHECK(a.mean == b.mean);
  CHECK(a.stddev == b.stddev);
  CHECK(a.z == b.z);
  CHECK(a.p_value == b.p_value);

  // Thread count must not change any count.
  auto threaded = significance_run(g, motif, 8, 123, "motif", 4);
  CHECK(threaded.sample_counts == a.sample_counts);
}
