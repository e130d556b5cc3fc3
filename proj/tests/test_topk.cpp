#include <doctest.h>

#include <algorithm>
#include <map>

#include "flowmotif/topk.hpp"
#include "oracle.hpp"
#include "testutil.hpp"

using namespace flowmotif;

namespace {

TimeSeriesGraph load_fixture(const std::string& name) {
  return load_graph(fmtest::fixture_path(name));
}

std::pair<std::vector<StructuralMatch>, std::uint32_t> cycle3_match_starting(
    const TimeSeriesGraph& g, const std::string& start) {
  auto matches = find_structural_matches(g, builtin(BuiltinKind::Cycle, 3));
  for (std::uint32_t i = 0; i < matches.size(); ++i) {
    if (g.node_name(matches[i].vertex_map[0]) == start) return {matches, i};
  }
  REQUIRE(false);
  return {matches, 0};
}

std::vector<std::vector<Timestamp>> timestamps_of(const TimeSeriesGraph& g,
                                                  const StructuralMatch& match,
                                                  const std::vector<EdgeAssignment>& edges) {
  std::vector<std::vector<Timestamp>> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& series = g.pair(match.edge_seq[i]);
    std::vector<Timestamp> ts;
    for (std::uint32_t k = edges[i].begin; k < edges[i].end; ++k) ts.push_back(series.events[k].t);
    out.push_back(std::move(ts));
  }
  return out;
}

}  // namespace

TEST_CASE("dp table reproduces the worked trace") {
  auto g = load_fixture("table3.graph");
  auto [matches, mi] = cycle3_match_starting(g, "u2");
  const Window w{10, 20, false};
  auto table = dp_table(g, matches[mi], w);

  CHECK(table.timestamps ==
        std::vector<Timestamp>{10, 11, 13, 14, 15, 16, 18, 19});
  CHECK(table.rows[0] == std::vector<Flow>{5, 5, 7, 7, 7, 7, 10, 10});
  CHECK(table.final_value() == 5);
  CHECK(dp_maxflow(g, matches[mi], w) == 5);

  // Row 2 at t_i = 16: value 5 with split t_j = 11.
  CHECK(table.rows[1][5] == 5);
  CHECK(table.timestamps[table.split[0][5]] == 11);

  auto witness = dp_witness(g, matches[mi], w, table);
  REQUIRE(!witness.empty());
  auto inst = make_instance(g, matches[mi], mi, witness);
  CHECK(inst.flow == 5);
}

TEST_CASE("single-edge dp is the total in-window flow") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = fmtest::random_graph(seed);
    auto matches = find_structural_matches(g, builtin(BuiltinKind::Chain, 2));
    for (const auto& match : matches) {
      for (const auto& w : candidate_windows(g, match, 6)) {
        const auto& series = g.pair(match.edge_seq[0]);
        CHECK(dp_maxflow(g, match, w) ==
              series.range_sum(series.lower(w.start), series.upper(w.end)));
      }
    }
  }
}

TEST_CASE("dp equals the oracle's per-window max flow") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    auto g = fmtest::random_graph(seed);
    for (auto base : {builtin(BuiltinKind::Chain, 3), builtin(BuiltinKind::Cycle, 3)}) {
      const double delta = 7;
      for (const auto& match : find_structural_matches(g, base)) {
        for (const auto& w : candidate_windows(g, match, delta)) {
          CHECK(dp_maxflow(g, match, w) ==
                fmtest::oracle_window_max_flow(g, match, delta, w.start, w.end));
          CHECK(dp_maxflow(g, match, w) == dp_table(g, match, w).final_value());
        }
      }
    }
  }
}

TEST_CASE("dp rows never decrease along the window") {
  for (std::uint64_t seed = 30; seed <= 45; ++seed) {
    auto g = fmtest::random_graph(seed);
    for (const auto& match : find_structural_matches(g, builtin(BuiltinKind::Chain, 4))) {
      for (const auto& w : candidate_windows(g, match, 9)) {
        auto table = dp_table(g, match, w);
        for (const auto& row : table.rows) {
          for (std::size_t i = 1; i < row.size(); ++i) {
            CHECK(row[i] >= row[i - 1]);
          }
        }
      }
    }
  }
}

TEST_CASE("top1 on the walkthrough graph") {
  auto g = load_fixture("fig6.graph");
  Motif m33 = builtin(BuiltinKind::Cycle, 3);
  auto best = top1(g, m33, 10);
  REQUIRE(best.has_value());
  CHECK(best->flow == 5);
  const auto matches = find_structural_matches(g, m33);
  CHECK(timestamps_of(g, matches[best->match_idx], best->instance.edges) ==
        std::vector<std::vector<Timestamp>>{{10}, {11, 16}, {19}});
}

TEST_CASE("top1 is absent without a structural match") {
  std::vector<InteractionRecord> records = {{"a", "b", 1, 1, 0}, {"b", "c", 2, 1, 0}};
  auto g = TimeSeriesGraph::ingest(records);
  CHECK(!top1(g, builtin(BuiltinKind::Cycle, 3), 10).has_value());
}

TEST_CASE("top1 equals the best enumerated flow") {
  for (std::uint64_t seed = 50; seed <= 80; ++seed) {
    auto g = fmtest::random_graph(seed);
    for (auto base : {builtin(BuiltinKind::Chain, 3), builtin(BuiltinKind::Cycle, 3)}) {
      Motif motif = base;
      motif.set_delta(8);
      motif.set_phi(0);
      auto result = enumerate_instances(g, motif);
      auto best = top1(g, base, 8);
      if (result.instances.empty()) {
        CHECK(!best.has_value());
      } else {
        Flow max_flow = 0;
        for (const auto& inst : result.instances) max_flow = std::max(max_flow, inst.flow);
        REQUIRE(best.has_value());
        CHECK(best->flow == max_flow);
        CHECK(best->instance.flow == best->flow);
      }
    }
  }
}

TEST_CASE("topk on the walkthrough graph") {
  auto g = load_fixture("fig6.graph");
  auto result = topk(g, builtin(BuiltinKind::Cycle, 3), 10, 1);
  REQUIRE(result.instances.size() == 1);
  CHECK(result.instances[0].flow == 5);
  CHECK(timestamps_of(g, result.matches[result.instances[0].match_idx],
                      result.instances[0].edges) ==
        std::vector<std::vector<Timestamp>>{{10}, {11, 16}, {19}});
}

TEST_CASE("topk equals the flow-ranked truncation of enumerate") {
  for (std::uint64_t seed = 90; seed <= 120; ++seed) {
    auto g = fmtest::random_graph(seed);
    Motif motif = builtin(BuiltinKind::Chain, 3);
    motif.set_delta(9);
    motif.set_phi(0);
    auto all = enumerate_instances(g, motif);
    std::sort(all.instances.begin(), all.instances.end(), RanksBefore{});

    for (std::size_t k : {std::size_t{1}, std::size_t{3}, all.instances.size() + 5}) {
      auto result = topk(g, motif, 9, k);
      const std::size_t expected = std::min(k, all.instances.size());
      REQUIRE(result.instances.size() == expected);
      for (std::size_t i = 0; i < expected; ++i) {
        CHECK(result.instances[i] == all.instances[i]);
      }
      if (!result.instances.empty()) {
        CHECK(result.instances[0].flow == top1(g, motif, 9)->flow);
      }
    }
  }
}

TEST_CASE("topk is identical across thread counts") {
  for (std::uint64_t seed = 130; seed <= 135; ++seed) {
    auto g = fmtest::random_graph(seed, 20);
    auto a = topk(g, builtin(BuiltinKind::Cycle, 3), 10, 4, 1);
    auto b = topk(g, builtin(BuiltinKind::Cycle, 3), 10, 4, 4);
    CHECK(a.instances == b.instances);
  }
}

TEST_CASE("per-match grouping keeps only feasible matches") {
  auto g = load_fixture("fig2.graph");
  auto grouped = top1_grouped(g, builtin(BuiltinKind::Cycle, 3), 10, GroupBy::Match);
  REQUIRE(grouped.matches.size() == 3);
  // Only the u3->u1->u2->u3 rotation admits a time-respecting instance; the
  // oracle's per-match max is 0 for the other two rotations.
  REQUIRE(grouped.by_match.size() == 1);
  CHECK(g.node_name(grouped.matches[grouped.by_match[0].match_idx].vertex_map[0]) == "u3");
  CHECK(grouped.by_match[0].flow == 10);

  // Cross-check every feasible match against the oracle.
  for (const auto& row : grouped.by_match) {
    double oracle_best = 0;
    for (const auto& w : candidate_windows(g, grouped.matches[row.match_idx], 10)) {
      oracle_best = std::max(oracle_best, fmtest::oracle_window_max_flow(
                                              g, grouped.matches[row.match_idx], 10, w.start, w.end));
    }
    CHECK(row.flow == oracle_best);
  }
}

TEST_CASE("per-window grouping merges across matches") {
  auto g = load_fixture("fig6.graph");
  auto grouped = top1_grouped(g, builtin(BuiltinKind::Cycle, 3), 10, GroupBy::Window);

  std::map<Timestamp, Flow> expected;
  for (const auto& match : grouped.matches) {
    for (const auto& w : candidate_windows(g, match, 10)) {
      if (w.skippable) continue;
      Flow f = fmtest::oracle_window_max_flow(g, match, 10, w.start, w.end);
      if (f > 0) {
        auto [it, inserted] = expected.emplace(w.start, f);
        if (!inserted) it->second = std::max(it->second, f);
      }
    }
  }
  REQUIRE(grouped.by_window.size() == expected.size());
  for (const auto& row : grouped.by_window) {
    CHECK(expected.at(row.window.start) == row.flow);
  }
  // The worked example's window [10, 20] carries flow 5.
  bool found = false;
  for (const auto& row : grouped.by_window) {
    if (row.window.start == 10) {
      CHECK(row.flow == 5);
      CHECK(row.window.end == 20);
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("grouping on an empty graph is empty") {
  auto g = TimeSeriesGraph::ingest({});
  auto grouped = top1_grouped(g, builtin(BuiltinKind::Cycle, 3), 10, GroupBy::Window);
  CHECK(grouped.by_window.empty());
  CHECK(grouped.by_match.empty());
}
